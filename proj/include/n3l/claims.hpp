// Counterexample search over the conjectured properties of the reciprocal
// compression calculus.  Each checker sweeps a finite exact domain, records
// violations as self-verifying witnesses, and emits a deterministic report:
// identical domains give byte-identical JSON whatever the thread count.
#pragma once

#include <n3l/compression.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace n3l {

using Json = nlohmann::ordered_json;

enum class ClaimId {
  kInvolution,   // V_m(V_m(x)) = x
  kDecider,      // z in B(y)  <=>  gap(z) < gap(y)
  kBallnest,     // y in B(x)  =>  B(y) subset of B(x)
  kAdmissible,   // y on boundary of B(x)  <=>  B(y) = B(x) and equal gaps
  kCornerstone,  // a on L(x)  =>  V_m(a) on L(x)
  kGapShell,     // no grid vector attains gap^2 = n^(2d)
};

std::string claim_name(ClaimId id);
ClaimId claim_from_name(const std::string& name);

/// Search domain for a claim sweep.  For distinct-naturals claims the
/// vectors are the strictly increasing d-tuples over {1..max_coord}; the
/// admissibility sweep additionally ranges candidates over ordered tuples
/// from the reciprocal closure {k, m/k : k <= max_coord}; the gap-shell
/// sweep scans every distinct-coordinate tuple of the grid {1..n}^d.
struct ClaimDomain {
  int dim = 2;
  long max_coord = 2;
  Rat scale = 1;
  std::string kind = "distinct-naturals";
};

struct Counterexample {
  /// symbol -> exact value; vectors as arrays of "p/q" strings, scalars as
  /// "p/q" strings.  Holds enough to re-evaluate the claim from scratch.
  Json witness;
  std::string direction;  // "forward" | "backward"
  std::string lhs;
  std::string rhs;
};

struct ClaimReport {
  ClaimId claim;
  ClaimDomain domain;
  long cases_checked = 0;
  std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples, in sweep order
  long counterexamples_total = 0;
  bool truncated = false;
  long skipped = 0;                   // cornerstone only: degenerate lambda points
  std::vector<std::string> nearest_below;  // gap-shell only
  std::vector<std::string> nearest_above;  // gap-shell only

  bool refuted() const { return counterexamples_total > 0; }
  Json to_json() const;
};

inline constexpr long kMaxCounterexamples = 100;

ClaimReport check_involution(const ClaimDomain& domain, int threads = 1);
ClaimReport check_decider(const ClaimDomain& domain, int threads = 1);
ClaimReport check_ballnest(const ClaimDomain& domain, int threads = 1);
ClaimReport check_admissible_equiv(const ClaimDomain& domain, int threads = 1);
ClaimReport check_cornerstone(const ClaimDomain& domain, const std::vector<Rat>& lambdas,
                              int threads = 1);
ClaimReport check_gap_shell(long n, int dim, const Scale& scale, int threads = 1);

/// Re-evaluates a stored counterexample from its witness alone and confirms
/// it still violates the claim with the recorded lhs/rhs.  Reports are
/// self-verifying; this is the check.
bool recheck_counterexample(ClaimId claim, const Rat& scale, const Counterexample& ce);

/// The strictly increasing d-tuples over {1..max_coord}, in lexicographic
/// order.  Shared by the sweeps and exposed for tests.
std::vector<std::vector<long>> ascending_tuples(long max_coord, int dim);

}  // namespace n3l
