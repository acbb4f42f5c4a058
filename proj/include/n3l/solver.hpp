// Exact maximum no-three-in-line solver: depth-first branch and bound over
// the grid cells with incremental direction hashing, axis-line capacity
// bounds, and optional symmetry reduction of the first branch.
#pragma once

#include <n3l/collinear.hpp>

#include <json.hpp>

#include <optional>

namespace n3l {

struct SolveOptions {
  double time_limit_s = 0.0;  // 0 = no limit
  int threads = 1;
  bool symmetry_reduction = false;
};

struct SolveResult {
  long n = 0;
  int dim = 0;
  long max_count = 0;
  PointSet witness;
  long long nodes_explored = 0;  // nodes of the deterministic canonical pass
  long long time_ms = 0;
  bool optimal = true;

  nlohmann::ordered_json to_json(const std::string& witness_file, bool with_timing) const;
};

/// Maximum number of points placeable in {1..n}^d with no three collinear,
/// with the lexicographically smallest optimal witness.  Phase one finds the
/// maximum (parallel over first-cell branches, shared bound); phase two
/// re-derives the canonical witness sequentially, so max, witness and node
/// count are independent of the thread count.  A hit time limit returns the
/// best set found with optimal = false.
SolveResult exact_max(long n, int dim, const SolveOptions& opts = {});

/// True iff no grid cell outside `s` can be added without closing a
/// collinear triple.  `s` must verify; otherwise ContractViolation.
bool is_maximal(const PointSet& s, long n, int dim);

}  // namespace n3l
