// The claimed general-dimension lower bound n^(d-1) * d^(1/(2d)), the
// classical reference constants, and the table comparing them against
// ground truth.
#pragma once

#include <n3l/numeric.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace n3l {

/// n^(d-1) * d^(1/(2d)) as a double (relative error well below 1e-12).
/// Throws DomainError for d < 2 or n < 1.
double paper_bound(long n, int dim);

struct BoundsRow {
  long n = 0;
  int dim = 0;
  double paper_bound = 0.0;
  double erdos_ref = 0.0;                    // (1-eps)n at eps -> 0
  std::optional<double> hall_ref;            // (3/2)n, d = 2 only
  std::optional<double> conjecture_ref;      // (pi/sqrt(3))n, d = 2 only
  bool theta_n2_ref = false;                 // d = 3 carries the Theta(n^2) flag
  std::optional<long> best;                  // ground truth when available
  std::string source = "skipped";            // "exact" | "construction" | "skipped"
  std::optional<double> ratio;               // best / paper_bound

  nlohmann::ordered_json to_json() const;
};

/// Reference constants at their limiting values.
BoundsRow reference_row(long n, int dim);

enum class BoundsSource { kExact, kSphere, kErdos, kGreedy };

BoundsSource bounds_source_from_name(const std::string& name);
std::string bounds_source_name(BoundsSource s);

/// True when the exact solver is allowed at this size (desk-scale limits;
/// larger runs go through the CLI with a time limit instead).
bool exact_solver_in_limits(long n, int dim);

/// One row per n in [n_from, n_to], best filled from the requested sources,
/// preferring exact ground truth over constructions.  Exact beyond the
/// solver limits marks the row "skipped" unless a construction source
/// covers it.
std::vector<BoundsRow> compare_table(long n_from, long n_to, int dim,
                                     const std::vector<BoundsSource>& sources);

/// CSV with the fixed column set
/// n,d,paper_bound,erdos_ref,hall_ref,conjecture_ref,best,source,ratio;
/// floats at 6 significant digits, header mandatory.
std::string to_csv(const std::vector<BoundsRow>& rows);
std::vector<BoundsRow> parse_csv(const std::string& text);

}  // namespace n3l
