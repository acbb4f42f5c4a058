// Generators of no-three-in-line point sets: exact lattice sphere sections,
// the parabola-mod-p construction, and a seeded greedy filler.  Every
// generated set is verified before it can be reported.
#pragma once

#include <n3l/claims.hpp>
#include <n3l/collinear.hpp>

#include <optional>

namespace n3l {

/// A sphere with half-integer center and quarter-integer squared radius,
/// intersected with an integer box.  Doubling centers and quadrupling radii
/// keeps the membership test in pure integers.
struct SphereSpec {
  RatVec center;   // denominators in {1,2}
  Rat radius_sq;   // >= 0, denominator in {1,4}
  Box box;

  int dim() const { return static_cast<int>(center.size()); }
};

SphereSpec make_sphere_spec(const RatVec& center, const Rat& radius_sq, const Box& box);

/// All lattice points of `box` at exact squared distance radius_sq from the
/// center, in lexicographic order.  Recursive coordinate descent with
/// residual-radius pruning; never a full box scan.
PointSet sphere_section(const SphereSpec& spec);

/// {(x, x^2 mod p) : 0 <= x < p} shifted to the 1-based p x p grid; exactly
/// p points, classically free of collinear triples.  p must be prime
/// (checked deterministically below 2^64).
PointSet erdos_parabola(std::uint64_t p);

struct ConstructionReport {
  std::string method;  // "sphere" | "erdos" | "greedy"
  Json params;
  PointSet points;
  bool verified = false;
  double bound_value = 0.0;  // claimed lower bound for the same n, d
  double ratio = 0.0;        // |points| / bound_value

  /// JSON view; points themselves travel in the points file.
  Json to_json(const std::string& points_file) const;
};

/// Verifies `points` (throwing InternalError on a collinear triple), then
/// wraps them in a report with bound and ratio for grid side n.  Used by the
/// sphere/greedy constructors and by callers of erdos_parabola.
ConstructionReport make_report(std::string method, Json params, PointSet points, long n, int dim);

enum class SphereStrategy { kCenterScan, kFixedCenter };

/// Scans candidate centers (the grid midpoint and its half-step
/// perturbations, or one supplied center) and every realized squared
/// distance, and returns the largest sphere section found in {1..n}^d.
/// Ties break toward smaller radius, then lexicographically smaller center.
ConstructionReport best_sphere(long n, int dim, SphereStrategy strategy,
                               const std::optional<RatVec>& center = std::nullopt,
                               const std::optional<Rat>& radius_sq = std::nullopt);

/// Fills {1..n}^d greedily in a seed-determined order (seed 0 keeps
/// lexicographic order), accepting a point iff it closes no collinear
/// triple.  Output is maximal and deterministic per seed.
ConstructionReport greedy(long n, int dim, std::uint64_t seed);

}  // namespace n3l
