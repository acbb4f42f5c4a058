// The reciprocal compression map x -> (m/x_1, ..., m/x_n) and its exact
// calculus: mass, gap, induced balls, boundary (admissible) points, and the
// lines joining a vector to its image.  Everything is computed in exact
// rationals; squared quantities are compared so no square root is ever
// materialized.
#pragma once

#include <n3l/point.hpp>

#include <utility>

namespace n3l {

/// Positive scale m of the reciprocal map.  `strict_unit_range` optionally
/// restricts ball geometry to 0 < m <= 1; it is recorded at construction and
/// enforced only by ball_of.
class Scale {
 public:
  explicit Scale(Rat m, bool strict_unit_range = false);

  const Rat& m() const { return m_; }
  bool strict_unit_range() const { return strict_unit_range_; }

 private:
  Rat m_;
  bool strict_unit_range_ = false;
};

/// A vector admissible as input to the reciprocal map: length >= 2, every
/// coordinate nonzero, coordinates pairwise distinct.  The distinctness is a
/// domain requirement, not a convention; the finite mass/gap envelopes below
/// are false without it.
class CompressionVector {
 public:
  explicit CompressionVector(RatVec coords);
  static CompressionVector from_integers(const IntVec& coords);
  static CompressionVector from_longs(const std::vector<long>& coords);

  const RatVec& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }

 private:
  RatVec coords_;
};

/// (m/x_1, ..., m/x_n).  Applying it twice returns x exactly.
RatVec compress(const CompressionVector& x, const Scale& scale);

/// Sum of the compressed coordinates, sum_i m/x_i.
Rat mass(const CompressionVector& x, const Scale& scale);

/// Squared distance between x and its image, sum_i (x_i - m/x_i)^2.
/// Evaluated both directly and through the expansion
///   sum x_i^2 + m^2 sum 1/x_i^2 - 2mn;
/// the two must agree exactly or an InternalError is thrown.
Rat gap_squared(const CompressionVector& x, const Scale& scale);

/// Finite mass envelope for vectors of pairwise-distinct positive integers:
///   m * sum_{k=0}^{n-1} 1/(sup-k)  <=  mass  <=  m * sum_{k=0}^{n-1} 1/(inf+k).
/// Throws DomainError off that domain.
std::pair<Rat, Rat> mass_bounds(const CompressionVector& x, const Scale& scale);

/// Finite envelope for the squared gap on the same domain:
///   n*inf^2 + m^2 * sum 1/(sup-k)^2 - 2mn  <=  gap^2
///                                         <=  n*sup^2 + m^2 * sum 1/(inf+k)^2 - 2mn.
std::pair<Rat, Rat> gap_sq_bounds(const CompressionVector& x, const Scale& scale);

/// Exact harmonic number H(N) = sum_{n<=N} 1/n.
Rat harmonic_sum(long n);

/// |H(N) - ln N - gamma| evaluated in floating point; stays below 1/N.
double harmonic_estimate_error(long n);

/// Open ball induced by a vector under the reciprocal map: centered at the
/// midpoint of x and its image, squared radius gap^2/4.
struct Ball {
  RatVec center;
  Rat radius_sq;
  CompressionVector generator;
  Scale scale;

  int dim() const { return static_cast<int>(center.size()); }
};

Ball ball_of(const CompressionVector& x, const Scale& scale);

/// Strict (open-ball) membership: ||z - center||^2 < radius_sq exactly.
bool ball_contains(const Ball& b, const RatVec& z);

/// Admissibility: ||z - center||^2 = radius_sq exactly.
bool on_boundary(const Ball& b, const RatVec& z);

/// Two balls are the same set iff center and squared radius agree exactly.
bool same_ball(const Ball& a, const Ball& b);

/// The line through x and its compressed image, r = x + lambda*(x - V_m[x]).
struct Line {
  RatVec base;
  RatVec direction;
  Scale scale;
};

Line line_of(const CompressionVector& x, const Scale& scale);
RatVec line_point(const Line& line, const Rat& lambda);
/// True iff a - base is an exact rational multiple of direction.
bool line_contains(const Line& line, const RatVec& a);

}  // namespace n3l
