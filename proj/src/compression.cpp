#include <n3l/compression.hpp>

#include <cmath>

namespace n3l {

Scale::Scale(Rat m, bool strict_unit_range) : m_(std::move(m)), strict_unit_range_(strict_unit_range) {
  if (m_ <= 0) throw DomainError("scale must be positive, got " + format_rational(m_));
}

CompressionVector::CompressionVector(RatVec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DomainError("compression vector needs dimension >= 2");
  for (Eigen::Index i = 0; i < coords_.size(); ++i) {
    coords_[i].canonicalize();  // exact distinctness requires reduced form
    if (coords_[i] == 0) throw DomainError("compression vector has zero coordinate");
    for (Eigen::Index j = i + 1; j < coords_.size(); ++j) {
      if (coords_[i] == coords_[j]) {
        throw DomainError("compression vector has repeated coordinate " +
                          format_rational(coords_[i]));
      }
    }
  }
}

CompressionVector CompressionVector::from_integers(const IntVec& coords) {
  return CompressionVector(to_rational(coords));
}

CompressionVector CompressionVector::from_longs(const std::vector<long>& coords) {
  RatVec v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = Rat(coords[i]);
  return CompressionVector(std::move(v));
}

RatVec compress(const CompressionVector& x, const Scale& scale) {
  const RatVec& c = x.coords();
  RatVec img(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) img[i] = scale.m() / c[i];
  return img;
}

Rat mass(const CompressionVector& x, const Scale& scale) {
  RatVec img = compress(x, scale);
  Rat s = 0;
  for (Eigen::Index i = 0; i < img.size(); ++i) s += img[i];
  return s;
}

Rat gap_squared(const CompressionVector& x, const Scale& scale) {
  const RatVec& c = x.coords();
  RatVec img = compress(x, scale);
  Rat direct = (c - img).squaredNorm();

  Rat sum_sq = 0, sum_inv_sq = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    sum_sq += c[i] * c[i];
    sum_inv_sq += 1 / (c[i] * c[i]);
  }
  const Rat& m = scale.m();
  Rat expanded = sum_sq + m * m * sum_inv_sq - 2 * m * Rat(static_cast<long>(c.size()));
  if (direct != expanded) {
    throw InternalError("gap evaluations disagree: " + format_rational(direct) + " vs " +
                        format_rational(expanded));
  }
  return direct;
}

namespace {

// Checks the finite-envelope domain (pairwise-distinct positive integers) and
// returns the extreme coordinates.
std::pair<Int, Int> integer_extremes(const CompressionVector& x) {
  const RatVec& c = x.coords();
  Int lo, hi;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!is_integer(c[i]) || c[i] <= 0) {
      throw DomainError("envelope needs distinct positive integer coordinates, got " +
                        format_rational(c[i]));
    }
    Int v = c[i].get_num();
    if (i == 0) {
      lo = hi = v;
    } else {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return {lo, hi};
}

Rat inv(const Int& d) {
  Rat r(Int(1), d);
  r.canonicalize();
  return r;
}

}  // namespace

std::pair<Rat, Rat> mass_bounds(const CompressionVector& x, const Scale& scale) {
  auto [inf, sup] = integer_extremes(x);
  const long n = x.dim();
  Rat lo_sum = 0, hi_sum = 0;
  for (long k = 0; k < n; ++k) {
    lo_sum += inv(Int(sup - k));
    hi_sum += inv(Int(inf + k));
  }
  return {scale.m() * lo_sum, scale.m() * hi_sum};
}

std::pair<Rat, Rat> gap_sq_bounds(const CompressionVector& x, const Scale& scale) {
  auto [inf, sup] = integer_extremes(x);
  const long n = x.dim();
  const Rat& m = scale.m();
  Rat lo_inv_sq = 0, hi_inv_sq = 0;
  for (long k = 0; k < n; ++k) {
    Int a = sup - k, b = inf + k;
    lo_inv_sq += inv(a * a);
    hi_inv_sq += inv(b * b);
  }
  Rat lo = Rat(n) * Rat(inf * inf) + m * m * lo_inv_sq - 2 * m * Rat(n);
  Rat hi = Rat(n) * Rat(sup * sup) + m * m * hi_inv_sq - 2 * m * Rat(n);
  return {lo, hi};
}

Rat harmonic_sum(long n) {
  if (n < 0) throw DomainError("harmonic sum needs n >= 0");
  Rat s = 0;
  for (long k = 1; k <= n; ++k) s += inv(Int(k));
  return s;
}

double harmonic_estimate_error(long n) {
  if (n < 1) throw DomainError("harmonic estimate needs n >= 1");
  constexpr double kEulerGamma = 0.5772156649015328606;
  return std::abs(harmonic_sum(n).get_d() - std::log(static_cast<double>(n)) - kEulerGamma);
}

Ball ball_of(const CompressionVector& x, const Scale& scale) {
  if (scale.strict_unit_range() && scale.m() > 1) {
    throw DomainError("scale " + format_rational(scale.m()) +
                      " outside the requested unit range (0, 1]");
  }
  RatVec img = compress(x, scale);
  RatVec center = (x.coords() + img) / Rat(2);
  Rat g2 = gap_squared(x, scale);
  if (g2 == 0) throw DomainError("vector is a fixed point of the map; ball is degenerate");
  return Ball{std::move(center), g2 / Rat(4), x, scale};
}

bool ball_contains(const Ball& b, const RatVec& z) {
  if (z.size() != b.center.size()) throw DomainError("ball membership needs matching dimension");
  return Rat((z - b.center).squaredNorm()) < b.radius_sq;
}

bool on_boundary(const Ball& b, const RatVec& z) {
  if (z.size() != b.center.size()) throw DomainError("boundary test needs matching dimension");
  return Rat((z - b.center).squaredNorm()) == b.radius_sq;
}

bool same_ball(const Ball& a, const Ball& b) {
  return a.center.size() == b.center.size() && vec_eq(a.center, b.center) &&
         a.radius_sq == b.radius_sq;
}

Line line_of(const CompressionVector& x, const Scale& scale) {
  RatVec dir = x.coords() - compress(x, scale);
  bool zero = true;
  for (Eigen::Index i = 0; i < dir.size(); ++i) {
    if (dir[i] != 0) {
      zero = false;
      break;
    }
  }
  if (zero) throw DomainError("vector is a fixed point of the map; line is degenerate");
  return Line{x.coords(), std::move(dir), scale};
}

RatVec line_point(const Line& line, const Rat& lambda) {
  return line.base + line.direction * lambda;
}

bool line_contains(const Line& line, const RatVec& a) {
  if (a.size() != line.base.size()) throw DomainError("line membership needs matching dimension");
  RatVec diff = a - line.base;
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < line.direction.size(); ++i) {
    if (line.direction[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) {
    for (Eigen::Index i = 0; i < diff.size(); ++i) {
      if (diff[i] != 0) return false;
    }
    return true;
  }
  Rat lambda = diff[pivot] / line.direction[pivot];
  for (Eigen::Index i = 0; i < diff.size(); ++i) {
    if (diff[i] != lambda * line.direction[i]) return false;
  }
  return true;
}

}  // namespace n3l
