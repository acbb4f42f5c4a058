// Dense exact-coordinate vectors, grid boxes, point sets, and the points
// text file format.
#pragma once

#include <n3l/numeric.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace n3l {

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntVec = VecX<Int>;
using RatVec = VecX<Rat>;

/// Lexicographic compare for exact-coordinate vectors of equal length.
template <typename Scalar>
bool lex_less(const VecX<Scalar>& a, const VecX<Scalar>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

template <typename Scalar>
bool vec_eq(const VecX<Scalar>& a, const VecX<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

IntVec make_int_vec(std::initializer_list<long> coords);
RatVec make_rat_vec(std::initializer_list<Rat> coords);

/// Exact promotion of integer coordinates to rationals.
RatVec to_rational(const IntVec& v);

/// Exact demotion; throws DomainError if any coordinate is non-integral.
IntVec to_integer(const RatVec& v);

/// Inclusive integer bounds per axis.
struct Box {
  IntVec lo;
  IntVec hi;

  Box() = default;
  Box(IntVec lo_, IntVec hi_);

  /// The cube {1..n}^d.
  static Box unit_grid(long n, int dim);

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const IntVec& p) const;
  /// Smallest box covering all of `points` (which must be nonempty).
  static Box tight(const std::vector<IntVec>& points);
};

/// A finite duplicate-free set of grid points of one dimension, all inside
/// `box`.  Point order is the set order (file order, construction order);
/// verifiers and witnesses refer to this order.
class PointSet {
 public:
  PointSet(int dim, Box box, std::vector<IntVec> points);

  /// Convenience: box is the tight bounding box (or the unit point for an
  /// empty set, which is disallowed here: use the main constructor).
  static PointSet with_tight_box(int dim, std::vector<IntVec> points);

  int dim() const { return dim_; }
  const Box& box() const { return box_; }
  const std::vector<IntVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const IntVec& operator[](std::size_t i) const { return points_[i]; }

 private:
  int dim_ = 0;
  Box box_;
  std::vector<IntVec> points_;
};

/// Streams the n^d points of {1..n}^d in lexicographic order without
/// materializing them.  Coordinates are 1-based so every grid point is a
/// valid reciprocal-map input.
class GridPointRange {
 public:
  GridPointRange(long n, int dim);

  class iterator {
   public:
    using value_type = IntVec;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(long n, int dim, bool end);

    const IntVec& operator*() const { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    long n_ = 0;
    std::ptrdiff_t pos_ = -1;  // -1 marks end
    std::vector<long> odometer_;
    IntVec current_;
  };

  iterator begin() const { return iterator(n_, dim_, false); }
  iterator end() const { return iterator(n_, dim_, true); }

 private:
  long n_;
  int dim_;
};

/// Points file format: UTF-8, LF line endings, one point per line as d
/// base-10 integers separated by single spaces.  Lines starting with '#' are
/// comments; the first non-comment line may be "dim d".  write_points emits
/// the canonical form (header then points) and round-trips bit-exactly.
PointSet read_points(std::istream& in, int expect_dim = 0);
PointSet read_points_file(const std::string& path, int expect_dim = 0);
void write_points(std::ostream& out, const PointSet& s);
void write_points_file(const std::string& path, const PointSet& s);

}  // namespace n3l
