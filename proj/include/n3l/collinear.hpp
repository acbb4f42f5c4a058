// Exact collinearity predicate, primitive directions, and the pairwise
// no-three-in-line verifier.
#pragma once

#include <n3l/point.hpp>

#include <array>
#include <optional>

namespace n3l {

/// True iff p, q, r are collinear: every 2x2 minor of [q-p | r-p] vanishes.
/// Exact integer arithmetic; throws ContractViolation on dimension mismatch
/// or d < 2.
bool collinear3(const IntVec& p, const IntVec& q, const IntVec& r);

/// Rational overload.  Difference vectors are cleared to integers by their
/// least common denominator before minor evaluation, so a single integer
/// code path decides all cases.
bool collinear3(const RatVec& p, const RatVec& q, const RatVec& r);

/// v / gcd(|v_i|), sign-normalized so the first nonzero coordinate is
/// positive.  Throws ContractViolation on the zero vector.
IntVec primitive_direction(const IntVec& v);

/// Small-integer variant used by the search kernels.
std::vector<long> primitive_direction(const std::vector<long>& v);

struct VerifyResult {
  bool pass = true;
  /// Indices (i < j < k) into the set of one collinear triple when !pass;
  /// the lexicographically smallest such triple regardless of thread count.
  std::array<std::size_t, 3> witness{0, 0, 0};
};

/// Checks that no three points of `s` are collinear by hashing primitive
/// directions per anchor: a repeated (anchor, direction) key is a witness.
/// O(k^2 d log k) for k points.  Anchors may be partitioned across
/// `threads`; the result is thread-count independent.
VerifyResult verify_no_three(const PointSet& s, int threads = 1);

}  // namespace n3l
