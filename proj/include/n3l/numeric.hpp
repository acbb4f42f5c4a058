// Exact scalar layer: arbitrary-precision integers and rationals (GMP)
// wired into Eigen as custom scalar types, plus the "p/q" text form used
// by the CLI and all JSON output.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace n3l {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy shared by all modules.  DomainError: bad values handed to an
// operation.  ContractViolation: a caller broke a precondition that the
// operation promises to detect.  InternalError: a supposedly impossible state
// (e.g. the two gap-squared evaluations disagreeing).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Renders a rational in canonical "p/q" form; "/q" is omitted when q = 1 and
/// the sign sits on the numerator.
inline std::string format_rational(const Rat& q) { return q.get_str(); }

/// Parses "p", "p/q" or a decimal-free signed integer string into a reduced
/// rational with positive denominator.  Throws DomainError on malformed input
/// or zero denominator.
Rat parse_rational(const std::string& text);

/// Parses a base-10 (optionally signed) integer string.
Int parse_integer(const std::string& text);

/// True iff q is an integer (denominator 1 after reduction).  Copies and
/// canonicalizes so unreduced inputs such as Rat(4, 2) answer correctly.
inline bool is_integer(const Rat& q) {
  Rat r = q;
  r.canonicalize();
  return r.get_den() == 1;
}

/// Deterministic Miller-Rabin primality for 64-bit inputs (no probabilistic
/// outcome below 2^64 with this witness set).
bool is_prime_u64(std::uint64_t n);

}  // namespace n3l
