#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vir {

/// Exact rational scalar. Every coefficient in the engine is one of these.
using Scalar = mpq_class;

/// Malformed user input (bad rational literal, bad JSON vector, ...).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its stated domain.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A vector was handed to a module of a different family.
struct FamilyMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation needs more room than the configured truncation provides.
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses `[+-]digits[/digits]`; the denominator must be positive.
Scalar parse_scalar(std::string_view text);

/// Lowest terms, positive denominator, no "/1" for integers.
std::string to_string(const Scalar& x);

/// x^e for any integer e; throws PreconditionError for 0^e with e < 0.
Scalar power(const Scalar& x, long e);

Scalar binomial(long n, long k);

/// Exact square root when x is the square of a rational.
std::optional<Scalar> rational_sqrt(const Scalar& x);

/// Integer square root of a non-negative integer-valued scalar, if it is a perfect square.
std::optional<mpz_class> integer_sqrt(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace vir
