#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gptlab {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Kinds of failure reported across the library. The CLI maps every one of
/// them to exit status 2.
enum class ErrorKind {
  EmptyInput,
  DimensionMismatchInput,
  UnboundedInput,
  NotSupporting,
  ZeroDimensionalInput,
  NotNormalized,
  NotGenerating,
  EmptyStateSet,
  NotAStateVertex,
  NotPure,
  NotAMinusFace,
  NotInTf,
  EmptyCertainFace,
  IsClassical,
  TooFewVertices,
  ParseError,
  NoSolution,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parses "p/q" or "p". The sign may only appear on the numerator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Decimal rendering rounded half away from zero; annotation only.
std::string format_decimal(const Rational& value, int places = 6);

double to_double(const Rational& value);

inline int sign(const Rational& value) {
  return value.sign();
}

inline Rational abs(const Rational& value) {
  return value.sign() < 0 ? Rational(-value) : value;
}

}  // namespace gptlab
