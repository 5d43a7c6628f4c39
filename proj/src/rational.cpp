#include "gptlab/rational.hpp"

#include <cctype>

namespace gptlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DimensionMismatchInput: return "DimensionMismatchInput";
    case ErrorKind::UnboundedInput: return "UnboundedInput";
    case ErrorKind::NotSupporting: return "NotSupporting";
    case ErrorKind::ZeroDimensionalInput: return "ZeroDimensionalInput";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::EmptyStateSet: return "EmptyStateSet";
    case ErrorKind::NotAStateVertex: return "NotAStateVertex";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotAMinusFace: return "NotAMinusFace";
    case ErrorKind::NotInTf: return "NotInTf";
    case ErrorKind::EmptyCertainFace: return "EmptyCertainFace";
    case ErrorKind::IsClassical: return "IsClassical";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  bool negative = false;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    negative = num_digits.front() == '-';
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer p{std::string(num_digits)};
  Integer q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_decimal(const Rational& value, int places) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  // round half away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
  }
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace gptlab
