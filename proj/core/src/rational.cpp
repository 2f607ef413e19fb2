#include "szlab/rational.hpp"

#include <cctype>

#include "szlab/error.hpp"

namespace szlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndefinedSubtraction: return "UNDEFINED_SUBTRACTION";
    case ErrorCode::kUndefined: return "UNDEFINED";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kNonpositivePoint: return "NONPOSITIVE_POINT";
    case ErrorCode::kNotNonIncreasing: return "NOT_NON_INCREASING";
    case ErrorCode::kDepthExceeded: return "DEPTH_EXCEEDED";
    case ErrorCode::kOutOfScope: return "OUT_OF_SCOPE";
    case ErrorCode::kOutOfSpace: return "OUT_OF_SPACE";
    case ErrorCode::kEmptyMeasure: return "EMPTY_MEASURE";
    case ErrorCode::kInvalidMeasure: return "INVALID_MEASURE";
    case ErrorCode::kLevelOutOfRange: return "LEVEL_OUT_OF_RANGE";
    case ErrorCode::kIndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::kParamInvalid: return "PARAM_INVALID";
    case ErrorCode::kBoundViolation: return "BOUND_VIOLATION";
    case ErrorCode::kWindowTooSmall: return "WINDOW_TOO_SMALL";
    case ErrorCode::kParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::kParseError, "not an exact rational: '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer n(num_str, 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  Rational q(value);
  q.canonicalize();
  return q.get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  for (unsigned long i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace szlab
