#include "szlab/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "szlab/error.hpp"

namespace szlab {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "ordinal coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kOverflow, "ordinal coefficient overflow");
  return r;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, std::uint64_t coefficient) {
  Ordinal result;
  if (coefficient > 0) result.terms_.push_back(OrdinalTerm{std::move(exponent), coefficient});
  return result;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw Error(ErrorCode::kParseError, "zero coefficient in CNF term");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw Error(ErrorCode::kParseError, "CNF exponents must be strictly decreasing");
    }
  }
  Ordinal result;
  result.terms_ = std::move(terms);
  return result;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

std::optional<std::uint64_t> Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (is_finite()) return terms_[0].coefficient;
  return std::nullopt;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::kUndefined, "leading exponent of 0");
  return terms_.front().exponent;
}

const Ordinal& Ordinal::trailing_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::kUndefined, "trailing exponent of 0");
  return terms_.back().exponent;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<OrdinalTerm> terms;
  std::uint64_t carried = 0;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      terms.push_back(t);
    } else {
      if (t.exponent == lead) carried = t.coefficient;
      break;
    }
  }
  auto rest = b.terms().begin();
  terms.push_back(OrdinalTerm{rest->exponent, checked_add(carried, rest->coefficient)});
  terms.insert(terms.end(), std::next(rest), b.terms().end());
  return Ordinal::from_terms(std::move(terms));
}

Ordinal subtract(const Ordinal& g, const Ordinal& b) {
  if (b > g) {
    throw Error(ErrorCode::kUndefinedSubtraction, to_string(b) + " exceeds " + to_string(g));
  }
  const auto& gt = g.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < bt.size() && gt[i] == bt[i]) ++i;
  if (i == bt.size()) {
    return Ordinal::from_terms({gt.begin() + static_cast<std::ptrdiff_t>(i), gt.end()});
  }
  // b < g and they first differ at i, so gt[i] exists and gt[i] > bt[i].
  std::vector<OrdinalTerm> terms;
  if (gt[i].exponent == bt[i].exponent) {
    terms.push_back(OrdinalTerm{gt[i].exponent, gt[i].coefficient - bt[i].coefficient});
  } else {
    terms.push_back(gt[i]);
  }
  terms.insert(terms.end(), gt.begin() + static_cast<std::ptrdiff_t>(i + 1), gt.end());
  return Ordinal::from_terms(std::move(terms));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead = a.leading_exponent();
  std::vector<OrdinalTerm> terms;
  for (const auto& t : b.terms()) {
    if (!t.exponent.is_zero()) {
      // a * w^e = w^(lead + e) for e >= 1.
      terms.push_back(OrdinalTerm{add(lead, t.exponent), t.coefficient});
    } else {
      // a * c = w^lead * (c_lead * c) + (rest of a).
      terms.push_back(OrdinalTerm{lead, checked_mul(a.terms().front().coefficient, t.coefficient)});
      terms.insert(terms.end(), std::next(a.terms().begin()), a.terms().end());
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal omega_pow(const Ordinal& b) { return Ordinal::omega_power(b); }

Ordinal leading_power(const Ordinal& a) {
  if (a.is_zero()) throw Error(ErrorCode::kUndefined, "leading_power of 0");
  return Ordinal::omega_power(a.leading_exponent());
}

bool absorbs(const Ordinal& g, const Ordinal& a) { return a >= multiply(g, Ordinal::omega()); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      out += '^';
      if (t.exponent.is_finite()) {
        out += to_string(t.exponent);
      } else {
        out += '{' + to_string(t.exponent) + '}';
      }
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal result = sum();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError,
                "ordinal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_omega() {
    skip_space();
    if (accept('w')) return true;
    static constexpr std::string_view kOmega = "\xCF\x89";  // UTF-8 omega
    if (text_.substr(pos_, kOmega.size()) == kOmega) {
      pos_ += kOmega.size();
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = checked_add(checked_mul(value, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }

  Ordinal sum() {
    Ordinal total = term();
    while (accept('+')) total = add(total, term());
    return total;
  }

  Ordinal term() {
    Ordinal base;
    if (accept_omega()) {
      Ordinal exponent(1);
      if (accept('^')) exponent = exponent_atom();
      base = Ordinal::omega_power(std::move(exponent));
    } else {
      base = Ordinal(integer());
    }
    while (accept('*')) base = multiply(base, Ordinal(integer()));
    return base;
  }

  Ordinal exponent_atom() {
    if (accept('{')) {
      Ordinal e = sum();
      if (!accept('}')) fail("expected '}'");
      return e;
    }
    if (accept('(')) {
      Ordinal e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept_omega()) {
      if (accept('^')) return Ordinal::omega_power(exponent_atom());
      return Ordinal::omega();
    }
    return Ordinal(integer());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

}  // namespace szlab
