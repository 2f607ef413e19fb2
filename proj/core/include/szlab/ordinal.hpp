#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace szlab {

struct OrdinalTerm;

/// An ordinal below epsilon_0 in hereditary Cantor normal form,
///   w^{e_1}*c_1 + ... + w^{e_n}*c_n,  e_1 > ... > e_n,  c_i >= 1.
/// The term list is canonical, so structural equality is ordinal equality.
/// Values are immutable once built; every operation returns a fresh value.
class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;
  explicit Ordinal(std::uint64_t n);

  static Ordinal omega();
  /// w^exponent * coefficient; coefficient 0 gives zero.
  static Ordinal omega_power(Ordinal exponent, std::uint64_t coefficient = 1);
  /// Throws kParseError unless the terms are already in Cantor normal form.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_finite() const;
  /// Zero and limit ordinals are not successors.
  bool is_successor() const;
  std::optional<std::uint64_t> finite_value() const;

  /// Exponent of the first term. Throws kUndefined on zero.
  const Ordinal& leading_exponent() const;
  /// Exponent of the last term, i.e. the Cantor-Bendixson rank of the point. Throws kUndefined on zero.
  const Ordinal& trailing_exponent() const;

  friend bool operator==(const Ordinal&, const Ordinal&);
  friend std::strong_ordering operator<=>(const Ordinal&, const Ordinal&);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Ordinal sum a + b: terms of a below the leading exponent of b are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);

/// The unique rho with b + rho == g. Throws kUndefinedSubtraction when b > g.
Ordinal subtract(const Ordinal& g, const Ordinal& b);

/// Ordinal product, left-distributive: a*(x+y) = a*x + a*y.
Ordinal multiply(const Ordinal& a, const Ordinal& b);

/// w^b.
Ordinal omega_pow(const Ordinal& b);

/// Largest power of w that is <= a. Throws kUndefined on zero.
Ordinal leading_power(const Ordinal& a);

/// True iff g + a == a for the given pair, i.e. a >= g*w.
bool absorbs(const Ordinal& g, const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return multiply(a, b); }

/// Display form, e.g. "w^2*3+w+4", "w^{w+1}", "0".
std::string to_string(const Ordinal& a);

/// Parses the display form. Accepts non-canonical sums ("1+w") and normalises them;
/// exponents may be bare integers, "w", or braced/parenthesised sums. "ω" is accepted for "w".
Ordinal parse_ordinal(std::string_view text);

}  // namespace szlab
