#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "szlab/ordinal.hpp"
#include "szlab/rational.hpp"

namespace szlab {

/// One piece of a step function: `value` on (previous end, end].
struct Piece {
  Rational end;
  Ordinal value;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// A left-continuous simple function (0, inf) -> ordinals, zero beyond the last piece.
///
/// Stored canonically: ends strictly increasing and positive, neighbouring values
/// distinct, no trailing zero piece. Two StepFunctions compare equal exactly when
/// they are the same function. Need not be monotone; most operations below state
/// when they require a non-increasing argument.
class StepFunction {
 public:
  StepFunction() = default;

  /// Validates and canonicalises. Throws kParseError on non-positive or unsorted ends.
  static StepFunction from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }
  /// Smallest A with f(t) = 0 for t > A.
  Rational support_end() const;
  bool is_non_increasing() const;

  /// Throws kNonpositivePoint for t <= 0.
  Ordinal operator()(const Rational& t) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;
  /// Arbitrary but total order, for use as a set key.
  friend std::strong_ordering operator<=>(const StepFunction& a, const StepFunction& b);

 private:
  std::vector<Piece> pieces_;
};

/// Indicator-style constructor: value on (0, end].
StepFunction constant_on(const Ordinal& value, const Rational& end);

/// Lebesgue measure of {t : f(t) = value}; value must be non-zero.
Rational level_measure(const StepFunction& f, const Ordinal& value);

/// Pointwise f <= g.
bool dominated(const StepFunction& f, const StepFunction& g);

/// Lebesgue measure of {t : g(t) + 1 <= h(t)}.
Rational gap_measure(const StepFunction& g, const StepFunction& h);

/// t -> f(t) - gamma on (lo, hi], f elsewhere. Propagates kUndefinedSubtraction
/// if gamma exceeds f somewhere on (lo, hi].
StepFunction subtract_on(const StepFunction& f, const Ordinal& gamma, const Rational& lo, const Rational& hi);

/// g - gamma * 1_(0, eps].
StepFunction sub_indicator(const StepFunction& g, const Ordinal& gamma, const Rational& eps);

/// t -> gamma + f(t) on (0, eps], f elsewhere (gamma added on the left).
StepFunction raise_on(const StepFunction& f, const Ordinal& gamma, const Rational& eps);

/// The non-increasing left-continuous function with the same level-set measures as f.
StepFunction decreasing_rearrangement(const StepFunction& f);

/// gamma * 1_(0,eps] + rearrangement of (g - gamma * 1_(0,eps]).
/// Requires g non-increasing (kNotNonIncreasing) and gamma <= g(eps) (kUndefinedSubtraction).
StepFunction epsilon_compression(const StepFunction& g, const Rational& eps, const Ordinal& gamma);

/// The sequence produced by repeatedly compressing by the leading w-power at eps.
/// stages[0] is the input; stages[i + 1] is the rearranged remainder after removing gammas[i].
struct CompressionTrace {
  Rational epsilon;
  std::vector<Ordinal> gammas;
  std::vector<StepFunction> stages;
  Ordinal area;

  /// h_{i+1} = (gammas[0] + ... + gammas[i-1]) * 1_(0,eps] + stages[i], i.e. the
  /// accumulated chain of eps-compressions. Index is zero-based.
  StepFunction accumulated_stage(std::size_t i) const;
};

/// eps-area of a non-increasing simple function, with the full trace.
CompressionTrace epsilon_area(const StepFunction& g, const Rational& eps);

/// Exhaustive search for the supremum of H(eps) over chains of eps-compressions
/// starting at g. Desk scale only: every value must lie below w^2 (kOutOfScope otherwise).
/// Throws kDepthExceeded if the search has not closed after max_depth compressions
/// and the best value was still growing.
Ordinal epsilon_area_oracle(const StepFunction& g, const Rational& eps, std::size_t max_depth);

/// Area for a varying sequence of widths, compressing by 1 each time. Returns the
/// sequence length when every difference is defined, 0 otherwise (and for an empty sequence).
std::size_t multi_epsilon_area(const StepFunction& g, std::span<const Rational> eps_seq);

}  // namespace szlab
