#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "szlab/ordinal.hpp"
#include "szlab/rational.hpp"
#include "szlab/step_function.hpp"

namespace szlab {

/// The ordinal interval [1, w^{w^gamma * k}] with its topological derived sets.
class OrdinalSpace {
 public:
  /// Throws kParamInvalid when k == 0.
  OrdinalSpace(Ordinal gamma, std::uint64_t k);

  const Ordinal& gamma() const { return gamma_; }
  std::uint64_t k() const { return k_; }
  /// w^{w^gamma * k}.
  const Ordinal& top() const { return top_; }
  /// w^gamma * k, the rank of the top point.
  Ordinal top_rank() const;

  bool contains(const Ordinal& p) const { return !p.is_zero() && p <= top_; }

  friend bool operator==(const OrdinalSpace&, const OrdinalSpace&) = default;

 private:
  Ordinal gamma_;
  std::uint64_t k_;
  Ordinal top_;
};

struct Atom {
  Ordinal point;
  Rational weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported positive measure on an OrdinalSpace.
class OrdinalMeasure {
 public:
  /// Throws kOutOfSpace for points outside [1, top], kInvalidMeasure for repeated
  /// points or non-positive weights.
  OrdinalMeasure(OrdinalSpace space, std::vector<Atom> atoms);

  const OrdinalSpace& space() const { return space_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  Rational total_mass() const;

  friend bool operator==(const OrdinalMeasure&, const OrdinalMeasure&) = default;

 private:
  OrdinalSpace space_;
  std::vector<Atom> atoms_;
};

/// Cantor-Bendixson rank of p in the space: the exponent of the last CNF term
/// (0 for successors). Throws kOutOfSpace.
Ordinal cb_rank(const Ordinal& p, const OrdinalSpace& space);

/// g(t) = sup{alpha : mu(K^(alpha)) >= t}. Throws kEmptyMeasure when mu has no atoms.
StepFunction derived_height(const OrdinalMeasure& mu);

/// w^gamma * [k / eps], the largest eps-area any probability measure on the space can have.
Ordinal area_ceiling(const OrdinalSpace& space, const Rational& eps);

/// eps-Szlenk index of the dual ball of C(space): w^gamma * [k / eps] + 1.
Ordinal szlenk_formula(const OrdinalSpace& space, const Rational& eps);

struct AreaBoundCheck {
  Ordinal area;
  Ordinal ceiling;
  bool holds = false;
};

/// Compares the eps-area of mu's derived height with area_ceiling.
/// mu must have mass <= 1 (kInvalidMeasure otherwise).
AreaBoundCheck check_area_bound(const OrdinalMeasure& mu, const Rational& eps);

/// An atom of a signed measure; weight may be negative but not zero.
struct SignedAtom {
  Ordinal point;
  Rational weight;
};

/// A point of the doubled space +[1, top] u -[1, top].
struct DoubledAtom {
  int copy = 1;  // +1 or -1
  Ordinal point;
  Rational weight;
};

/// mu -> mu': positive part on the + copy, negative part (as |weight|) on the - copy.
std::vector<DoubledAtom> split_signed(const OrdinalSpace& space, std::span<const SignedAtom> atoms);

/// Derived height on the doubled space, where the rank of (+-, p) is the rank of p.
StepFunction derived_height(const OrdinalSpace& space, std::span<const DoubledAtom> atoms);

/// The positive measure with weights |w|.
OrdinalMeasure absolute_measure(const OrdinalSpace& space, std::span<const SignedAtom> atoms);

}  // namespace szlab
