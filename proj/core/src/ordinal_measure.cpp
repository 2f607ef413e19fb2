#include "szlab/ordinal_measure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "szlab/error.hpp"

namespace szlab {

namespace {

// Derived height from (rank, mass) pairs: ranks sorted descending, each rank
// occupying an interval whose length is its total mass.
StepFunction height_from_ranks(const std::vector<std::pair<Ordinal, Rational>>& ranked) {
  if (ranked.empty()) throw Error(ErrorCode::kEmptyMeasure, "derived height of the zero measure");
  std::map<Ordinal, Rational, std::greater<>> mass_by_rank;
  for (const auto& [rank, weight] : ranked) mass_by_rank[rank] += weight;
  std::vector<Piece> pieces;
  Rational end(0);
  for (const auto& [rank, mass] : mass_by_rank) {
    end += mass;
    pieces.push_back(Piece{end, rank});
  }
  return StepFunction::from_pieces(std::move(pieces));
}

std::uint64_t floor_ratio(std::uint64_t k, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
  const Integer q = floor(Rational(Integer(static_cast<unsigned long>(k))) / eps);
  if (!q.fits_ulong_p()) throw Error(ErrorCode::kOverflow, "[k/eps] does not fit a coefficient");
  return q.get_ui();
}

}  // namespace

OrdinalSpace::OrdinalSpace(Ordinal gamma, std::uint64_t k) : gamma_(std::move(gamma)), k_(k) {
  if (k_ == 0) throw Error(ErrorCode::kParamInvalid, "ordinal space needs k >= 1");
  top_ = Ordinal::omega_power(top_rank());
}

Ordinal OrdinalSpace::top_rank() const { return Ordinal::omega_power(gamma_, k_); }

OrdinalMeasure::OrdinalMeasure(OrdinalSpace space, std::vector<Atom> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms)) {
  std::set<Ordinal> points;
  for (const auto& a : atoms_) {
    if (!space_.contains(a.point)) {
      throw Error(ErrorCode::kOutOfSpace, to_string(a.point) + " is not in [1, " + to_string(space_.top()) + "]");
    }
    if (a.weight <= 0) throw Error(ErrorCode::kInvalidMeasure, "atom weights must be positive");
    if (!points.insert(a.point).second) {
      throw Error(ErrorCode::kInvalidMeasure, "repeated atom at " + to_string(a.point));
    }
  }
}

Rational OrdinalMeasure::total_mass() const {
  Rational total(0);
  for (const auto& a : atoms_) total += a.weight;
  return total;
}

Ordinal cb_rank(const Ordinal& p, const OrdinalSpace& space) {
  if (!space.contains(p)) {
    throw Error(ErrorCode::kOutOfSpace, to_string(p) + " is not in [1, " + to_string(space.top()) + "]");
  }
  return p.trailing_exponent();
}

StepFunction derived_height(const OrdinalMeasure& mu) {
  std::vector<std::pair<Ordinal, Rational>> ranked;
  for (const auto& a : mu.atoms()) ranked.emplace_back(cb_rank(a.point, mu.space()), a.weight);
  return height_from_ranks(ranked);
}

Ordinal area_ceiling(const OrdinalSpace& space, const Rational& eps) {
  return multiply(omega_pow(space.gamma()), Ordinal(floor_ratio(space.k(), eps)));
}

Ordinal szlenk_formula(const OrdinalSpace& space, const Rational& eps) {
  return add(area_ceiling(space, eps), Ordinal(1));
}

AreaBoundCheck check_area_bound(const OrdinalMeasure& mu, const Rational& eps) {
  if (mu.total_mass() > 1) throw Error(ErrorCode::kInvalidMeasure, "not a probability measure (mass > 1)");
  AreaBoundCheck check;
  check.area = epsilon_area(derived_height(mu), eps).area;
  check.ceiling = area_ceiling(mu.space(), eps);
  check.holds = check.area <= check.ceiling;
  return check;
}

std::vector<DoubledAtom> split_signed(const OrdinalSpace& space, std::span<const SignedAtom> atoms) {
  std::vector<DoubledAtom> out;
  for (const auto& a : atoms) {
    if (!space.contains(a.point)) throw Error(ErrorCode::kOutOfSpace, to_string(a.point) + " is outside the space");
    if (a.weight == 0) throw Error(ErrorCode::kInvalidMeasure, "signed atoms must have non-zero weight");
    out.push_back(DoubledAtom{a.weight > 0 ? 1 : -1, a.point, abs(a.weight)});
  }
  return out;
}

StepFunction derived_height(const OrdinalSpace& space, std::span<const DoubledAtom> atoms) {
  std::vector<std::pair<Ordinal, Rational>> ranked;
  for (const auto& a : atoms) {
    if (a.copy != 1 && a.copy != -1) throw Error(ErrorCode::kInvalidMeasure, "doubled-space copy must be +1 or -1");
    if (a.weight <= 0) throw Error(ErrorCode::kInvalidMeasure, "atom weights must be positive");
    ranked.emplace_back(cb_rank(a.point, space), a.weight);
  }
  return height_from_ranks(ranked);
}

OrdinalMeasure absolute_measure(const OrdinalSpace& space, std::span<const SignedAtom> atoms) {
  std::vector<Atom> out;
  for (const auto& a : atoms) {
    if (a.weight == 0) throw Error(ErrorCode::kInvalidMeasure, "signed atoms must have non-zero weight");
    out.push_back(Atom{a.point, abs(a.weight)});
  }
  return OrdinalMeasure(space, std::move(out));
}

}  // namespace szlab
