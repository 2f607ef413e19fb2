#pragma once

// Closed-form rearrangement of g - gamma * 1_(a,b] when g is constant on (a,b]:
//
//   G(t) = g(t)                      t <= a or t > s
//        = g(t + (b - a))            a < t <= s - (b - a)
//        = g(t - (s - b)) - gamma    s - (b - a) < t <= s
//
// with s = sup{t : g(b) - gamma < g(t)}. Cases are tried in that order, which also
// covers gamma absorbed by g(b) (then s <= a and G = g).

#include <algorithm>
#include <vector>

#include "szlab/ordinal.hpp"
#include "szlab/rational.hpp"
#include "szlab/step_function.hpp"

namespace szlab::testing {

inline Rational strict_superlevel_end(const StepFunction& g, const Ordinal& level) {
  Rational end(0);
  for (const auto& p : g.pieces()) {
    if (p.value > level) end = p.end;
  }
  return end;
}

class SingleIntervalRearrangement {
 public:
  SingleIntervalRearrangement(StepFunction g, Rational a, Rational b, Ordinal gamma)
      : g_(std::move(g)), a_(std::move(a)), b_(std::move(b)), gamma_(std::move(gamma)) {
    s_ = strict_superlevel_end(g_, subtract(g_(b_), gamma_));
  }

  const Rational& s() const { return s_; }

  Ordinal operator()(const Rational& t) const {
    const Rational width = b_ - a_;
    if (t <= a_ || t > s_) return g_(t);
    if (t <= s_ - width) return g_(t + width);
    return subtract(g_(t - (s_ - b_)), gamma_);
  }

  // Points at which any piece of the closed form can change value.
  std::vector<Rational> breakpoints() const {
    const Rational width = b_ - a_;
    std::vector<Rational> out{a_, b_, s_, s_ - width};
    for (const auto& p : g_.pieces()) {
      out.push_back(p.end);
      out.push_back(p.end - width);
      out.push_back(p.end + (s_ - b_));
    }
    return out;
  }

 private:
  StepFunction g_;
  Rational a_, b_;
  Ordinal gamma_;
  Rational s_;
};

// Every point where two step functions could differ: their breakpoints, the extra
// candidates, and midpoints between consecutive positive ones.
inline std::vector<Rational> probe_points(const StepFunction& f, const StepFunction& g,
                                          std::vector<Rational> extra = {}) {
  for (const auto& p : f.pieces()) extra.push_back(p.end);
  for (const auto& p : g.pieces()) extra.push_back(p.end);
  std::vector<Rational> cuts;
  for (auto& x : extra) {
    if (x > 0) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Rational> out;
  Rational lo(0);
  for (const auto& c : cuts) {
    out.push_back((lo + c) / 2);
    out.push_back(c);
    lo = c;
  }
  out.push_back(lo + 1);
  return out;
}

}  // namespace szlab::testing
