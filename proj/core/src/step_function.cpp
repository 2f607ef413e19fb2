#include "szlab/step_function.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "szlab/error.hpp"

namespace szlab {

namespace {

// Sorted union of both functions' breakpoints plus any extra cut points.
std::vector<Rational> merged_breaks(const StepFunction& f, const StepFunction& g,
                                    std::initializer_list<Rational> extra = {}) {
  std::vector<Rational> cuts;
  for (const auto& p : f.pieces()) cuts.push_back(p.end);
  for (const auto& p : g.pieces()) cuts.push_back(p.end);
  for (const auto& e : extra) {
    if (e > 0) cuts.push_back(e);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Applies fn(prev, end) for each segment (prev, end] of the cut list.
template <typename Fn>
void for_each_segment(const std::vector<Rational>& cuts, Fn&& fn) {
  Rational prev(0);
  for (const auto& end : cuts) {
    fn(prev, end);
    prev = end;
  }
}

void require_non_increasing(const StepFunction& g, const char* who) {
  if (!g.is_non_increasing()) {
    throw Error(ErrorCode::kNotNonIncreasing, std::string(who) + " requires a non-increasing function");
  }
}

}  // namespace

StepFunction StepFunction::from_pieces(std::vector<Piece> pieces) {
  StepFunction f;
  Rational prev(0);
  for (auto& p : pieces) {
    p.end.canonicalize();
    if (p.end <= prev) throw Error(ErrorCode::kParseError, "piece ends must be positive and strictly increasing");
    prev = p.end;
    if (!f.pieces_.empty() && f.pieces_.back().value == p.value) {
      f.pieces_.back().end = p.end;
    } else {
      f.pieces_.push_back(std::move(p));
    }
  }
  while (!f.pieces_.empty() && f.pieces_.back().value.is_zero()) f.pieces_.pop_back();
  return f;
}

Rational StepFunction::support_end() const { return pieces_.empty() ? Rational(0) : pieces_.back().end; }

bool StepFunction::is_non_increasing() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].value > pieces_[i - 1].value) return false;
  }
  return true;
}

Ordinal StepFunction::operator()(const Rational& t) const {
  if (t <= 0) throw Error(ErrorCode::kNonpositivePoint, "step functions live on (0, inf), got " + to_string(t));
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t,
                             [](const Piece& p, const Rational& x) { return p.end < x; });
  return it == pieces_.end() ? Ordinal() : it->value;
}

std::strong_ordering operator<=>(const StepFunction& a, const StepFunction& b) {
  const std::size_t n = std::min(a.pieces_.size(), b.pieces_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.pieces_[i].value <=> b.pieces_[i].value; c != 0) return c;
    const int e = cmp(a.pieces_[i].end, b.pieces_[i].end);
    if (e != 0) return e < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.pieces_.size() <=> b.pieces_.size();
}

StepFunction constant_on(const Ordinal& value, const Rational& end) {
  return StepFunction::from_pieces({Piece{end, value}});
}

Rational level_measure(const StepFunction& f, const Ordinal& value) {
  if (value.is_zero()) throw Error(ErrorCode::kUndefined, "the zero level set has infinite measure");
  Rational total(0), prev(0);
  for (const auto& p : f.pieces()) {
    if (p.value == value) total += p.end - prev;
    prev = p.end;
  }
  return total;
}

bool dominated(const StepFunction& f, const StepFunction& g) {
  bool ok = true;
  for_each_segment(merged_breaks(f, g), [&](const Rational&, const Rational& end) {
    if (f(end) > g(end)) ok = false;
  });
  return ok;
}

Rational gap_measure(const StepFunction& g, const StepFunction& h) {
  Rational total(0);
  const Ordinal one(1);
  for_each_segment(merged_breaks(g, h), [&](const Rational& prev, const Rational& end) {
    if (add(g(end), one) <= h(end)) total += end - prev;
  });
  return total;
}

StepFunction subtract_on(const StepFunction& f, const Ordinal& gamma, const Rational& lo, const Rational& hi) {
  if (gamma.is_zero()) return f;
  std::vector<Piece> out;
  for_each_segment(merged_breaks(f, StepFunction(), {lo, hi}), [&](const Rational& prev, const Rational& end) {
    Ordinal v = f(end);
    if (prev >= lo && end <= hi) v = subtract(v, gamma);
    out.push_back(Piece{end, std::move(v)});
  });
  return StepFunction::from_pieces(std::move(out));
}

StepFunction sub_indicator(const StepFunction& g, const Ordinal& gamma, const Rational& eps) {
  return subtract_on(g, gamma, Rational(0), eps);
}

StepFunction raise_on(const StepFunction& f, const Ordinal& gamma, const Rational& eps) {
  if (gamma.is_zero()) return f;
  std::vector<Piece> out;
  for_each_segment(merged_breaks(f, StepFunction(), {eps}), [&](const Rational&, const Rational& end) {
    Ordinal v = f(end);
    if (end <= eps) v = add(gamma, v);
    out.push_back(Piece{end, std::move(v)});
  });
  return StepFunction::from_pieces(std::move(out));
}

StepFunction decreasing_rearrangement(const StepFunction& f) {
  std::map<Ordinal, Rational, std::greater<>> lengths;
  Rational prev(0);
  for (const auto& p : f.pieces()) {
    if (!p.value.is_zero()) lengths[p.value] += p.end - prev;
    prev = p.end;
  }
  std::vector<Piece> out;
  Rational end(0);
  for (auto& [value, length] : lengths) {
    end += length;
    out.push_back(Piece{end, value});
  }
  return StepFunction::from_pieces(std::move(out));
}

StepFunction epsilon_compression(const StepFunction& g, const Rational& eps, const Ordinal& gamma) {
  if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
  require_non_increasing(g, "epsilon_compression");
  if (gamma > g(eps)) {
    throw Error(ErrorCode::kUndefinedSubtraction, "compression height " + to_string(gamma) + " exceeds g(eps)");
  }
  return raise_on(decreasing_rearrangement(sub_indicator(g, gamma, eps)), gamma, eps);
}

StepFunction CompressionTrace::accumulated_stage(std::size_t i) const {
  if (i >= stages.size()) throw Error(ErrorCode::kIndexOutOfRange, "no such compression stage");
  Ordinal prefix;
  for (std::size_t j = 0; j < i; ++j) prefix = add(prefix, gammas[j]);
  return raise_on(stages[i], prefix, epsilon);
}

CompressionTrace epsilon_area(const StepFunction& g, const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
  require_non_increasing(g, "epsilon_area");
  CompressionTrace trace;
  trace.epsilon = eps;
  trace.stages.push_back(g);
  for (;;) {
    const StepFunction& current = trace.stages.back();
    Ordinal height = current(eps);
    if (height.is_zero()) break;
    Ordinal gamma = leading_power(height);
    StepFunction next = decreasing_rearrangement(sub_indicator(current, gamma, eps));
    trace.area = add(trace.area, gamma);
    trace.gammas.push_back(std::move(gamma));
    trace.stages.push_back(std::move(next));
  }
  return trace;
}

namespace {

// Splits v = w*q + r for v < w^2.
std::pair<std::uint64_t, std::uint64_t> omega_digits(const Ordinal& v) {
  std::uint64_t q = 0, r = 0;
  for (const auto& t : v.terms()) {
    if (t.exponent == Ordinal(1)) {
      q = t.coefficient;
    } else if (t.exponent.is_zero()) {
      r = t.coefficient;
    } else {
      throw Error(ErrorCode::kOutOfScope, "oracle handles values below w^2 only, got " + to_string(v));
    }
  }
  return {q, r};
}

// Every compression height that can change the outcome for h at eps, up to
// equivalence. Write h(eps) = w*Q + R. Heights w*q + r with q < Q lose their finite
// part on both sides of the compression (h >= w*Q on (0, eps]), so r = 0 suffices
// there; with q = Q admissibility forces r <= R.
std::vector<Ordinal> oracle_candidates(const StepFunction& h, const Rational& eps) {
  const auto [top_q, top_r] = omega_digits(h(eps));
  std::vector<Ordinal> out;
  for (std::uint64_t q = 1; q < top_q; ++q) out.push_back(Ordinal::omega_power(Ordinal(1), q));
  const Ordinal base = Ordinal::omega_power(Ordinal(1), top_q);
  for (std::uint64_t r = 0; r <= top_r; ++r) {
    if (top_q == 0 && r == 0) continue;
    out.push_back(add(base, Ordinal(r)));
  }
  return out;
}

}  // namespace

Ordinal epsilon_area_oracle(const StepFunction& g, const Rational& eps, std::size_t max_depth) {
  if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
  require_non_increasing(g, "epsilon_area_oracle");
  for (const auto& p : g.pieces()) omega_digits(p.value);

  std::set<StepFunction> seen{g};
  std::vector<StepFunction> frontier{g};
  Ordinal best = g(eps);
  for (std::size_t depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::vector<StepFunction> next;
    const Ordinal before = best;
    for (const auto& h : frontier) {
      for (const auto& gamma : oracle_candidates(h, eps)) {
        StepFunction compressed = epsilon_compression(h, eps, gamma);
        if (seen.insert(compressed).second) {
          best = std::max(best, compressed(eps));
          next.push_back(std::move(compressed));
        }
      }
    }
    frontier = std::move(next);
    if (depth + 1 == max_depth && !frontier.empty() && best > before) {
      throw Error(ErrorCode::kDepthExceeded,
                  "oracle still improving at depth " + std::to_string(max_depth) + " (best " + to_string(best) + ")");
    }
  }
  return best;
}

std::size_t multi_epsilon_area(const StepFunction& g, std::span<const Rational> eps_seq) {
  require_non_increasing(g, "multi_epsilon_area");
  if (eps_seq.empty()) return 0;
  const Ordinal one(1);
  StepFunction current = g;
  for (const auto& eps : eps_seq) {
    if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
    if (current(eps).is_zero()) return 0;
    current = decreasing_rearrangement(sub_indicator(current, one, eps));
  }
  return eps_seq.size();
}

}  // namespace szlab
