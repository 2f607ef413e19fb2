#include <doctest.h>

#include <random>
#include <utility>

#include "generators.hpp"
#include "rearrange_closed_form.hpp"
#include "szlab/error.hpp"
#include "szlab/step_function.hpp"

using namespace szlab;

namespace {

Rational q(const char* text) { return parse_rational(text); }

StepFunction sf(std::initializer_list<std::pair<const char*, const char*>> pieces) {
  std::vector<Piece> out;
  for (const auto& [end, value] : pieces) out.push_back({q(end), parse_ordinal(value)});
  return StepFunction::from_pieces(std::move(out));
}

StepFunction example() { return sf({{"1/4", "w"}, {"1", "1"}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(sf({{"1/4", "1"}, {"1/2", "1"}, {"1", "0"}}) == sf({{"1/2", "1"}}));
  CHECK(sf({{"1/2", "0"}}).is_zero());
  CHECK(code_of([] { sf({{"1/2", "1"}, {"1/4", "2"}}); }) == ErrorCode::kParseError);
  CHECK(code_of([] { sf({{"0", "1"}}); }) == ErrorCode::kParseError);
  CHECK(example().support_end() == 1);
  CHECK(example().is_non_increasing());
  CHECK_FALSE(sf({{"1/4", "1"}, {"1/2", "2"}}).is_non_increasing());
}

TEST_CASE("evaluation is left-continuous") {
  const StepFunction g = example();
  CHECK(g(q("1/4")) == Ordinal::omega());
  CHECK(g(q("1/2")) == Ordinal(1));
  CHECK(g(q("1")) == Ordinal(1));
  CHECK(g(q("2")).is_zero());
  CHECK(code_of([&] { g(Rational(0)); }) == ErrorCode::kNonpositivePoint);
  CHECK(code_of([&] { g(q("-1/3")); }) == ErrorCode::kNonpositivePoint);
}

TEST_CASE("subtracting an indicator") {
  CHECK(sub_indicator(example(), Ordinal(1), q("1/2")) == sf({{"1/4", "w"}, {"1/2", "0"}, {"1", "1"}}));
  CHECK(sub_indicator(example(), Ordinal(), q("1/2")) == example());
  CHECK(sub_indicator(sf({{"1", "w"}}), Ordinal::omega(), q("1")).is_zero());
  CHECK(code_of([] { sub_indicator(example(), Ordinal(2), q("1/2")); }) == ErrorCode::kUndefinedSubtraction);
}

TEST_CASE("decreasing rearrangement") {
  CHECK(decreasing_rearrangement(sf({{"1/4", "0"}, {"1", "1"}})) == sf({{"3/4", "1"}}));
  CHECK(decreasing_rearrangement(example()) == example());
  // Level sets keep their measure: the 1s on (1/2,1] become (1/4,3/4].
  CHECK(decreasing_rearrangement(sf({{"1/4", "w"}, {"1/2", "0"}, {"1", "1"}})) == sf({{"1/4", "w"}, {"3/4", "1"}}));
  CHECK(decreasing_rearrangement(StepFunction()).is_zero());
}

TEST_CASE("compression adds gamma on the left") {
  CHECK(epsilon_compression(example(), q("1/4"), Ordinal::omega()) == sf({{"1/4", "w+1"}, {"3/4", "1"}}));
  CHECK(epsilon_compression(example(), q("1/4"), Ordinal()) == example());
  CHECK(epsilon_compression(sf({{"1", "2"}}), q("1/2"), Ordinal(1)) == sf({{"1/2", "3"}, {"1", "1"}}));
  CHECK(code_of([] { epsilon_compression(sf({{"1/4", "1"}, {"1/2", "2"}}), q("1/8"), Ordinal(1)); }) ==
        ErrorCode::kNotNonIncreasing);
  CHECK(code_of([] { epsilon_compression(example(), q("1/2"), Ordinal::omega()); }) ==
        ErrorCode::kUndefinedSubtraction);
}

TEST_CASE("eps-area of the two-level example") {
  CHECK(epsilon_area(example(), q("3/4")).area == Ordinal(1));
  CHECK(epsilon_area(example(), q("1/4")).area == parse_ordinal("w+3"));
  // The compression chain from the example at eps = 1/4.
  const CompressionTrace trace = epsilon_area(example(), q("1/4"));
  CHECK(trace.accumulated_stage(0) == example());
  CHECK(trace.accumulated_stage(1) == sf({{"1/4", "w+1"}, {"3/4", "1"}}));
  CHECK(trace.accumulated_stage(2) == sf({{"1/4", "w+2"}, {"1/2", "1"}}));
  CHECK(trace.accumulated_stage(3) == sf({{"1/4", "w+3"}}));
}

TEST_CASE("eps = 1/2 keeps compressing while mass of height 1 reaches past eps") {
  // Each compression by 1 moves the 1s on (1/2, 1] under eps; the w block is never exhausted.
  const CompressionTrace trace = epsilon_area(example(), q("1/2"));
  CHECK(trace.area == Ordinal(3));
  CHECK(trace.accumulated_stage(1) == sf({{"1/4", "w"}, {"1/2", "2"}, {"3/4", "1"}}));
  CHECK(trace.accumulated_stage(2) == sf({{"1/4", "w"}, {"1/2", "3"}}));
  CHECK(epsilon_area_oracle(example(), q("1/2"), 8) == Ordinal(3));
}

TEST_CASE("areas of constant functions") {
  CHECK(epsilon_area(sf({{"1", "w"}}), q("1/2")).area == parse_ordinal("w*2"));
  CHECK(epsilon_area(sf({{"1", "2"}}), q("1/2")).area == Ordinal(4));
  CHECK(epsilon_area(StepFunction(), q("1/2")).area.is_zero());
  CHECK(code_of([] { epsilon_area(example(), Rational(0)); }) == ErrorCode::kNonpositivePoint);
}

TEST_CASE("exhaustive search") {
  CHECK(epsilon_area_oracle(sf({{"1", "1"}}), q("1"), 4) == Ordinal(1));
  CHECK(epsilon_area_oracle(sf({{"1", "2"}}), q("1/2"), 8) == Ordinal(4));
  CHECK(epsilon_area_oracle(example(), q("1/4"), 16) == parse_ordinal("w+3"));
  CHECK(code_of([] { epsilon_area_oracle(sf({{"1", "w^2"}}), q("1/2"), 8); }) == ErrorCode::kOutOfScope);
  CHECK(code_of([] { epsilon_area_oracle(sf({{"1", "3"}}), q("1/4"), 2); }) == ErrorCode::kDepthExceeded);
}

TEST_CASE("area with varying widths") {
  const StepFunction one = sf({{"1", "1"}});
  const std::vector<Rational> twice{q("1/2"), q("1/2")};
  const std::vector<Rational> thrice{q("1/2"), q("1/2"), q("1/2")};
  CHECK(multi_epsilon_area(one, twice) == 2);
  CHECK(multi_epsilon_area(one, thrice) == 0);
  CHECK(multi_epsilon_area(one, std::vector<Rational>{}) == 0);
}

TEST_CASE("dominance witness") {
  const StepFunction g = sf({{"1/2", "1"}});
  const StepFunction h = sf({{"1", "1"}});
  CHECK(gap_measure(g, h) == q("1/2"));
  CHECK(epsilon_area(g, q("1/2")).area == Ordinal(1));
  CHECK(epsilon_area(h, q("1/2")).area == Ordinal(2));
}

TEST_CASE("rearrangement preserves level-set measures") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 6);
  for (int n = 0; n < 300; ++n) {
    // Arbitrary (non-monotone) input.
    std::vector<Piece> pieces;
    Rational end(0);
    for (int i = len(rng); i > 0; --i) {
      end += ratio(len(rng), 6);
      pieces.push_back({end, szlab::testing::random_small_ordinal(rng)});
    }
    const StepFunction f = StepFunction::from_pieces(pieces);
    const StepFunction r = decreasing_rearrangement(f);
    REQUIRE(r.is_non_increasing());
    for (const auto& p : f.pieces()) REQUIRE(level_measure(r, p.value) == level_measure(f, p.value));
    REQUIRE(r.support_end() == f.support_end());
  }
}

TEST_CASE("single-interval rearrangement matches the closed form") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 200) {
    StepFunction g = szlab::testing::random_non_increasing(rng, 4, 8);
    const auto& pieces = g.pieces();
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    const std::size_t i = pick(rng);
    const Rational a = i == 0 ? Rational(0) : pieces[i - 1].end;
    const Rational b = pieces[i].end;
    const Ordinal gamma = szlab::testing::random_small_ordinal(rng);
    if (gamma > g(b)) continue;
    const szlab::testing::SingleIntervalRearrangement closed(g, a, b, gamma);
    const StepFunction actual = decreasing_rearrangement(subtract_on(g, gamma, a, b));
    for (const auto& t : szlab::testing::probe_points(actual, g, closed.breakpoints())) {
      REQUIRE_MESSAGE(actual(t) == closed(t), "t = " << to_string(t));
    }
    ++checked;
  }
}

TEST_CASE("one compression step preserves dominance and the gap") {
  std::mt19937_64 rng(9);
  for (int n = 0; n < 300; ++n) {
    const StepFunction g = szlab::testing::random_non_increasing(rng, 4, 8);
    const StepFunction h = szlab::testing::pointwise_max(g, szlab::testing::random_non_increasing(rng, 4, 8));
    const Rational eps = ratio(std::uniform_int_distribution<long>(1, 8)(rng), 8);
    const Ordinal top = g(eps);
    if (top.is_zero()) continue;
    for (const Ordinal& gamma : {leading_power(top), top, Ordinal(1)}) {
      const StepFunction gg = decreasing_rearrangement(sub_indicator(g, gamma, eps));
      const StepFunction hh = decreasing_rearrangement(sub_indicator(h, gamma, eps));
      REQUIRE(dominated(gg, hh));
      REQUIRE(gap_measure(gg, hh) >= gap_measure(g, h));
    }
  }
}

TEST_CASE("area grows as eps shrinks, and traces are well formed") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 300; ++n) {
    const StepFunction g = szlab::testing::random_non_increasing(rng, 4, 8, 3, 4);
    Ordinal previous;
    for (long k = 8; k >= 1; --k) {
      const Rational eps = ratio(k, 8);
      const CompressionTrace trace = epsilon_area(g, eps);
      REQUIRE(trace.area >= previous);
      previous = trace.area;

      Ordinal sum;
      for (std::size_t i = 0; i < trace.gammas.size(); ++i) {
        const Ordinal& gamma = trace.gammas[i];
        REQUIRE(gamma == leading_power(gamma));
        if (i > 0) REQUIRE(gamma <= trace.gammas[i - 1]);
        sum = add(sum, gamma);
      }
      REQUIRE(sum == trace.area);
      REQUIRE(trace.stages.back()(eps).is_zero());
      REQUIRE(trace.stages.size() == trace.gammas.size() + 1);
    }
  }
}

TEST_CASE("heights below the absorption threshold change nothing") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 200; ++n) {
    const StepFunction g = szlab::testing::random_non_increasing(rng, 4, 8, 3, 3);
    const Rational eps = ratio(std::uniform_int_distribution<long>(1, 8)(rng), 8);
    const Ordinal top = g(eps);
    for (const Ordinal& gamma : {Ordinal(1), Ordinal(2), Ordinal::omega()}) {
      if (gamma <= top && absorbs(gamma, top)) REQUIRE(sub_indicator(g, gamma, eps) == g);
    }
  }
}
