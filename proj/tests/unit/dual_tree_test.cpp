#include <doctest.h>

#include <functional>
#include <random>

#include "series_fixture.hpp"
#include "szlab/dual_tree.hpp"
#include "szlab/error.hpp"

using namespace szlab;

namespace {

Rational q(const char* text) { return parse_rational(text); }

WValue w(const char* c, std::size_t m, std::size_t l) { return WValue{false, q(c), m, l}; }

const BDSpace& space4() {
  static const BDSpace space(BDParams{}, 4);
  return space;
}

std::vector<Rational> basis_image(const BDSpace& space, std::size_t s, std::size_t r) {
  std::vector<Rational> e(space.dim(space.max_level()));
  e[r - 1] = 1;
  return space.project(s, e);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParseError;
}

// Every node down to the given depth, depth first.
void for_each_node(std::size_t depth, const std::function<void(const TreeNode&)>& visit, TreeNode node = {}) {
  visit(node);
  if (node.length() == depth) return;
  for_each_node(depth, visit, node.child(0));
  for_each_node(depth, visit, node.child(1));
}

}  // namespace

TEST_CASE("nodes") {
  TreeNode n = TreeNode::parse("011");
  CHECK(n.length() == 3);
  CHECK(to_string(n) == "011");
  CHECK(n.truncate(1) == TreeNode::parse("0"));
  CHECK(n.truncate(0) == TreeNode());
  CHECK(TreeNode::parse("01").is_prefix_of(n));
  CHECK_FALSE(TreeNode::parse("1").is_prefix_of(n));
  CHECK(TreeNode().child(1) == TreeNode::parse("1"));
  CHECK(to_string(TreeNode()).empty());
  CHECK(code_of([] { TreeNode::parse("012"); }) == ErrorCode::kParseError);
}

TEST_CASE("valuation of g_3") {
  TreeValuation g(space4(), 3);
  CHECK(g.value(TreeNode()) == w("1", 0, 3));
  CHECK(g.value(TreeNode::parse("0")) == w("1/2", 0, 1));
  CHECK(g.value(TreeNode::parse("1")) == w("1/4", 1, 1));
  CHECK(g.value(TreeNode::parse("00")) == w("0", 0, 0));
  CHECK(g.value(TreeNode::parse("00")).coefficient() == 0);
  CHECK(g.value(TreeNode::parse("1")).omega_part() == 1);
  CHECK(g.value(TreeNode::parse("1")).finite_part() == 1);
  CHECK(code_of([] { TreeValuation(space4(), 131); }) == ErrorCode::kIndexOutOfRange);
  CHECK(code_of([] { TreeValuation(space4(), 0); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("node evaluation") {
  TreeValuation g(space4(), 3);
  const auto x = basis_image(space4(), 1, 1);
  CHECK(node_eval(g, TreeNode(), x) == q("1/2"));
  CHECK(x[2] == q("1/2"));
  CHECK(node_eval(g, TreeNode::parse("0"), x) == q("1/2"));
  CHECK(node_eval(g, TreeNode::parse("1"), x) == 0);
  CHECK(node_eval(g, TreeNode::parse("00"), x) == 0);
  CHECK(node_eval(g, TreeNode::parse("0010"), x) == 0);
}

TEST_CASE("node evaluation needs a wide enough window") {
  TreeValuation g(space4(), 20);
  std::vector<Rational> small(10);
  CHECK(code_of([&] { node_eval(g, TreeNode(), small); }) == ErrorCode::kWindowTooSmall);
}

TEST_CASE("stopping depths") {
  TreeValuation g3(space4(), 3);
  CHECK(stopping_depth(g3, TreeNode::parse("0"), 1) == 1);
  CHECK(stopping_depth(g3, TreeNode::parse("1"), 1) == 1);
  TreeValuation g1(space4(), 1);
  CHECK(stopping_depth(g1, TreeNode::parse("010"), 1) == 0);
  TreeValuation g5(space4(), 5);
  CHECK(stopping_depth(g5, TreeNode::parse("1"), 2) == 1);
  CHECK(stopping_depth(g5, TreeNode::parse("0"), 2) == 1);
  TreeValuation g50(space4(), 50);
  CHECK(code_of([&] { stopping_depth(g50, TreeNode(), 1); }) == ErrorCode::kIndexOutOfRange);
}

TEST_CASE("maximal antichains") {
  TreeValuation g3(space4(), 3);
  CHECK(maximal_antichain(g3, 1) == std::vector<TreeNode>{TreeNode::parse("0"), TreeNode::parse("1")});
  TreeValuation g2(space4(), 2);
  CHECK(maximal_antichain(g2, 2) == std::vector<TreeNode>{TreeNode()});
  TreeValuation g10(space4(), 10);
  CHECK(maximal_antichain(g10, 2) == std::vector<TreeNode>{TreeNode::parse("0"), TreeNode::parse("1")});
  CHECK(g10.value(TreeNode::parse("0")).finite_part() <= 2);
  CHECK(g10.value(TreeNode::parse("1")).finite_part() <= 2);
}

TEST_CASE("antichain identity examples") {
  TreeValuation g3(space4(), 3);
  AntichainCheck c = antichain_identity_check(g3, 1, basis_image(space4(), 1, 1));
  CHECK(c.coordinate == q("1/2"));
  CHECK(c.antichain_sum == q("1/2"));
  CHECK(c.holds());

  for (std::size_t k = 1; k <= 10; ++k) {
    TreeValuation g(space4(), k);
    for (std::size_t r = 1; r <= 2; ++r) CHECK(antichain_identity_check(g, 2, basis_image(space4(), 2, r)).holds());
  }
  TreeValuation g1(space4(), 1);
  AntichainCheck trivial = antichain_identity_check(g1, 1, basis_image(space4(), 1, 1));
  CHECK(trivial.antichain_size == 1);
  CHECK(trivial.holds());

  std::vector<Rational> outside(130);
  outside[5] = 1;
  CHECK(code_of([&] { antichain_identity_check(g3, 1, outside); }) == ErrorCode::kParamInvalid);
}

TEST_CASE("antichain identity over the parameter grid") {
  for (const char* text : {"1/2,1/4,2", "1/3,1/4,2", "3/4,1/8,2", "1/2,1/3,3", "2/3,1/5,3/2"}) {
    const BDSpace space(BDParams::parse(text), 4);
    for (std::size_t k = 1; k <= space.dim(3); ++k) {
      for (std::size_t s = 1; s <= 2; ++s) {
        TreeValuation g(space, k);
        for (std::size_t r = 1; r <= space.dim(s); ++r) {
          AntichainCheck c = antichain_identity_check(g, s, basis_image(space, s, r));
          REQUIRE_MESSAGE(c.holds(), text << " k=" << k << " s=" << s << " r=" << r);
        }
      }
    }
  }
}

TEST_CASE("branch structure") {
  for (std::size_t k : {3u, 7u, 10u, 11u, 40u, 130u}) {
    TreeValuation g(space4(), k);
    for_each_node(7, [&](const TreeNode& node) {
      const WValue& v = g.value(node);
      REQUIRE_FALSE(v.infinite);
      if (node.length() == 0) return;
      const WValue& parent = g.value(node.truncate(node.length() - 1));
      REQUIRE(v.omega_part() >= parent.omega_part());
      if (parent.coefficient() == 0) REQUIRE(v.coefficient() == 0);
      if (parent.finite_part() > 2) REQUIRE(v.finite_part() < parent.finite_part());
    });
  }
}

TEST_CASE("antichains are incomparable and cover every long branch") {
  for (std::size_t k : {3u, 9u, 12u, 60u, 130u}) {
    for (std::size_t s = 1; s <= 3; ++s) {
      TreeValuation g(space4(), k);
      const auto nodes = maximal_antichain(g, s);
      std::size_t deepest = 0;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        deepest = std::max(deepest, nodes[i].length());
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          if (i != j) REQUIRE_FALSE(nodes[i].is_prefix_of(nodes[j]));
        }
      }
      for_each_node(deepest, [&](const TreeNode& branch) {
        if (branch.length() != deepest) return;
        const auto hits = std::count_if(nodes.begin(), nodes.end(), [&](const TreeNode& n) { return n.is_prefix_of(branch); });
        REQUIRE(hits == 1);
      });
    }
  }
}

TEST_CASE("Szlenk bound") {
  SzlenkBound b = szlenk_bound(BDParams{}, q("1"));
  CHECK(b.depth == 5);
  CHECK(b.bound == 65);
  CHECK(b.sup_estimate == 3);
  CHECK(b.tail == q("3/16"));
  CHECK(b.tail < b.threshold);

  SzlenkBound edge = szlenk_bound(BDParams{}, q("13"));
  CHECK(edge.depth == 1);
  CHECK(edge.bound == 5);
  CHECK(szlenk_bound(BDParams{}, q("12")).depth == 2);

  CHECK(code_of([] { szlenk_bound(BDParams::parse("1,1/8,2"), q("1")); }) == ErrorCode::kParamInvalid);
  CHECK(code_of([] { szlenk_bound(BDParams{}, q("0")); }) == ErrorCode::kNonpositivePoint);

  Integer previous;
  for (long n = 1; n <= 16; ++n) {
    SzlenkBound next = szlenk_bound(BDParams{}, ratio(n, 8));
    if (n > 1) CHECK(next.bound <= previous);
    // Minimality: one level shallower misses the threshold.
    if (next.depth > 1) {
      CHECK(pow(q("1/2"), next.depth - 1) * next.sup_estimate / q("1/2") >= next.threshold);
    }
    previous = next.bound;
  }
}

TEST_CASE("truncated series stay within the geometric bound") {
  std::mt19937_64 rng(31);
  const BDSpace& space = space4();
  const Rational& a = space.params().a;
  const Rational s = 1 + space.params().lambda;
  std::uniform_int_distribution<int> digit(-4, 4);
  for (int n = 0; n < 200; ++n) {
    const auto series = szlab::testing::random_series(rng, space, 8);
    std::vector<Rational> x(space.dim(4));
    for (auto& v : x) v = ratio(digit(rng), 4);
    const Rational norm = sup_norm(x);
    const Rational value = szlab::testing::evaluate_series(space, series, x);
    REQUIRE(abs(value) <= s / (1 - a) * norm);
    for (std::size_t j = 0; j < series.size(); ++j) REQUIRE(abs(series[j].c) <= pow(a, j));
  }
}
