#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "szlab/bd_space.hpp"
#include "szlab/rational.hpp"

namespace szlab {

/// A node of the rooted binary tree: the 0/1 path from the root.
class TreeNode {
 public:
  TreeNode() = default;
  explicit TreeNode(std::vector<std::uint8_t> path);

  /// "" is the root, "01" is child 1 of child 0. Throws kParseError on other characters.
  static TreeNode parse(std::string_view bits);

  std::size_t length() const { return path_.size(); }
  const std::vector<std::uint8_t>& path() const { return path_; }
  /// First t steps.
  TreeNode truncate(std::size_t t) const;
  TreeNode child(std::uint8_t direction) const;
  /// True when this node is an initial segment of (or equal to) other.
  bool is_prefix_of(const TreeNode& other) const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  friend auto operator<=>(const TreeNode&, const TreeNode&) = default;

 private:
  std::vector<std::uint8_t> path_;
};

std::string to_string(const TreeNode& node);

/// A point of W: either infinity or (c, w*m + l) with c in {0, +-a, +-b, 1}.
struct WValue {
  bool infinite = false;
  Rational c;
  std::size_t m = 0;
  std::size_t l = 0;

  static WValue infinity() { return WValue{true, Rational(0), 0, 0}; }

  /// V, Q, R extractors.
  const Rational& coefficient() const { return c; }
  std::size_t omega_part() const { return m; }
  std::size_t finite_part() const { return l; }

  friend bool operator==(const WValue&, const WValue&) = default;
};

/// The tree representative g_k of the basis functional e_k^*, evaluated lazily and
/// memoised per node. Holds a reference to the space; one valuation per (space, k)
/// session, not shared between threads.
class TreeValuation {
 public:
  /// Throws kIndexOutOfRange unless 1 <= k <= d_N.
  TreeValuation(const BDSpace& space, std::size_t k);

  std::size_t k() const { return k_; }
  const BDSpace& space() const { return *space_; }

  const WValue& value(const TreeNode& node);

 private:
  WValue child_value(const WValue& parent, std::uint8_t direction) const;

  const BDSpace* space_;
  std::size_t k_;
  std::map<TreeNode, WValue> memo_;
};

/// <g_k, N, x>: product of the V-values along the path below the root times
/// ((I - P_Q^*) e_R^*)(x) at the node. x is an element of X given by its E_N window.
/// Throws kWindowTooSmall if R exceeds the window.
Rational node_eval(TreeValuation& g, const TreeNode& node, std::span<const Rational> x);

/// Least t <= length(prefix) with R(g_k(I(prefix, t))) <= d_s. Throws kIndexOutOfRange
/// when the branch has not stopped within the prefix.
std::size_t stopping_depth(TreeValuation& g, const TreeNode& branch_prefix, std::size_t s);

/// Nodes at which each branch first reaches R <= d_s, in depth-first order (0 before 1).
std::vector<TreeNode> maximal_antichain(TreeValuation& g, std::size_t s);

struct AntichainCheck {
  Rational coordinate;       // e_k^*(x)
  Rational antichain_sum;    // sum of <g_k, N_i, x> over the antichain
  std::size_t antichain_size = 0;
  std::size_t splits_checked = 0;
  std::size_t splits_failed = 0;

  bool holds() const { return coordinate == antichain_sum && splits_failed == 0; }
};

/// Checks e_k^*(x) = sum_i <g_k, N_i, x> and the two-child split at every node above
/// the antichain. x must lie in P_s X (kParamInvalid otherwise).
AntichainCheck antichain_identity_check(TreeValuation& g, std::size_t s, std::span<const Rational> x);

struct SzlenkBound {
  std::size_t depth = 0;     // N
  Integer bound;             // 2^{N+1} + 1
  Rational sup_estimate;     // S = 1 + lambda
  Rational tail;             // a^N * S / (1 - a)
  Rational threshold;        // eps / 4
};

/// Least N >= 1 with a^N * S / (1 - a) < eps/4, and the resulting finite bound
/// 2^{N+1} + 1 on the eps-Szlenk index of the closure of the basis. Throws
/// kParamInvalid if a >= 1 and kNonpositivePoint if eps <= 0.
SzlenkBound szlenk_bound(const BDParams& params, const Rational& eps);

}  // namespace szlab
