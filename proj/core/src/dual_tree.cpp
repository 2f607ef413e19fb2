#include "szlab/dual_tree.hpp"

#include <algorithm>

#include "szlab/error.hpp"

namespace szlab {

TreeNode::TreeNode(std::vector<std::uint8_t> path) : path_(std::move(path)) {
  for (auto d : path_) {
    if (d > 1) throw Error(ErrorCode::kParseError, "tree paths are over {0, 1}");
  }
}

TreeNode TreeNode::parse(std::string_view bits) {
  std::vector<std::uint8_t> path;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kParseError, "node must be a 0/1 string, got '" + std::string(bits) + "'");
    path.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TreeNode(std::move(path));
}

TreeNode TreeNode::truncate(std::size_t t) const {
  if (t > path_.size()) throw Error(ErrorCode::kIndexOutOfRange, "truncation longer than the node");
  return TreeNode({path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(t)});
}

TreeNode TreeNode::child(std::uint8_t direction) const {
  auto path = path_;
  path.push_back(direction);
  return TreeNode(std::move(path));
}

bool TreeNode::is_prefix_of(const TreeNode& other) const {
  return path_.size() <= other.path_.size() && std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string to_string(const TreeNode& node) {
  std::string out;
  for (auto d : node.path()) out += static_cast<char>('0' + d);
  return out;
}

TreeValuation::TreeValuation(const BDSpace& space, std::size_t k) : space_(&space), k_(k) {
  if (k == 0 || k > space.dims().back()) {
    throw Error(ErrorCode::kIndexOutOfRange, "basis index " + std::to_string(k) + " outside 1.." +
                                                 std::to_string(space.dims().back()));
  }
  memo_.emplace(TreeNode(), WValue{false, Rational(1), 0, k});
}

WValue TreeValuation::child_value(const WValue& parent, std::uint8_t direction) const {
  if (parent.infinite) return WValue::infinity();
  if (parent.l <= 2) return WValue{false, Rational(0), parent.m, 0};
  const PhiTuple& t = space_->phi(parent.l);
  if (direction == 0) return WValue{false, Rational(space_->params().a * t.sigma1), parent.m, t.i};
  return WValue{false, Rational(space_->params().b * t.sigma2), std::max(parent.m, t.m), t.j};
}

const WValue& TreeValuation::value(const TreeNode& node) {
  if (auto it = memo_.find(node); it != memo_.end()) return it->second;
  // Walk down from the deepest memoised prefix.
  std::size_t t = node.length();
  while (!memo_.contains(node.truncate(t))) --t;
  const WValue* current = &memo_.at(node.truncate(t));
  for (; t < node.length(); ++t) {
    WValue next = child_value(*current, node.path()[t]);
    current = &memo_.insert_or_assign(node.truncate(t + 1), std::move(next)).first->second;
  }
  return *current;
}

Rational node_eval(TreeValuation& g, const TreeNode& node, std::span<const Rational> x) {
  Rational product(1);
  for (std::size_t j = 1; j <= node.length(); ++j) {
    const WValue& v = g.value(node.truncate(j));
    if (v.infinite) throw Error(ErrorCode::kUndefined, "node evaluation at infinity");
    product *= v.c;
    if (sgn(product) == 0) return Rational(0);
  }
  const WValue& here = g.value(node);
  if (here.l > x.size()) {
    throw Error(ErrorCode::kWindowTooSmall, "R = " + std::to_string(here.l) + " outside a window of " +
                                                std::to_string(x.size()));
  }
  const Rational coordinate = x[here.l - 1];
  return product * (coordinate - g.space().project_coordinate(here.m, here.l, x));
}

std::size_t stopping_depth(TreeValuation& g, const TreeNode& branch_prefix, std::size_t s) {
  const std::size_t ds = g.space().dim(s);
  for (std::size_t t = 0; t <= branch_prefix.length(); ++t) {
    if (g.value(branch_prefix.truncate(t)).l <= ds) return t;
  }
  throw Error(ErrorCode::kIndexOutOfRange, "branch prefix '" + to_string(branch_prefix) +
                                               "' ends before the stopping index");
}

namespace {

// R strictly decreases from parent to child, so the recursion is bounded by k.
void collect_antichain(TreeValuation& g, const TreeNode& node, std::size_t ds, std::vector<TreeNode>& out,
                       std::vector<TreeNode>* interior) {
  if (g.value(node).l <= ds) {
    out.push_back(node);
    return;
  }
  if (interior) interior->push_back(node);
  collect_antichain(g, node.child(0), ds, out, interior);
  collect_antichain(g, node.child(1), ds, out, interior);
}

}  // namespace

std::vector<TreeNode> maximal_antichain(TreeValuation& g, std::size_t s) {
  std::vector<TreeNode> out;
  collect_antichain(g, TreeNode(), g.space().dim(s), out, nullptr);
  return out;
}

AntichainCheck antichain_identity_check(TreeValuation& g, std::size_t s, std::span<const Rational> x) {
  const auto projected = g.space().project(s, x);
  if (!std::equal(projected.begin(), projected.end(), x.begin(), x.end())) {
    throw Error(ErrorCode::kParamInvalid, "x is not in the range of P_" + std::to_string(s));
  }
  if (g.k() > x.size()) throw Error(ErrorCode::kWindowTooSmall, "window does not reach coordinate k");

  std::vector<TreeNode> antichain, interior;
  collect_antichain(g, TreeNode(), g.space().dim(s), antichain, &interior);

  AntichainCheck check;
  check.coordinate = x[g.k() - 1];
  check.antichain_size = antichain.size();
  for (const auto& node : antichain) check.antichain_sum += node_eval(g, node, x);
  for (const auto& node : interior) {
    ++check.splits_checked;
    const Rational whole = node_eval(g, node, x);
    const Rational split = node_eval(g, node.child(0), x) + node_eval(g, node.child(1), x);
    if (whole != split) ++check.splits_failed;
  }
  return check;
}

SzlenkBound szlenk_bound(const BDParams& params, const Rational& eps) {
  if (params.a >= 1) throw Error(ErrorCode::kParamInvalid, "the finite Szlenk bound needs a < 1");
  if (eps <= 0) throw Error(ErrorCode::kNonpositivePoint, "eps must be positive");
  SzlenkBound out;
  out.sup_estimate = 1 + params.lambda;
  out.threshold = eps / 4;
  Rational tail = out.sup_estimate / (1 - params.a);
  std::size_t n = 0;
  do {
    tail *= params.a;
    ++n;
  } while (!(tail < out.threshold));
  out.depth = n;
  out.tail = tail;
  mpz_ui_pow_ui(out.bound.get_mpz_t(), 2, n + 1);
  out.bound += 1;
  return out;
}

}  // namespace szlab
