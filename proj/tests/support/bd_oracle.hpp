#pragma once

// Embeddings evaluated on vectors straight from the extension recursion
//   i_{n,n+1}(x) = x + sum_{d_n < k <= d_{n+1}} f_phi(k)(x) e_k,
//   f_phi(k)(x) = a s' x_i + b s'' (x - i_{m,n} pi_m x)_j,
// recomputing every intermediate embedding instead of reusing cached matrices.
// Only the tuple enumeration phi is taken from the space.

#include <vector>

#include "szlab/bd_space.hpp"
#include "szlab/rational.hpp"

namespace szlab::testing {

class EmbeddingOracle {
 public:
  explicit EmbeddingOracle(const BDSpace& space) : space_(space) {}

  // i_{m,n} x for x in E_m (1 <= m <= n).
  std::vector<Rational> embed(std::size_t m, std::size_t n, std::vector<Rational> x) const {
    for (std::size_t level = m; level < n; ++level) x = step(level, x);
    return x;
  }

  std::vector<Rational> embed_column(std::size_t m, std::size_t n, std::size_t column) const {
    std::vector<Rational> e(space_.dim(m));
    e[column] = 1;
    return embed(m, n, e);
  }

 private:
  std::vector<Rational> step(std::size_t n, const std::vector<Rational>& x) const {
    const BDParams& p = space_.params();
    // i_{m,n} pi_m x for each m < n, computed once for this x.
    std::vector<std::vector<Rational>> lifted(n);
    for (std::size_t m = 1; m < n; ++m) {
      std::vector<Rational> head(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(space_.dim(m)));
      lifted[m] = embed(m, n, head);
    }
    std::vector<Rational> out = x;
    // E_1 -> E_2 pads with a zero coordinate; tuples start at level 2.
    if (n == 1) {
      out.resize(space_.dim(2));
      return out;
    }
    for (std::size_t k = space_.dim(n) + 1; k <= space_.dim(n + 1); ++k) {
      const PhiTuple& t = space_.phi(k);
      Rational value = p.a * t.sigma1 * x[t.i - 1] + p.b * t.sigma2 * (x[t.j - 1] - lifted[t.m][t.j - 1]);
      out.push_back(value);
    }
    return out;
  }

  const BDSpace& space_;
};

}  // namespace szlab::testing
