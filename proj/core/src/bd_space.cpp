#include "szlab/bd_space.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "szlab/error.hpp"

namespace szlab {

BDParams BDParams::parse(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw Error(ErrorCode::kParseError, "params must be 'a,b,lambda'");
  return BDParams{parts[0], parts[1], parts[2]};
}

void BDParams::validate(bool allow_a_equal_one) const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kParamInvalid, why); };
  if (b <= 0) fail("b must be positive");
  if (!(b < a)) fail("b < a is required");
  if (a > 1) fail("a <= 1 is required");
  if (a == 1 && !allow_a_equal_one) fail("a < 1 is required (a = 1 only for matrix exploration)");
  if (lambda <= 1) fail("lambda > 1 is required");
  if (!(a + 2 * b * lambda < lambda)) fail("a + 2*b*lambda < lambda is required");
}

BDSpace::BDSpace(BDParams params, std::size_t max_level, Options options) : params_(std::move(params)) {
  params_.validate(options.allow_a_equal_one);
  if (max_level == 0) throw Error(ErrorCode::kLevelOutOfRange, "max level must be at least 1");
  if (max_level > options.level_cap) {
    throw Error(ErrorCode::kLevelOutOfRange, "max level " + std::to_string(max_level) + " exceeds the cap " +
                                                 std::to_string(options.level_cap));
  }

  dims_.push_back(1);
  if (max_level >= 2) dims_.push_back(2);
  while (dims_.size() < max_level) {
    const std::size_t n = dims_.size();
    std::size_t lower = 0;
    for (std::size_t m = 1; m < n; ++m) lower += dims_[m - 1];
    dims_.push_back(dims_[n - 1] + 4 * dims_[n - 1] * lower);
  }

  // Tuples of level n index the coordinates d_n < k <= d_{n+1}.
  for (std::size_t n = 2; n < max_level; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t i = 1; i <= dims_[m - 1]; ++i) {
        for (int s1 : {1, -1}) {
          for (std::size_t j = 1; j <= dims_[n - 1]; ++j) {
            for (int s2 : {1, -1}) phi_.push_back(PhiTuple{s1, i, m, s2, j});
          }
        }
      }
    }
  }

  embed_.resize(max_level);
  for (std::size_t n = 1; n < max_level; ++n) {
    const std::size_t dn = dims_[n - 1];
    const std::size_t dnext = dims_[n];
    RationalMatrix step(dnext, dn);
    for (std::size_t r = 0; r < dn; ++r) step(r, r) = 1;
    for (std::size_t k = std::max<std::size_t>(dn + 1, 3); k <= dnext; ++k) {
      auto row = functional_row(k);
      for (std::size_t c = 0; c < dn; ++c) step(k - 1, c) = std::move(row[c]);
    }
    auto& into_next = embed_[n];
    into_next.resize(n);
    for (std::size_t m = 1; m < n; ++m) into_next[m - 1] = step * embed_[n - 1][m - 1];
    into_next[n - 1] = std::move(step);
  }
}

std::size_t BDSpace::dim(std::size_t n) const {
  if (n == 0 || n > dims_.size()) {
    throw Error(ErrorCode::kLevelOutOfRange, "level " + std::to_string(n) + " not built (max " +
                                                 std::to_string(dims_.size()) + ")");
  }
  return dims_[n - 1];
}

std::size_t BDSpace::level_of(std::size_t k) const {
  if (k <= 2 || k > dims_.back()) {
    throw Error(ErrorCode::kIndexOutOfRange, "coordinate " + std::to_string(k) + " has no tuple");
  }
  std::size_t n = 2;
  while (dims_[n] < k) ++n;
  return n;
}

const PhiTuple& BDSpace::phi(std::size_t k) const {
  level_of(k);
  return phi_[k - 3];
}

std::vector<Rational> BDSpace::functional_row(std::size_t k) const {
  const std::size_t n = level_of(k);
  const PhiTuple& t = phi_[k - 3];
  std::vector<Rational> row(dims_[n - 1]);
  const Rational a_part = params_.a * t.sigma1;
  const Rational b_part = params_.b * t.sigma2;
  row[t.i - 1] += a_part;
  // b * sigma'' * e_j^*(x - i_{m,n} pi_m x)
  row[t.j - 1] += b_part;
  const RationalMatrix& lift = embed(t.m, n);
  for (std::size_t c = 0; c < dims_[t.m - 1]; ++c) {
    const Rational& v = lift(t.j - 1, c);
    if (sgn(v) != 0) row[c] -= b_part * v;
  }
  return row;
}

const RationalMatrix& BDSpace::embed(std::size_t m, std::size_t n) const {
  if (m == 0 || m >= n || n > dims_.size()) {
    throw Error(ErrorCode::kLevelOutOfRange, "embedding " + std::to_string(m) + " -> " + std::to_string(n) +
                                                 " needs 1 <= m < n <= " + std::to_string(dims_.size()));
  }
  return embed_[n - 1][m - 1];
}

RationalMatrix BDSpace::proj_window(std::size_t m, std::size_t n) const {
  const RationalMatrix& lift = embed(m, n);
  RationalMatrix out(lift.rows(), lift.rows());
  for (std::size_t r = 0; r < lift.rows(); ++r) {
    for (std::size_t c = 0; c < lift.cols(); ++c) out(r, c) = lift(r, c);
  }
  return out;
}

std::size_t BDSpace::window_level(std::size_t length) const {
  for (std::size_t n = 1; n <= dims_.size(); ++n) {
    if (dims_[n - 1] == length) return n;
  }
  throw Error(ErrorCode::kWindowTooSmall, "window length " + std::to_string(length) + " is not a built d_N");
}

std::vector<Rational> BDSpace::project(std::size_t m, std::span<const Rational> x) const {
  const std::size_t n = window_level(x.size());
  if (m == 0) return std::vector<Rational>(x.size());
  if (m >= n) return {x.begin(), x.end()};
  return matvec(embed(m, n), x.first(dims_[m - 1]));
}

Rational BDSpace::project_coordinate(std::size_t m, std::size_t r, std::span<const Rational> x) const {
  const std::size_t n = window_level(x.size());
  if (r == 0 || r > x.size()) {
    throw Error(ErrorCode::kWindowTooSmall, "coordinate " + std::to_string(r) + " outside the E_" +
                                                std::to_string(n) + " window");
  }
  if (m == 0) return Rational(0);
  if (m >= n || r <= dims_[m - 1]) return x[r - 1];
  const auto row = embed(m, n).row(r - 1);
  Rational out(0);
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) out += row[c] * x[c];
  }
  return out;
}

LambdaReport verify_lambda_bound(const BDSpace& space, std::size_t max_level) {
  space.dim(max_level);
  LambdaReport report;
  for (std::size_t n = 2; n <= max_level; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      EmbeddingNorm entry{m, n, op_norm_inf(space.embed(m, n))};
      if (!report.violation && entry.norm > space.params().lambda) report.violation = entry;
      report.norms.push_back(std::move(entry));
    }
  }
  return report;
}

std::vector<LawViolation> check_embedding_laws(const BDSpace& space, std::size_t max_level) {
  space.dim(max_level);
  std::vector<LawViolation> out;
  auto levels = [](std::size_t a, std::size_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; };

  for (std::size_t n = 2; n <= max_level; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      const RationalMatrix& e = space.embed(m, n);
      if (e.top_rows(space.dim(m)) != RationalMatrix::identity(space.dim(m))) {
        out.push_back({"identity-block", levels(m, n)});
      }
      for (std::size_t l = m + 1; l < n; ++l) {
        if (space.embed(l, n) * space.embed(m, l) != e) {
          out.push_back({"functoriality", levels(m, n) + " via " + std::to_string(l)});
        }
      }
    }
  }

  // phi lists (+, ..., +), (+, ..., -), (-, ..., +), (-, ..., -) for the same (m, i, j)
  // in some order; pair each row with the one whose signs are both flipped.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, int, int>, std::size_t> index;
  for (std::size_t k = 3; k <= space.dim(max_level); ++k) {
    const PhiTuple& t = space.phi(k);
    index[{t.m, t.i, t.j, t.sigma1, t.sigma2}] = k;
  }
  for (const auto& [key, k] : index) {
    const auto& [m, i, j, s1, s2] = key;
    auto it = index.find({m, i, j, -s1, -s2});
    if (it == index.end()) {
      out.push_back({"sign-symmetry", "missing partner of k=" + std::to_string(k)});
      continue;
    }
    auto row = space.functional_row(k);
    auto partner = space.functional_row(it->second);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != -partner[c]) {
        out.push_back({"sign-symmetry", "k=" + std::to_string(k) + " vs k=" + std::to_string(it->second)});
        break;
      }
    }
  }

  if (max_level >= 2) {
    std::vector<RationalMatrix> projections;
    for (std::size_t m = 1; m < max_level; ++m) projections.push_back(space.proj_window(m, max_level));
    for (std::size_t m = 1; m < max_level; ++m) {
      const RationalMatrix& p = projections[m - 1];
      if (p * p != p) out.push_back({"idempotence", levels(m, max_level)});
      for (std::size_t l = 1; l < max_level; ++l) {
        if (l == m) continue;
        if (p * projections[l - 1] != projections[std::min(m, l) - 1]) {
          out.push_back({"projection-product", levels(m, l)});
        }
      }
    }
  }
  return out;
}

L1Witness l1_lower_witness(const BDSpace& space, std::span<const Rational> coeffs, std::size_t m, std::size_t n) {
  if (m == 0 || m >= n) throw Error(ErrorCode::kLevelOutOfRange, "l1 witness needs 1 <= m < N");
  const std::size_t dm = space.dim(m);
  space.dim(n);
  if (coeffs.size() != dm) {
    throw Error(ErrorCode::kParamInvalid, "expected " + std::to_string(dm) + " coefficients on E_" + std::to_string(m));
  }
  std::vector<Rational> signs(dm);
  Rational l1(0);
  for (std::size_t k = 0; k < dm; ++k) {
    signs[k] = sgn(coeffs[k]);
    l1 += abs(coeffs[k]);
  }
  const auto lifted = matvec(space.embed(m, n), signs);

  L1Witness w;
  for (std::size_t k = 0; k < dm; ++k) w.pairing += coeffs[k] * lifted[k];
  w.window_norm = sup_norm(lifted);
  w.ratio = w.window_norm == 0 ? Rational(0) : Rational(w.pairing / w.window_norm);
  w.lower_bound = l1 / space.params().lambda;
  w.certified = w.ratio >= w.lower_bound;
  return w;
}

}  // namespace szlab
