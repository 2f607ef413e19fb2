#include "szlab/matrix.hpp"

#include <string>

#include "szlab/error.hpp"

namespace szlab {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::top_rows(std::size_t n) const {
  if (n > rows_) throw Error(ErrorCode::kIndexOutOfRange, "top_rows beyond matrix height");
  RationalMatrix out(n, cols_);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kParamInvalid, "matrix product " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  }
  RationalMatrix out(a.rows(), b.cols());
  Rational term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& lhs = a(i, l);
      if (sgn(lhs) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& rhs = b(l, j);
        if (sgn(rhs) == 0) continue;
        mpq_mul(term.get_mpq_t(), lhs.get_mpq_t(), rhs.get_mpq_t());
        out(i, j) += term;
      }
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::kParamInvalid, "matrix difference shape");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

std::vector<Rational> matvec(const RationalMatrix& m, std::span<const Rational> x) {
  if (m.cols() != x.size()) throw Error(ErrorCode::kParamInvalid, "matrix-vector shape mismatch");
  std::vector<Rational> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0 && sgn(x[j]) != 0) y[i] += m(i, j) * x[j];
    }
  }
  return y;
}

Rational op_norm_inf(const RationalMatrix& m) {
  Rational best(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational row_sum(0);
    for (const auto& v : m.row(i)) row_sum += abs(v);
    if (row_sum > best) best = row_sum;
  }
  return best;
}

Rational sup_norm(std::span<const Rational> x) {
  Rational best(0);
  for (const auto& v : x) {
    if (abs(v) > best) best = abs(v);
  }
  return best;
}

}  // namespace szlab
