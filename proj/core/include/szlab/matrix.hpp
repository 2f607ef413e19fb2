#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "szlab/rational.hpp"

namespace szlab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  /// First n rows.
  RationalMatrix top_rows(std::size_t n) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Throws kParamInvalid on a dimension mismatch.
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> matvec(const RationalMatrix& m, std::span<const Rational> x);

/// l_inf -> l_inf operator norm: the largest absolute row sum.
Rational op_norm_inf(const RationalMatrix& m);

Rational sup_norm(std::span<const Rational> x);

}  // namespace szlab
