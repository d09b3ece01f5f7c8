#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twistlab/field.hpp"

namespace twistlab {

template <Field F>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<F> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const F> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b);

template <Field F>
std::size_t rank(const Matrix<F>& m);

// Rank by plain Gauss elimination in F, regardless of specialised paths.
template <Field F>
std::size_t rank_gauss(Matrix<F> m);

// Basis of { x : m x = 0 }, one vector per free column of the reduced echelon form.
template <Field F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m);

// Inverse of a square matrix; std::nullopt when singular.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

// Columns given as vectors of equal length.
template <Field F>
Matrix<F> from_columns(const std::vector<std::vector<F>>& cols, std::size_t height);

extern template class Matrix<Gf2>;
extern template class Matrix<Rational>;

}  // namespace twistlab
