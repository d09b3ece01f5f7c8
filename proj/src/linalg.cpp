#include "twistlab/linalg.hpp"

#include <type_traits>
#include <utility>

#include "twistlab/errors.hpp"

namespace twistlab {

template <Field F>
bool Matrix<F>::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

template <Field F>
Matrix<F> Matrix<F>::transposed() const {
  Matrix<F> t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw InvariantBreach("matrix shape mismatch in product");
  Matrix<F> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
template <Field F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const F inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_bareiss(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).value();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

template <Field F>
std::size_t rank_gauss(Matrix<F> m) {
  return rref(m).size();
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (std::is_same_v<F, Rational>) {
    return rank_bareiss(m);
  } else {
    return rank_gauss(m);
  }
}

template <Field F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  Matrix<F> e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -e(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InvariantBreach("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F::one();
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  Matrix<F> out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

template <Field F>
Matrix<F> from_columns(const std::vector<std::vector<F>>& cols, std::size_t height) {
  Matrix<F> m(height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw InvariantBreach("column length mismatch");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

#define TWISTLAB_INSTANTIATE(F)                                                         \
  template class Matrix<F>;                                                             \
  template Matrix<F> operator*(const Matrix<F>&, const Matrix<F>&);                     \
  template std::size_t rank(const Matrix<F>&);                                          \
  template std::size_t rank_gauss(Matrix<F>);                                           \
  template std::vector<std::vector<F>> nullspace(const Matrix<F>&);                     \
  template std::optional<Matrix<F>> inverse(const Matrix<F>&);                          \
  template Matrix<F> from_columns(const std::vector<std::vector<F>>&, std::size_t);

TWISTLAB_INSTANTIATE(Gf2)
TWISTLAB_INSTANTIATE(Rational)

}  // namespace twistlab
