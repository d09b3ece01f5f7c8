#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/linalg.hpp"

using namespace twistlab;

namespace {

Matrix<Gf2> random_f2(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix<Gf2> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Gf2::from_int(static_cast<long>(rng() & 1));
  return m;
}

Matrix<Rational> random_q(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> coef(-2, 2);
  Matrix<Rational> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational::from_int(coef(rng) * (rng() % 3 == 0 ? 0 : 1));
  return m;
}

std::size_t span_size_f2(const Matrix<Gf2>& m) {
  std::set<std::vector<bool>> span;
  for (unsigned mask = 0; mask < (1u << m.rows()); ++mask) {
    std::vector<bool> v(m.cols(), false);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (mask & (1u << r))
        for (std::size_t c = 0; c < m.cols(); ++c) v[c] = v[c] != !m(r, c).is_zero();
    span.insert(v);
  }
  return span.size();
}

std::vector<std::vector<mpq_class>> to_rows(const Matrix<Rational>& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).value();
  return a;
}

template <Field F>
Matrix<F> identity(std::size_t n) {
  Matrix<F> m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = F::one();
  return m;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("gf2 arithmetic") {
  CHECK(Gf2::one() + Gf2::one() == Gf2::zero());
  CHECK(-Gf2::one() == Gf2::one());
  CHECK(Gf2::from_int(-3) == Gf2::one());
  CHECK(Gf2::one().inverse() == Gf2::one());
  CHECK_THROWS(Gf2::zero().inverse());
  CHECK(Gf2::parse("1") == Gf2::one());
  CHECK(Gf2::parse("0") == Gf2::zero());
  CHECK_THROWS_AS(Gf2::parse("x"), ValidationError);
}

TEST_CASE("rational arithmetic") {
  const auto half = Rational::parse("1/2");
  CHECK(half + half == Rational::one());
  CHECK(half.inverse() == Rational::from_int(2));
  CHECK(Rational::parse("-3/6") == -half);
  CHECK(half.to_string() == "1/2");
  CHECK_THROWS(Rational::zero().inverse());
  CHECK_THROWS_AS(Rational::parse("x"), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ValidationError);
  CHECK(parse_field_kind("f2") == FieldKind::f2);
  CHECK(parse_field_kind("q") == FieldKind::q);
  CHECK_THROWS_AS(parse_field_kind("f3"), ValidationError);
}

}  // TEST_SUITE

TEST_SUITE("linalg") {

TEST_CASE("f2 rank matches the size of the row span") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_f2(rng, 1 + rng() % 7, 1 + rng() % 8);
    const std::size_t r = rank(m);
    CHECK((std::size_t{1} << r) == span_size_f2(m));
    CHECK(rank_gauss(m) == r);
    CHECK(rank(m.transposed()) == r);
  }
}

TEST_CASE("rational rank matches the largest nonvanishing minor") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 150; ++t) {
    const auto m = random_q(rng, 1 + rng() % 5, 1 + rng() % 5);
    const std::size_t r = rank(m);
    CHECK(r == oracle::rank_by_minors(to_rows(m)));
    CHECK(rank_gauss(m) == r);
  }
}

TEST_CASE("nullspace") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_q(rng, 1 + rng() % 5, 1 + rng() % 6);
    const auto basis = nullspace(m);
    CHECK(basis.size() == m.cols() - rank(m));
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational s;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        CHECK(s.is_zero());
      }
    }
    if (!basis.empty()) CHECK(rank(from_columns(basis, m.cols())) == basis.size());
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(14);
  int invertible = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const auto m = random_q(rng, n, n);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == n));
    if (inv) {
      ++invertible;
      CHECK(m * *inv == identity<Rational>(n));
      CHECK(*inv * m == identity<Rational>(n));
    }
    const auto f = random_f2(rng, n, n);
    const auto finv = inverse(f);
    CHECK(finv.has_value() == (rank(f) == n));
    if (finv) CHECK(f * *finv == identity<Gf2>(n));
  }
  CHECK(invertible > 10);
}

}  // TEST_SUITE
