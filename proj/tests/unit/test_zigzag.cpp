#include <doctest.h>

#include "twistlab/errors.hpp"
#include "twistlab/zigzag.hpp"

using namespace twistlab;

namespace {

template <Field F>
std::vector<MorphElement<F>> all_basis(const DynkinDiagram& d, Vertex i, Vertex j) {
  std::vector<MorphElement<F>> out;
  for (const auto& b : hom_basis(d, i, j)) out.push_back(MorphElement<F>::basis(b));
  return out;
}

}  // namespace

TEST_SUITE("zigzag") {

TEST_CASE_TEMPLATE("composition table", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto a3 = parse_diagram("A3");
  using M = MorphElement<F>;
  CHECK(compose(M::arrow(a2, 2, 1), M::arrow(a2, 1, 2)) == M::loop(1));
  CHECK(compose(M::arrow(a2, 1, 2), M::arrow(a2, 2, 1)) == M::loop(2));
  CHECK(compose(M::loop(1), M::loop(1)).is_zero());
  CHECK(compose(M::arrow(a2, 1, 2), M::loop(1)).is_zero());
  CHECK(compose(M::loop(2), M::arrow(a2, 1, 2)).is_zero());
  CHECK(compose(M::identity(2), M::arrow(a2, 1, 2)) == M::arrow(a2, 1, 2));
  const auto through = compose(M::arrow(a3, 2, 3), M::arrow(a3, 1, 2));
  CHECK(through.is_zero());
  CHECK(through.src() == 1);
  CHECK(through.tgt() == 3);
  CHECK_THROWS_AS(M::arrow(a3, 1, 3), ValidationError);
  CHECK_THROWS_AS(compose(M::identity(1), M::identity(2)), InvariantBreach);
}

TEST_CASE_TEMPLATE("composition is associative on basis elements", F, Gf2, Rational) {
  for (auto name : {"A3", "D4"}) {
    const auto d = parse_diagram(name);
    for (Vertex a : d.vertices())
      for (Vertex b : d.vertices())
        for (Vertex c : d.vertices())
          for (Vertex e : d.vertices())
            for (const auto& f : all_basis<F>(d, a, b))
              for (const auto& g : all_basis<F>(d, b, c))
                for (const auto& h : all_basis<F>(d, c, e))
                  CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("hom bases") {
  const auto a2 = parse_diagram("A2");
  const auto a3 = parse_diagram("A3");
  const auto b11 = hom_basis(a2, 1, 1);
  REQUIRE(b11.size() == 2);
  CHECK(b11[0].kind == MorphKind::identity);
  CHECK(b11[1].kind == MorphKind::loop);
  const auto b12 = hom_basis(a2, 1, 2);
  REQUIRE(b12.size() == 1);
  CHECK(b12[0] == MorphBasisElement{1, 2, MorphKind::arrow});
  CHECK(hom_basis(a3, 1, 3).empty());
  CHECK(hom_dim(a3, 1, 3) == 0);
  const auto d4 = parse_diagram("D4");
  int total = 0;
  for (Vertex i : d4.vertices())
    for (Vertex j : d4.vertices()) total += hom_dim(d4, i, j);
  CHECK(total == 2 * 4 + 2 * 3);
  CHECK(parse_kind(kind_name(MorphKind::loop)) == MorphKind::loop);
  CHECK_THROWS_AS(parse_kind("bogus"), ValidationError);
}

TEST_CASE_TEMPLATE("trace and pairing", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  using M = MorphElement<F>;
  CHECK(trace(M::loop(1)) == F::one());
  CHECK(trace(M::identity(1)).is_zero());
  CHECK_THROWS(trace(M::arrow(a2, 1, 2)));
  CHECK(pairing(M::arrow(a2, 1, 2), M::arrow(a2, 2, 1)) == F::one());
  CHECK(pairing(M::identity(1), M::loop(1)) == F::one());
  CHECK(pairing(M::loop(1), M::loop(1)).is_zero());
}

TEST_CASE_TEMPLATE("dual bases", F, Gf2, Rational) {
  for (auto name : {"A2", "A4", "D5", "E6"}) {
    const auto d = parse_diagram(name);
    for (Vertex i : d.vertices())
      for (Vertex j : d.vertices()) {
        CHECK(pairing_is_perfect<F>(d, i, j));
        const auto basis = all_basis<F>(d, i, j);
        const auto dual = dual_basis<F>(d, i, j);
        REQUIRE(dual.size() == basis.size());
        for (std::size_t a = 0; a < basis.size(); ++a)
          for (std::size_t b = 0; b < dual.size(); ++b)
            CHECK(pairing(basis[a], dual[b]) == (a == b ? F::one() : F::zero()));
      }
  }
}

TEST_CASE_TEMPLATE("unit inverse", F, Gf2, Rational) {
  using M = MorphElement<F>;
  const auto u = M::identity(1) + M::loop(1);
  CHECK(compose(unit_inverse(u), u) == M::identity(1));
  CHECK(compose(u, unit_inverse(u)) == M::identity(1));
}

TEST_CASE("corrupt composition hook") {
  const auto a2 = parse_diagram("A2");
  using M = MorphElement<Rational>;
  debug::set_corrupt_composition(true);
  CHECK(debug::corrupt_composition());
  CHECK(compose(M::arrow(a2, 2, 1), M::arrow(a2, 1, 2)).is_zero());
  CHECK_FALSE(pairing_is_perfect<Rational>(a2, 1, 2));
  debug::set_corrupt_composition(false);
  CHECK(compose(M::arrow(a2, 2, 1), M::arrow(a2, 1, 2)) == M::loop(1));
}

}  // TEST_SUITE
