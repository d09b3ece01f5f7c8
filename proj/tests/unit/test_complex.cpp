#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/sweep.hpp"

using namespace twistlab;
using fixture::image;
using fixture::stalk_map;

TEST_SUITE("complex") {

TEST_CASE_TEMPLATE("projectives and stalks", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto p1 = projective<F>(a2, 1);
  CHECK(p1.lowest() == 0);
  CHECK(p1.highest() == 0);
  CHECK(p1.summands(0) == std::vector<Vertex>{1});
  const auto lambda = sum_of_projectives<F>(a2);
  CHECK(lambda.summands(0) == std::vector<Vertex>{1, 2});
  CHECK(lambda == direct_sum(projective<F>(a2, 1), projective<F>(a2, 2)));
  CHECK(stalk<F>(a2, {2}, 3).lowest() == 3);
  CHECK(ProjComplex<F>(a2).is_zero());
  CHECK_THROWS(ProjComplex<F>(a2).lowest());
}

TEST_CASE_TEMPLATE("shift", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto p1 = projective<F>(a2, 1);
  CHECK(shift(p1, 0) == p1);
  CHECK(shift(shift(p1, 1), -1) == p1);
  const auto s = shift(p1, 1);
  CHECK(s.lowest() == -1);
  CHECK(s.summands(-1) == std::vector<Vertex>{1});

  const auto c = cone(stalk_map(a2, MorphElement<F>::arrow(a2, 1, 2)));
  const auto c1 = shift(c, 1);
  CHECK(c1.lowest() == -2);
  CHECK(c1.differential(-2).at(0, 0) == -c.differential(-1).at(0, 0));
  CHECK(shift(c, 2).differential(-3).at(0, 0) == c.differential(-1).at(0, 0));
  CHECK(shift(shift(c, 3), -3) == c);
}

TEST_CASE_TEMPLATE("cone examples", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  using M = MorphElement<F>;
  const ChainMap<F> zero_in{ProjComplex<F>(a2), projective<F>(a2, 2), {}};
  CHECK(cone(zero_in) == projective<F>(a2, 2));

  CHECK(minimize(cone(stalk_map(a2, M::identity(1)))).is_zero());

  const auto c = cone(stalk_map(a2, M::arrow(a2, 1, 2)));
  CHECK(c.lowest() == -1);
  CHECK(c.summands(-1) == std::vector<Vertex>{1});
  CHECK(c.summands(0) == std::vector<Vertex>{2});
  CHECK(c.is_complex());
  CHECK(hom_dims(1, c) == HomRow{{-1, 1}});
  CHECK(hom_dims(2, c) == HomRow{{0, 1}});

  const auto loop_cone = cone(stalk_map(a2, M::loop(1)));
  CHECK(minimize(loop_cone) == loop_cone);

  const auto split = cone(stalk_map(a2, M::zero(1, 2)));
  CHECK(hom_dims(1, split) == HomRow{{-1, 2}, {0, 1}});
}

TEST_CASE_TEMPLATE("cone maps are chain maps", F, Gf2, Rational) {
  const auto a3 = parse_diagram("A3");
  const auto x = image<F>(a3, {1, 2});
  for (Vertex i : a3.vertices()) {
    const auto ev = evaluation_map(i, x);
    CHECK(ev.is_chain_map());
    const auto r = cone_with_maps(ev);
    CHECK(r.cone.is_complex());
    CHECK(r.inclusion.is_chain_map());
    CHECK(r.projection.is_chain_map());
    CHECK(coevaluation_map(i, x).is_chain_map());
  }
}

TEST_CASE_TEMPLATE("direct sums and hom dims", F, Gf2, Rational) {
  const auto a3 = parse_diagram("A3");
  const auto x = image<F>(a3, {2, 1});
  const auto y = image<F>(a3, {3});
  CHECK(direct_sum(x, ProjComplex<F>(a3)) == x);
  for (Vertex j : a3.vertices()) {
    HomRow sum = hom_dims(j, x);
    for (const auto& [deg, n] : hom_dims(j, y)) sum[deg] += n;
    CHECK(hom_dims(j, direct_sum(x, y)) == sum);
  }
}

TEST_CASE("validation of complexes") {
  const auto a3 = parse_diagram("A3");
  using M = MorphElement<Rational>;
  MorphMatrix<Rational> bad({3}, {1});
  CHECK_THROWS_AS(bad.set(0, 0, M::identity(1)), ValidationError);
  MorphMatrix<Rational> id({1}, {1});
  id.set(0, 0, M::identity(1));
  const ProjComplex<Rational> square(a3, {{0, {1}}, {1, {1}}, {2, {1}}}, {{0, id}, {1, id}});
  CHECK_FALSE(square.is_complex());
  CHECK_THROWS_AS(ProjComplex<Rational>(a3, {{0, {1}}, {1, {2}}}, {{0, id}}), ValidationError);
}

TEST_CASE_TEMPLATE("minimize", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto p2 = projective<F>(a2, 2);
  const auto back = minimize(twist(1, twist_inv(1, p2)));
  CHECK(back.lowest() == 0);
  CHECK(back.highest() == 0);
  CHECK(back.summands(0) == std::vector<Vertex>{2});
  for (const auto& w : words_up_to(parse_diagram("A3"), 3)) {
    const auto t = image<F>(w);
    CHECK(minimize(t) == t);
  }
}

TEST_CASE("hom complexes") {
  const auto a2 = parse_diagram("A2");
  const auto p1 = projective<Rational>(a2, 1);
  const auto h = hom_complex(1, p1);
  CHECK(h.dim(0) == 2);
  CHECK(h.matrix(0).is_zero());

  const auto c = cone(stalk_map(a2, MorphElement<Rational>::arrow(a2, 1, 2)));
  const auto hc = hom_complex(1, c);
  CHECK(hc.dim(-1) == 2);
  CHECK(hc.dim(0) == 1);
  CHECK(rank(hc.matrix(-1)) == 1);

  const auto a3 = parse_diagram("A3");
  const auto h3 = hom_complex(3, projective<Rational>(a3, 1));
  for (int deg = -2; deg <= 2; ++deg) CHECK(h3.dim(deg) == 0);
  CHECK(hom_dims(3, projective<Rational>(a3, 1)).empty());
  CHECK(hom_dims(1, p1) == HomRow{{0, 2}});
}

TEST_CASE_TEMPLATE("profiles", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto t121 = image<F>(a2, {1, 2, 1});
  const auto t212 = image<F>(a2, {2, 1, 2});
  CHECK(profiles_equal(t121, t121));
  CHECK(profiles_equal(t121, t212));
  CHECK(canonical_key(t121) == canonical_key(t212));
  CHECK_FALSE(profiles_equal(image<F>(a2, {1}), image<F>(a2, {2})));
  CHECK(profile(sum_of_projectives<F>(a2)).total() == 6);
  CHECK_FALSE(describe(t121).empty());
}

TEST_CASE("hom dims agree with a direct homology computation") {
  const std::vector<std::pair<std::string, int>> corpus = {{"A2", 5}, {"A3", 4}, {"D4", 3}};
  for (const auto& [name, len] : corpus) {
    const auto d = parse_diagram(name);
    for (const auto& w : words_up_to(d, len)) {
      const auto t = image<Rational>(w);
      for (Vertex j : d.vertices()) {
        CAPTURE(w.to_string());
        CHECK(hom_dims(j, t) == oracle::hom_dims(j, t));
      }
    }
  }
}

TEST_CASE("hom dims are invariant under minimization") {
  const auto d = parse_diagram("A3");
  for (const auto& w : words_up_to(d, 3)) {
    const auto t = image<Rational>(w);
    for (Vertex i : d.vertices()) {
      const auto raw = cone(evaluation_map(i, t));
      const auto min = minimize(raw);
      CHECK(min.total_summands() <= raw.total_summands());
      for (Vertex j : d.vertices()) CHECK(hom_dims(j, raw) == hom_dims(j, min));
      CHECK(oracle::k_class(raw) == oracle::k_class(min));
    }
  }
}

}  // TEST_SUITE
