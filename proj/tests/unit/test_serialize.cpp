#include <doctest.h>

#include "fixtures.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/serialize.hpp"
#include "twistlab/sweep.hpp"

using namespace twistlab;
using fixture::image;

TEST_SUITE("serialize") {

TEST_CASE("diagrams and words") {
  for (auto name : {"A2", "D5", "E8"}) {
    const auto d = parse_diagram(name);
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK(diagram_from_json(Json(name)) == d);
  }
  CHECK_THROWS_AS(diagram_from_json(Json("E9")), ValidationError);
  CHECK_THROWS_AS(diagram_from_json(Json::object()), ValidationError);

  const auto a3 = parse_diagram("A3");
  const BraidWord w(a3, {1, 3, 2});
  CHECK(word_from_json(word_to_json(w)) == w);
  CHECK(word_from_json(Json::array({1, 3, 2}), a3) == w);
  CHECK(parse_word(a3, "s1 s3 s2") == w);
  CHECK(parse_word(a3, "1,3,2") == w);
  CHECK(parse_word(a3, "e").empty());
  CHECK(parse_word(a3, "").empty());
  CHECK_THROWS_AS(parse_word(a3, "s4"), ValidationError);
  CHECK_THROWS_AS(parse_word(a3, "s1 q"), ValidationError);
  CHECK_THROWS_AS(word_from_json(Json::array({0}), a3), ValidationError);

  const LayeredWord lw(parse_diagram("D4"), {{2}, {1, 3, 4}, {2}});
  const auto back = layered_from_json(layered_to_json(lw));
  CHECK(back.slices == lw.slices);
  CHECK(back.diagram == lw.diagram);
}

TEST_CASE_TEMPLATE("morphisms and complexes", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto f = MorphElement<F>::identity(1) + MorphElement<F>::loop(1);
  CHECK(morph_from_json<F>(a2, morph_to_json(f)) == f);
  const auto g = MorphElement<F>::arrow(a2, 2, 1);
  CHECK(morph_from_json<F>(a2, morph_to_json(g)) == g);

  for (const auto& w : words_up_to(parse_diagram("A3"), 3)) {
    const auto t = image<F>(w);
    const auto j = complex_to_json(t);
    CHECK(complex_from_json<F>(w.diagram, j) == t);
    CHECK(complex_from_json<F>(w.diagram, Json::parse(j.dump())) == t);
  }
  CHECK(complex_from_json<F>(a2, complex_to_json(ProjComplex<F>(a2))).is_zero());
}

TEST_CASE("malformed complexes") {
  const auto a2 = parse_diagram("A2");
  CHECK_THROWS_AS(complex_from_json<Rational>(a2, Json::parse(R"({"degrees": {"0": [3]}})")), ValidationError);
  CHECK_THROWS_AS(complex_from_json<Rational>(a2, Json::parse(R"([1, 2])")), ValidationError);
  MorphMatrix<Rational> id({1}, {1});
  id.set(0, 0, MorphElement<Rational>::identity(1));
  const ProjComplex<Rational> square(a2, {{0, {1}}, {1, {1}}, {2, {1}}}, {{0, id}, {1, id}});
  CHECK_THROWS_AS(complex_from_json<Rational>(a2, complex_to_json(square)), ValidationError);
  CHECK_THROWS_AS(morph_from_json<Rational>(a2, Json::parse(R"({"src": 1, "tgt": 2, "terms": [{"kind": "loop", "coef": "1"}]})")),
                  ValidationError);
}

TEST_CASE("reports") {
  const auto a2 = parse_diagram("A2");
  const auto t = image<Rational>(a2, {1});
  const auto p = profile_to_json(profile(t));
  CHECK(p["total"] == profile(t).total());
  const auto tt = two_term_of(minimize(projective<Rational>(a2, 2)));
  REQUIRE(tt.has_value());
  CHECK(two_term_to_json(*tt)["side"] == 0);
  CHECK(shape_to_json(shape_of(*tt))["side"] == 0);
  const auto r = recover_word(t);
  const auto rj = recovery_to_json(r, true);
  CHECK(rj["verified"] == true);
  CHECK(rj["word"] == Json::array({1}));
}

TEST_CASE("decorated sets and certificates") {
  const auto d4 = parse_diagram("D4");
  const auto s = to_decorated(LayeredWord(d4, {{2}, {1, 3, 4}, {2}, {1, 3, 4}, {2}, {4}}), base_boundary(d4, 2));
  CHECK(decorated_from_json(d4, decorated_to_json(s)) == s);
  const auto r = find_left_divisor(s);
  const auto c = certificate_from_json(certificate_to_json(r.certificate));
  CHECK(c.moves == r.certificate.moves);
  auto j = decorated_to_json(s);
  j["theta"]["0,2"] = 5;
  CHECK_THROWS_AS(check_divisor_hypotheses(decorated_from_json(d4, j)), PreconditionError);
  j["theta"]["0,9"] = 1;
  CHECK_THROWS_AS(decorated_from_json(d4, j), ValidationError);
}

}  // TEST_SUITE
