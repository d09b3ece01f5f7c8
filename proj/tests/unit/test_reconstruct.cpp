#include <doctest.h>

#include "fixtures.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/reconstruct.hpp"
#include "twistlab/sweep.hpp"

using namespace twistlab;
using fixture::image;

TEST_SUITE("reconstruct") {

TEST_CASE_TEMPLATE("extremal degrees", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto lambda = sum_of_projectives<F>(a2);
  CHECK(min_degree(lambda) == 0);
  CHECK(max_degree(lambda) == 0);
  CHECK(min_degree(image<F>(a2, {1})) == -1);
  CHECK_THROWS_AS(min_degree(ProjComplex<F>(a2)), PreconditionError);
  CHECK_THROWS_AS(max_degree(ProjComplex<F>(a2)), PreconditionError);
  for (const auto& w : words_up_to(parse_diagram("A3"), 4)) {
    const auto t = image<F>(w);
    CHECK(min_degree(t) >= -static_cast<int>(w.length()));
    CHECK(max_degree(t) <= 0);
    for (Vertex i : w.diagram.vertices()) CHECK(min_degree(twist(i, t)) >= min_degree(t) - 1);
  }
}

TEST_CASE_TEMPLATE("long morphisms", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  CHECK(long_morphism_dim(1, projective<F>(a2, 1), 0) == 1);
  const auto t1 = image<F>(a2, {1});
  CHECK(long_morphism_dim(2, t1, -1) == 0);
  CHECK(long_morphism_dim(1, t1, -1) >= 1);
  const auto lm = long_morphisms(1, t1, -1);
  REQUIRE(lm.witness.has_value());
  CHECK(is_valid_witness(*lm.witness, t1));
  CHECK_FALSE(long_morphisms(2, t1, -1).witness.has_value());
}

TEST_CASE_TEMPLATE("witnesses at the minimal degree are valid", F, Gf2, Rational) {
  for (auto name : {"A3", "D4"}) {
    const auto d = parse_diagram(name);
    for (const auto& w : words_up_to(d, 3)) {
      if (w.empty()) continue;
      const auto t = image<F>(w);
      const int m = min_degree(t);
      bool found = false;
      for (Vertex j : d.vertices()) {
        const auto lm = long_morphisms(j, t, m);
        CHECK(lm.witness.has_value() == (lm.dim > 0));
        if (lm.witness) {
          found = true;
          CHECK(is_valid_witness(*lm.witness, t));
          CHECK(left_divisible_by(w, j).has_value());
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE_TEMPLATE("peel", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  const auto lambda = sum_of_projectives<F>(a2);
  const auto p1 = peel(image<F>(a2, {1}));
  CHECK(p1.step.j == 1);
  CHECK(p1.step.min_degree == -1);
  CHECK(profiles_equal(p1.rest, lambda));
  const auto p21 = peel(image<F>(a2, {2, 1}));
  CHECK(p21.step.j == 2);
  CHECK(profiles_equal(p21.rest, image<F>(a2, {1})));
  CHECK_THROWS_AS(peel(lambda), NotATwistImage);
}

TEST_CASE_TEMPLATE("recover", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  CHECK(recover_word(sum_of_projectives<F>(a2)).word.empty());
  const BraidWord w12(a2, {1, 2});
  const auto r = recover_word(image<F>(w12));
  CHECK(equivalent(r.word, w12));
  CHECK(r.peels.size() == 2);
  CHECK_THROWS_AS(recover_word(projective<F>(a2, 1)), NotATwistImage);
  CHECK_THROWS_AS(recover_word(shift(projective<F>(a2, 1), -1)), NotATwistImage);
  CHECK_THROWS_AS(recover_word(shift(sum_of_projectives<F>(a2), 1)), NotATwistImage);
}

TEST_CASE("recovered words are equivalent to the originals") {
  const std::vector<std::pair<std::string, int>> corpus = {{"A2", 6}, {"A3", 5}, {"D4", 4}};
  for (const auto& [name, len] : corpus) {
    const auto d = parse_diagram(name);
    const auto table = image_table<Rational>(d, len, 0);
    for (std::size_t k = 0; k < table.words.size(); ++k) {
      const auto r = recover_word(table.images[k]);
      if (!equivalent(r.word, table.words[k]))
        FAIL(name, ": recovered ", r.word.to_string(), " from ", table.words[k].to_string());
      CHECK(r.word.length() == table.words[k].length());
    }
  }
}

TEST_CASE_TEMPLATE("equality through the category", F, Gf2, Rational) {
  const auto a2 = parse_diagram("A2");
  CHECK(words_equal_via_category<F>(BraidWord(a2, {1, 2, 1}), BraidWord(a2, {2, 1, 2})));
  CHECK_FALSE(words_equal_via_category<F>(BraidWord(a2, {1, 2}), BraidWord(a2, {2, 1})));
  CHECK_FALSE(words_equal_via_category<F>(BraidWord(a2, {}), BraidWord(a2, {1})));
  const auto d4 = parse_diagram("D4");
  const ClassIndex idx(d4, 3);
  for (std::size_t a = 0; a < idx.words().size(); a += 5)
    for (std::size_t b = 0; b < idx.words().size(); b += 7)
      CHECK(words_equal_via_category<F>(idx.words()[a], idx.words()[b]) ==
            (idx.class_ids()[a] == idx.class_ids()[b]));
}

}  // TEST_SUITE
