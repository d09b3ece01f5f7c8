#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twistlab/braid.hpp"
#include "twistlab/errors.hpp"

using namespace twistlab;

namespace {

BraidWord w(const DynkinDiagram& d, std::vector<Vertex> l) { return BraidWord(d, std::move(l)); }

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("diagram construction") {
  const auto a2 = build_diagram(Family::A, 2);
  CHECK(a2.rank() == 2);
  CHECK(a2.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
  CHECK(a2.color(1) == 0);
  CHECK(a2.color(2) == 1);

  const auto d4 = build_diagram(Family::D, 4);
  CHECK(d4.neighbors(2) == std::vector<Vertex>{1, 3, 4});
  for (Vertex leaf : {1, 3, 4}) CHECK(d4.neighbors(leaf) == std::vector<Vertex>{2});

  CHECK_THROWS_AS(build_diagram(Family::E, 5), ValidationError);
  CHECK_THROWS_AS(build_diagram(Family::A, 1), ValidationError);
  CHECK_THROWS_AS(build_diagram(Family::D, 3), ValidationError);
  CHECK_THROWS_AS(build_diagram(Family::E, 9), ValidationError);
  CHECK_THROWS_AS(build_diagram(Family::A, DynkinDiagram::kMaxRank + 1), ValidationError);
  CHECK_THROWS_AS(parse_diagram("X3"), ValidationError);
  CHECK(parse_diagram("E6") == build_diagram(Family::E, 6));
}

TEST_CASE("colorings are proper bipartitions") {
  for (auto name : {"A2", "A3", "A7", "D4", "D5", "D8", "E6", "E7", "E8"}) {
    const auto d = parse_diagram(name);
    CAPTURE(name);
    std::size_t degree_sum = 0;
    for (Vertex v : d.vertices()) {
      degree_sum += d.neighbors(v).size();
      for (Vertex u : d.neighbors(v)) CHECK(d.color(u) != d.color(v));
    }
    CHECK(degree_sum == 2 * (d.vertices().size() - 1));
    CHECK(d.vertices_of_color(0).size() + d.vertices_of_color(1).size() == d.vertices().size());
  }
}

TEST_CASE("neighbors") {
  const auto a3 = parse_diagram("A3");
  CHECK(neighbors(a3, 2) == std::vector<Vertex>{1, 3});
  CHECK(neighbors(a3, 1) == std::vector<Vertex>{2});
  CHECK(neighbors(parse_diagram("D4"), 2) == std::vector<Vertex>{1, 3, 4});
  CHECK_THROWS_AS(neighbors(a3, 4), ValidationError);
}

TEST_CASE("equivalence examples") {
  const auto a2 = parse_diagram("A2");
  const auto a3 = parse_diagram("A3");
  CHECK(equivalent(w(a2, {1, 2, 1}), w(a2, {2, 1, 2})));
  CHECK(equivalent(w(a3, {1, 3}), w(a3, {3, 1})));
  CHECK_FALSE(equivalent(w(a2, {1}), w(a2, {2})));
  CHECK_FALSE(equivalent(w(a2, {1, 2}), w(a2, {2, 1})));
  CHECK_FALSE(equivalent(w(a2, {}), w(a2, {1})));
  CHECK(equivalence_class(w(a2, {1, 2})).size() == 1);
  CHECK(equivalence_class(w(a2, {1, 2, 1})).size() == 2);
}

TEST_CASE("left divisibility examples") {
  const auto a2 = parse_diagram("A2");
  auto q = left_divisible_by(w(a2, {1, 2, 1}), 2);
  REQUIRE(q.has_value());
  CHECK(equivalent(*q, w(a2, {1, 2})));
  CHECK_FALSE(left_divisible_by(w(a2, {1, 2}), 2).has_value());
  CHECK_FALSE(left_divisible_by(w(a2, {}), 1).has_value());
  auto q1 = left_divisible_by(w(a2, {1, 2}), 1);
  REQUIRE(q1.has_value());
  CHECK(*q1 == w(a2, {2}));
}

TEST_CASE("layering examples") {
  const auto a3 = parse_diagram("A3");
  const auto l1 = layer(w(a3, {2, 1}));
  CHECK(l1.slices == std::vector<std::vector<Vertex>>{{}, {2}, {1}});
  const auto l2 = layer(w(a3, {1, 3}));
  CHECK(l2.slices == std::vector<std::vector<Vertex>>{{1, 3}});

  const auto d4 = parse_diagram("D4");
  const auto l3 = layer(w(d4, {2, 1, 3, 4, 2, 1, 3, 4, 2, 4}));
  CHECK(l3.slices == std::vector<std::vector<Vertex>>{{2}, {1, 3, 4}, {2}, {1, 3, 4}, {2}, {4}});

  CHECK(flatten(LayeredWord(a3, {{}, {2}, {1}})) == w(a3, {2, 1}));
  CHECK(flatten(LayeredWord(a3, {{1, 3}})) == w(a3, {1, 3}));
  CHECK_THROWS_AS(LayeredWord(a3, {{2}}), ValidationError);
  CHECK_THROWS_AS(LayeredWord(a3, {{1}, {1, 2}}), ValidationError);
}

TEST_CASE("layer then flatten stays in the class") {
  const auto a3 = parse_diagram("A3");
  for (int len = 0; len <= 6; ++len)
    for (const auto& word : words_of_length(a3, len)) {
      const auto back = flatten(layer(word));
      CHECK(back.length() == word.length());
      if (!equivalent(back, word)) FAIL("layer/flatten changed ", word.to_string());
    }
}

TEST_CASE("class counts match the monoid growth series") {
  CHECK(oracle::monoid_growth(parse_diagram("A2"), 7) == std::vector<long>{1, 2, 4, 7, 12, 20, 33, 54});
  CHECK(oracle::positive_roots(parse_diagram("E6"), {1, 2, 3, 4, 5, 6}) == 36);
  CHECK(oracle::positive_roots(parse_diagram("D5"), {1, 2, 3, 4, 5}) == 20);
  const std::vector<std::pair<std::string, int>> cases = {{"A2", 7}, {"A3", 6}, {"A4", 5}, {"D4", 5}, {"D5", 4}, {"E6", 3}};
  for (const auto& [name, max_len] : cases) {
    const auto d = parse_diagram(name);
    const auto expected = oracle::monoid_growth(d, max_len);
    for (int len = 0; len <= max_len; ++len) {
      CAPTURE(name);
      CAPTURE(len);
      CHECK(static_cast<long>(ClassIndex(d, len).num_classes()) == expected[len]);
    }
  }
}

TEST_CASE("class index is consistent with equivalence") {
  const auto d4 = parse_diagram("D4");
  const ClassIndex idx(d4, 4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, idx.words().size() - 1);
  for (int t = 0; t < 300; ++t) {
    const auto& a = idx.words()[pick(rng)];
    const auto& b = idx.words()[pick(rng)];
    CHECK((idx.class_of(a) == idx.class_of(b)) == equivalent(a, b));
  }
}

TEST_CASE("left divisors agree with class enumeration") {
  const auto a3 = parse_diagram("A3");
  for (const auto& word : words_of_length(a3, 4))
    for (Vertex j : a3.vertices()) {
      bool starts = false;
      for (const auto& rep : equivalence_class(word)) starts = starts || rep.letters.front() == j;
      const auto q = left_divisible_by(word, j);
      CHECK(q.has_value() == starts);
      if (q) CHECK(equivalent(w(a3, {j}) * *q, word));
    }
}

}  // TEST_SUITE
