#include <doctest.h>

#include "twistlab/errors.hpp"
#include "twistlab/sweep.hpp"

using namespace twistlab;

TEST_SUITE("sweep") {

TEST_CASE("words up to a length") {
  const auto ws = words_up_to(parse_diagram("A3"), 3);
  CHECK(ws.size() == 1 + 3 + 9 + 27);
  CHECK(ws.front().empty());
  for (std::size_t k = 1; k < ws.size(); ++k) CHECK(ws[k - 1].length() <= ws[k].length());
}

TEST_CASE("maps keep order and capture errors") {
  auto fn = [](std::size_t k) -> long {
    if (k == 3) throw ValidationError("three");
    if (k == 5) throw InvariantBreach("five");
    return static_cast<long>(k * k);
  };
  const auto serial = serial_map<long>(8, fn);
  for (int jobs : {1, 2, 4}) {
    const auto par = parallel_map<long>(8, jobs, fn);
    REQUIRE(par.size() == serial.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(par[k].value == serial[k].value);
      CHECK(par[k].breach == serial[k].breach);
    }
  }
  CHECK(serial[2].value == 4);
  CHECK_FALSE(serial[3].ok());
  CHECK_FALSE(serial[3].breach);
  CHECK(serial[5].breach);
  CHECK(serial[5].error == "five");
}

TEST_CASE_TEMPLATE("parallel image tables match the serial reference", F, Gf2, Rational) {
  for (auto name : {"A3", "D4"}) {
    const auto d = parse_diagram(name);
    const auto ref = image_table_serial<F>(d, 3);
    for (int jobs : {1, 2, 4}) {
      const auto par = image_table<F>(d, 3, jobs);
      CHECK(par.words == ref.words);
      CHECK(par.keys == ref.keys);
    }
  }
}

TEST_CASE("parallel recovery matches the serial reference") {
  const auto table = image_table<Rational>(parse_diagram("A3"), 4, 2);
  const auto ref = recover_all_serial(table.images);
  for (int jobs : {1, 3}) {
    const auto par = recover_all(table.images, jobs);
    REQUIRE(par.size() == ref.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      REQUIRE(par[k].ok());
      CHECK(par[k].value->word == ref[k].value->word);
      CHECK(equivalent(par[k].value->word, table.words[k]));
    }
  }
}

}  // TEST_SUITE
