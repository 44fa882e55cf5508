#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcorbit/boolfun.hpp"

using namespace lcorbit;

TEST_CASE("ANF text parsing") {
  BooleanFunction f = parse_anf("0.1,0.2,1.2");
  CHECK(f.n == 3);
  CHECK(f.anf == std::vector<std::uint32_t>{0b011, 0b101, 0b110});

  // single-digit shorthand
  CHECK(parse_anf("01,02,12") == f);

  // constant and zero
  CHECK(parse_anf("c").anf == std::vector<std::uint32_t>{0});
  CHECK(parse_anf("0").anf.empty());
  CHECK(parse_anf("0.").anf == std::vector<std::uint32_t>{1});

  // multi-digit indices need periods
  BooleanFunction g = parse_anf("10.11");
  CHECK(g.n == 12);
  CHECK(g.anf == std::vector<std::uint32_t>{(1u << 10) | (1u << 11)});

  // duplicate monomials cancel mod 2
  CHECK(parse_anf("01,01").anf.empty());
  CHECK(parse_anf("01,01,01") == parse_anf("01"));

  CHECK_THROWS_AS(parse_anf(""), ParseError);
  CHECK_THROWS_AS(parse_anf("0x"), ParseError);
  CHECK_THROWS_AS(parse_anf("1..2"), ParseError);
  CHECK_THROWS_AS(parse_anf("0.0"), ParseError);
  CHECK_THROWS_AS(parse_anf("01,,"), ParseError);
  CHECK_THROWS_AS(parse_anf("5", 3), ParseError);  // index outside declared n
}

TEST_CASE("ANF emit and reparse") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    int n = 1 + static_cast<int>(rng() % 11);
    BooleanFunction f;
    f.n = n;
    for (int k = 0; k < 6; ++k) f.anf.push_back(static_cast<std::uint32_t>(rng()) & ((1u << n) - 1));
    f.normalize();
    CHECK(parse_anf(format_anf(f), n) == f);
    if (n <= 10) CHECK(parse_anf(format_anf(f, true), n) == f);
  }
  CHECK(format_anf(BooleanFunction{3, {}}) == "0");
  CHECK(format_anf(BooleanFunction{1, {1}}) == "0.");
  CHECK(format_anf(BooleanFunction{3, {0b110}}) == "1.2");
}

TEST_CASE("truth table and Moebius inversion") {
  BooleanFunction f = parse_anf("01,02", 3);
  auto t = truth_table(f);
  // f = x0x1 + x0x2: ones at x = 011 and 101
  std::vector<std::uint8_t> want = {0, 0, 0, 1, 0, 1, 0, 0};
  CHECK(t == want);

  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng() % 8);
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (auto& b : table) b = rng() & 1;
    BooleanFunction g = from_truth(n, table);
    CHECK(truth_table(g) == table);
  }
}

TEST_CASE("graph bridges") {
  Graph tri = complete_graph(3);
  BooleanFunction f = quadratic_of(tri);
  CHECK(f.anf == std::vector<std::uint32_t>{0b011, 0b101, 0b110});
  CHECK(graph_of(f) == tri);

  // degree <= 1 terms are dropped by graph_of
  BooleanFunction g = parse_anf("01,0,c", 2);
  CHECK(graph_of(g).edge_count() == 1);

  CHECK_THROWS_AS(graph_of(parse_anf("012", 3)), std::invalid_argument);
}

TEST_CASE("degree") {
  CHECK(degree(parse_anf("0")) == 0);
  CHECK(degree(parse_anf("c")) == 0);
  CHECK(degree(parse_anf("01,02")) == 2);
  CHECK(degree(parse_anf("012,01")) == 3);
}
