#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lcorbit/orbit.hpp"

using namespace lcorbit;

namespace {

Graph wheel6() {
  return Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5},
                               {2, 3}, {2, 4}, {3, 4}, {3, 5}});
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("lc_orbit closures") {
  // the [[6,0,4]] orbit has exactly two non-isomorphic members
  auto hex = lc_orbit(wheel6());
  CHECK(hex.size() == 2);
  // one of them is the 2-clique-of-3-cliques
  auto nc = canonical_form(nested_clique({2, 3}));
  bool found = false;
  for (const auto& m : hex) found = found || m.cert == nc.cert;
  CHECK(found);
  // the two members have different certificates
  CHECK(hex[0].cert != hex[1].cert);

  // a single edge is fixed by LC
  CHECK(lc_orbit(Graph::from_edges(2, {{0, 1}})).size() == 1);

  // P3 closes to {P3, triangle}
  auto p3 = lc_orbit(path_graph(3));
  CHECK(p3.size() == 2);
  std::set<std::vector<std::uint8_t>> certs;
  for (const auto& m : p3) certs.insert(m.cert);
  CHECK(certs.count(canonical_form(path_graph(3)).cert) == 1);
  CHECK(certs.count(canonical_form(complete_graph(3)).cert) == 1);
}

TEST_CASE("3-regular circulants on 6 vertices vs the hexacode orbit") {
  auto wheel_cert = canonical_form(wheel6()).cert;

  // offsets {2,3} give the triangular prism, a member of the orbit
  Graph prism = circulant(6, {2, 3});
  for (int v = 0; v < 6; ++v) REQUIRE(prism.degree(v) == 3);
  bool prism_member = false;
  for (const auto& m : lc_orbit(prism)) prism_member = prism_member || m.cert == wheel_cert;
  CHECK(prism_member);
  CHECK(canonical_form(prism).cert == canonical_form(nested_clique({2, 3})).cert);

  // offsets {1,3} give K_{3,3}, which has lambda > 2 and lies elsewhere
  Graph k33 = circulant(6, {1, 3});
  for (int v = 0; v < 6; ++v) REQUIRE(k33.degree(v) == 3);
  CHECK(is_bipartite(k33));
  bool k33_member = false;
  for (const auto& m : lc_orbit(k33)) k33_member = k33_member || m.cert == wheel_cert;
  CHECK_FALSE(k33_member);
  CHECK(lambda(k33) > 2);
}

TEST_CASE("euler transform") {
  std::vector<std::uint64_t> i = {1, 1, 1, 2, 4, 11, 26, 101, 440};
  std::vector<std::uint64_t> want = {1, 2, 3, 6, 11, 26, 59, 182, 675};
  CHECK(euler_transform(i) == want);

  std::vector<std::uint64_t> atom = {1, 0, 0, 0, 0};
  CHECK(euler_transform(atom) == std::vector<std::uint64_t>{1, 1, 1, 1, 1});

  std::vector<std::uint64_t> prefix = {1, 1, 1, 2};
  CHECK(euler_transform(prefix).back() == 6);
}

TEST_CASE("classification counts for small n") {
  const std::vector<std::uint64_t> want_i = {1, 1, 1, 2, 4, 11, 26};
  for (int n = 1; n <= 7; ++n) {
    auto recs = enumerate_orbits(n);
    CHECK(recs.size() == want_i[n - 1]);
    for (const auto& r : recs) {
      CHECK(r.connected);
      CHECK(r.log2_par == r.lambda);
      CHECK(r.lambda >= independence_number(r.rep.graph));
    }
  }
}

TEST_CASE("orbit partition covers every connected graph") {
  // sum of orbit sizes = number of non-isomorphic connected graphs
  const std::vector<std::uint64_t> connected_counts = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto recs = enumerate_orbits(n);
    std::uint64_t total = 0;
    for (const auto& r : recs) total += r.orbit_size;
    CHECK(total == connected_counts[n - 1]);
  }
}

TEST_CASE("decomposable orbits via multiset combination") {
  const std::vector<std::uint64_t> want_t = {1, 2, 3, 6, 11, 26};
  for (int n = 1; n <= 6; ++n) {
    EnumerateOptions opts;
    opts.connected_only = false;
    auto recs = enumerate_orbits(n, opts);
    CHECK(recs.size() == want_t[n - 1]);
    std::uint64_t conn = 0;
    std::set<std::vector<std::uint8_t>> certs;
    for (const auto& r : recs) {
      conn += r.connected ? 1 : 0;
      certs.insert(r.rep.cert);
      std::uint64_t sum = 0;
      for (auto a : r.weight_dist) sum += a;
      CHECK(sum == (std::uint64_t{1} << n));
      CHECK(is_connected(r.rep.graph) == r.connected);
    }
    CHECK(certs.size() == recs.size());  // mutually non-equivalent reps
    CHECK(conn == enumerate_orbits(n).size());
  }
}

TEST_CASE("lambda of known orbits") {
  CHECK(lambda(wheel6()) == 2);
  CHECK(lambda(Graph(1)) == 1);
  CHECK(lambda(complete_graph(2)) == 1);
  // a clique of size k forces lambda >= k-1
  std::mt19937_64 rng(5);
  for (int k = 3; k <= 6; ++k) CHECK(lambda(complete_graph(k)) >= k - 1);
}

TEST_CASE("lambda is an orbit invariant") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 10; ++rep) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 5), rng);
    auto orbit = lc_orbit(g);
    int base = lambda(g);
    for (int pick = 0; pick < 3; ++pick) {
      const auto& member = orbit[rng() % orbit.size()];
      REQUIRE(lambda(member.graph) == base);
    }
  }
}

TEST_CASE("capital lambda small values and monotonicity") {
  std::vector<int> caps;
  for (int n = 1; n <= 7; ++n) caps.push_back(capital_lambda(n));
  CHECK(caps[0] == 1);
  CHECK(caps[1] == 1);
  CHECK(caps[2] == 2);  // n=3
  CHECK(caps[3] == 2);
  CHECK(caps[4] == 2);
  CHECK(caps[5] == 2);  // n=6
  CHECK(caps[6] == 3);  // n=7
  for (std::size_t k = 1; k < caps.size(); ++k) CHECK(caps[k] >= caps[k - 1]);
}

TEST_CASE("tables from records") {
  EnumerateOptions opts;
  std::vector<OrbitRecord> all;
  for (int n = 1; n <= 6; ++n) {
    auto recs = enumerate_orbits(n, opts);
    all.insert(all.end(), recs.begin(), recs.end());
  }
  auto tab = tables(6, all);
  REQUIRE(tab.size() == 6);
  CHECK(tab[5].indecomposable == 11);
  CHECK(tab[5].total == 26);
  CHECK(tab[5].by_distance.at(2) == 9);
  CHECK(tab[5].by_distance.at(3) == 1);
  CHECK(tab[5].by_distance.at(4) == 1);
  // lambda ranges: n=5 d=3 -> {2}; n=6 d=4 -> {2}; n=2 d=2 -> {1}
  CHECK(tab[4].lambda_range.at(3) == std::make_pair(2, 2));
  CHECK(tab[5].lambda_range.at(4) == std::make_pair(2, 2));
  CHECK(tab[1].lambda_range.at(2) == std::make_pair(1, 1));
}

TEST_CASE("enumerate budget checks") {
  CHECK_THROWS_AS(enumerate_orbits(10), BudgetError);
  CHECK_THROWS_AS(enumerate_orbits(13), BudgetError);
  CHECK_THROWS_AS(enumerate_orbits(0), BudgetError);
}

TEST_CASE("hexacode orbit record") {
  auto recs = enumerate_orbits(6);
  const OrbitRecord* hex = nullptr;
  for (const auto& r : recs)
    if (r.distance == 4) hex = &r;
  REQUIRE(hex != nullptr);
  CHECK(hex->orbit_size == 2);
  CHECK(hex->lambda == 2);
  CHECK(hex->log2_par == 2);
}
