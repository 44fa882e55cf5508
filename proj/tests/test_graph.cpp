#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "lcorbit/canonical.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/independence.hpp"

using namespace lcorbit;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

// independent reference for the branch-and-bound: scan all subsets
int alpha_by_subsets(const Graph& g) {
  int n = g.size();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::uint32_t m = s; m && ok;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (g.neighbors(v) & s) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace

TEST_CASE("lc complements the neighbourhood") {
  // path 1-0-2: lc at the centre creates the missing edge {1,2}
  Graph p = Graph::from_edges(3, {{0, 1}, {0, 2}});
  Graph t = lc(p, 0);
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(1, 2));
  CHECK(t.edge_count() == 3);

  // a vertex with at most one neighbour changes nothing
  Graph e = Graph::from_edges(2, {{0, 1}});
  CHECK(lc(e, 0) == e);
  CHECK(lc(e, 1) == e);
  Graph single(1);
  CHECK(lc(single, 0) == single);
}

TEST_CASE("lc is an involution") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = random_graph(n, rng);
      for (int v = 0; v < n; ++v) CHECK(lc(lc(g, v), v) == g);
    }
  }
}

TEST_CASE("lc keeps edges outside the neighbourhood") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = random_graph(7, rng);
    int v = static_cast<int>(rng() % 7);
    Graph h = lc(g, v);
    std::uint32_t nb = g.neighbors(v);
    CHECK(h.neighbors(v) == nb);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        bool inside = ((nb >> i) & 1u) && ((nb >> j) & 1u);
        if (!inside) CHECK(g.has_edge(i, j) == h.has_edge(i, j));
      }
  }
}

TEST_CASE("lc rejects out-of-range vertices") {
  Graph g(3);
  CHECK_THROWS_AS(lc(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(lc(g, -1), std::invalid_argument);
}

TEST_CASE("canonical certificates are isomorphism invariants") {
  // relabelled triangles agree
  Graph t1 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  Graph t2 = relabel(t1, {2, 0, 1});
  CHECK(canonical_form(t1).cert == canonical_form(t2).cert);

  // path vs triangle differ
  Graph p = path_graph(3);
  CHECK(canonical_form(p).cert != canonical_form(t1).cert);

  std::mt19937_64 rng(99);
  for (int n = 2; n <= 8; ++n) {
    Graph g = random_graph(n, rng);
    auto base = canonical_form(g);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int rep = 0; rep < 100; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto cf = canonical_form(relabel(g, perm));
      REQUIRE(cf.cert == base.cert);
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 8), rng);
    auto cf = canonical_form(g);
    auto cf2 = canonical_form(cf.graph);
    CHECK(cf2.graph == cf.graph);
    CHECK(cf2.cert == cf.cert);
  }
}

TEST_CASE("canonical form distinguishes non-isomorphic graphs exhaustively") {
  // all graphs on 4 vertices fall into exactly 11 certificate classes
  std::set<std::vector<std::uint8_t>> certs;
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    Graph g(4);
    int b = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++b)
        if ((bits >> b) & 1u) g.add_edge(i, j);
    certs.insert(canonical_form(g).cert);
  }
  CHECK(certs.size() == 11);
}

TEST_CASE("canonical form handles symmetric graphs") {
  CHECK(canonical_form(complete_graph(9)).graph == complete_graph(9));
  Graph empty(9);
  CHECK(canonical_form(empty).graph == empty);
  // star: hub plus leaves
  Graph star(9);
  for (int i = 1; i < 9; ++i) star.add_edge(0, i);
  auto cf = canonical_form(star);
  CHECK(cf.graph.edge_count() == 8);
  CHECK(min_degree(cf.graph) == 1);
}

TEST_CASE("independence number matches subset enumeration") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      Graph g = random_graph(n, rng, 0.4);
      CHECK(independence_number(g) == alpha_by_subsets(g));
    }
  }
  Graph edgeless(7);
  CHECK(independence_number(edgeless) == 7);
  CHECK(independence_number(complete_graph(7)) == 1);
}

TEST_CASE("structural predicates") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(Graph(3)));
  CHECK(is_connected(Graph(1)));

  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(is_bipartite(Graph(4)));

  std::mt19937_64 rng(3);
  Graph g = random_graph(6, rng);
  CHECK(complement(complement(g)) == g);

  CHECK(min_degree(path_graph(4)) == 1);
  CHECK(min_degree(complete_graph(4)) == 3);

  Graph h = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph d = delete_vertex(h, 1);
  CHECK(d.size() == 3);
  CHECK(d.has_edge(1, 2));  // old {2,3} shifted down
  CHECK(d.edge_count() == 1);

  Graph ind = induced_subgraph(h, 0b1011u);  // keep 0,1,3
  CHECK(ind.size() == 3);
  CHECK(ind.has_edge(0, 1));
  CHECK(ind.edge_count() == 1);
  CHECK_THROWS_AS(induced_subgraph(h, 1u << 5), std::invalid_argument);
}

TEST_CASE("circulant graphs") {
  Graph c5 = circulant(5, {1});
  CHECK(c5.edge_count() == 5);
  CHECK(canonical_form(c5).cert == canonical_form(cycle_graph(5)).cert);

  Graph k4 = circulant(4, {1, 2});
  CHECK(canonical_form(k4).cert == canonical_form(complete_graph(4)).cert);

  CHECK_THROWS_AS(circulant(6, {4}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(6, {0}), std::invalid_argument);
}

TEST_CASE("nested clique structure") {
  Graph g23 = nested_clique({2, 3});
  CHECK(g23.size() == 6);
  for (int v = 0; v < 6; ++v) CHECK(g23.degree(v) == 3);

  Graph g34 = nested_clique({3, 4});
  CHECK(g34.size() == 12);
  for (int v = 0; v < 12; ++v) CHECK(g34.degree(v) == 5);

  CHECK(canonical_form(nested_clique({4})).cert == canonical_form(complete_graph(4)).cert);

  CHECK_THROWS_AS(nested_clique({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(nested_clique({3, 4, 3}), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (auto sizes : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    Graph g = nested_clique(std::span<const int>(sizes.data(), sizes.size()));
    int want = 0;
    for (int s : sizes) want += s - 1;
    for (int v = 0; v < g.size(); ++v) REQUIRE(g.degree(v) == want);
  }
  (void)rng;
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  // known encodings: K4 is "C~", the 5-cycle is "DUW"
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6("Dhc") == cycle_graph(5));
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");

  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
}

TEST_CASE("adjacency text round trip") {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(parse_adjacency(format_adjacency(g)) == g);
  CHECK_THROWS_AS(parse_adjacency("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_adjacency(""), ParseError);
}
