#pragma once

// Simple undirected graphs on up to 32 vertices, one bitmask row per vertex.
// Everything is value-semantic; a Graph is 33 words and lives on the stack.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcorbit/errors.hpp"

namespace lcorbit {

inline constexpr int kMaxVertices = 32;

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
  }

  int size() const { return n_; }

  std::uint32_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[i] >> j) & 1u;
  }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    adj_[i] |= 1u << j;
    adj_[j] |= 1u << i;
  }

  void remove_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    adj_[i] &= ~(1u << j);
    adj_[j] &= ~(1u << i);
  }

  void toggle_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    adj_[i] ^= 1u << j;
    adj_[j] ^= 1u << i;
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += std::popcount(adj_[v]);
    return s / 2;
  }

  std::uint32_t vertex_mask() const {
    return n_ == 32 ? ~0u : ((1u << n_) - 1u);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }

  int n_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};
};

// Local complementation at v: the subgraph induced by the neighbourhood of v
// is complemented, everything else is untouched.
inline Graph lc(const Graph& g, int v) {
  std::uint32_t nb = g.neighbors(v);
  Graph h = g;
  std::uint32_t rest = nb;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint32_t later = rest;  // pairs {i,j} with j > i inside the neighbourhood
    while (later) {
      int j = std::countr_zero(later);
      later &= later - 1;
      h.toggle_edge(i, j);
    }
  }
  return h;
}

inline bool is_connected(const Graph& g) {
  int n = g.size();
  if (n <= 1) return true;
  std::uint32_t seen = 1u, frontier = 1u;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(v);
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertex_mask();
}

inline bool is_bipartite(const Graph& g) {
  int n = g.size();
  std::array<int, kMaxVertices> side{};
  side.fill(-1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::uint32_t frontier = 1u << s;
    while (frontier) {
      std::uint32_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t nb = g.neighbors(v);
        while (nb) {
          int u = std::countr_zero(nb);
          nb &= nb - 1;
          if (side[u] < 0) {
            side[u] = 1 - side[v];
            next |= 1u << u;
          } else if (side[u] == side[v]) {
            return false;
          }
        }
      }
      frontier = next;
    }
  }
  return true;
}

inline int min_degree(const Graph& g) {
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline Graph complement(const Graph& g) {
  Graph h(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.has_edge(i, j)) h.add_edge(i, j);
  return h;
}

// Keeps the vertices in `keep` (a bitmask over g's vertices), relabelled to
// 0..k-1 preserving order.
inline Graph induced_subgraph(const Graph& g, std::uint32_t keep) {
  if (keep & ~g.vertex_mask())
    throw std::invalid_argument("vertex set out of range");
  std::array<int, kMaxVertices> newlab{};
  int k = 0;
  for (int v = 0; v < g.size(); ++v)
    if ((keep >> v) & 1u) newlab[v] = k++;
  Graph h(k);
  for (int v = 0; v < g.size(); ++v) {
    if (!((keep >> v) & 1u)) continue;
    std::uint32_t nb = g.neighbors(v) & keep;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u > v) h.add_edge(newlab[v], newlab[u]);
    }
  }
  return h;
}

inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  return induced_subgraph(g, g.vertex_mask() & ~(1u << v));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.size() + b.size() > kMaxVertices)
    throw std::invalid_argument("vertex budget exceeded");
  Graph h(a.size() + b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.has_edge(i, j)) h.add_edge(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = i + 1; j < b.size(); ++j)
      if (b.has_edge(i, j)) h.add_edge(a.size() + i, a.size() + j);
  return h;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// Circulant graph: edge {i, (i+c) mod n} for every i and every offset c.
inline Graph circulant(int n, std::span<const int> connections) {
  Graph g(n);
  for (int c : connections) {
    if (c < 1 || 2 * c > n)
      throw std::invalid_argument("circulant offset out of range: " + std::to_string(c));
    for (int i = 0; i < n; ++i) {
      int j = (i + c) % n;
      if (i != j) g.add_edge(i, j);
    }
  }
  return g;
}

inline Graph circulant(int n, std::initializer_list<int> connections) {
  return circulant(n, std::span<const int>(connections.begin(), connections.size()));
}

// Nested clique: sizes = [a, rest...] builds a copies of the graph for
// `rest`, and joins every pair of copies p < q by the perfect matching
// that pairs local vertex (q-1+t) of copy p with local vertex (p+t) of
// copy q, t running over all local indices mod block size.  Every vertex
// picks up exactly one edge towards each other copy, so the result is
// regular of degree sum(size_i - 1).
inline Graph nested_clique(std::span<const int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("nested_clique: empty size list");
  long total = 1;
  for (int s : sizes) {
    if (s < 2) throw std::invalid_argument("nested_clique: block size must be >= 2");
    total *= s;
    if (total > kMaxVertices) throw std::invalid_argument("nested_clique: vertex budget exceeded");
  }
  if (sizes.size() == 1) return complete_graph(sizes[0]);

  Graph inner = nested_clique(sizes.subspan(1));
  int a = sizes[0];
  int b = inner.size();
  Graph g(a * b);
  for (int p = 0; p < a; ++p)
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j)
        if (inner.has_edge(i, j)) g.add_edge(p * b + i, p * b + j);
  for (int p = 0; p < a; ++p)
    for (int q = p + 1; q < a; ++q)
      for (int t = 0; t < b; ++t)
        g.add_edge(p * b + (q - 1 + t) % b, q * b + (p + t) % b);
  return g;
}

inline Graph nested_clique(std::initializer_list<int> sizes) {
  return nested_clique(std::span<const int>(sizes.begin(), sizes.size()));
}

// ---------------------------------------------------------------------------
// graph6 (header-free variant): one byte n+63 for n <= 62, then the upper
// triangle column by column ((0,1),(0,2),(1,2),(0,3),...) packed into 6-bit
// groups, each offset by 63.

inline std::string to_graph6(const Graph& g) {
  int n = g.size();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bitpos = 0;
  char cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      cur = static_cast<char>(cur << 1 | (g.has_edge(i, j) ? 1 : 0));
      if (++bitpos == 6) {
        out.push_back(static_cast<char>(cur + 63));
        bitpos = 0;
        cur = 0;
      }
    }
  }
  if (bitpos > 0) out.push_back(static_cast<char>((cur << (6 - bitpos)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  if (s.empty()) throw ParseError("graph6: empty input");
  int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > kMaxVertices)
    throw ParseError("graph6: unsupported vertex count", 1, 1);
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + nbytes)
    throw ParseError("graph6: wrong length for n=" + std::to_string(n), 1,
                     static_cast<int>(s.size()));
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int c = static_cast<unsigned char>(s[1 + bit / 6]) - 63;
      if (c < 0 || c > 63) throw ParseError("graph6: byte out of range", 1, 2 + bit / 6);
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Human-readable adjacency list: first line "n m", then one "i j" per edge.

inline std::string format_adjacency(const Graph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.has_edge(i, j)) out << i << ' ' << j << '\n';
  return out.str();
}

inline Graph parse_adjacency(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("adjacency list: missing 'n m' header", 1);
  if (n < 0 || n > kMaxVertices) throw ParseError("adjacency list: bad vertex count", 1);
  Graph g(n);
  for (int k = 0; k < m; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw ParseError("adjacency list: missing edge", k + 2);
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
      throw ParseError("adjacency list: bad edge endpoint", k + 2);
    g.add_edge(i, j);
  }
  return g;
}

}  // namespace lcorbit
