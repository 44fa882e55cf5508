#pragma once

// Self-dual additive codes over GF(4) = {0, 1, w, w^2}, w^2 = w + 1.
// A vector is stored split into two bitmasks: entry_i = a_i + w*b_i, so all
// arithmetic is word-parallel XOR/AND and the symplectic (trace) inner
// product is two popcounts.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

struct Gf4Vector {
  std::uint32_t a = 0;  // coefficient of 1
  std::uint32_t b = 0;  // coefficient of w
  int n = 0;

  friend bool operator==(const Gf4Vector&, const Gf4Vector&) = default;
};

struct AdditiveCode {
  int n = 0;
  std::vector<Gf4Vector> gens;  // n generators, GF(2)-linear span
};

struct CodeProfile {
  int distance = 0;
  std::vector<std::uint64_t> weight_dist;  // A_0..A_n
};

// Trace inner product u*v = sum tr(u_i conj(v_i)); in the split representation
// this is the symplectic form sum(a_i(u) b_i(v) + b_i(u) a_i(v)) mod 2.
inline int trace_inner_product(const Gf4Vector& u, const Gf4Vector& v) {
  if (u.n != v.n) throw std::invalid_argument("trace_inner_product: length mismatch");
  return (std::popcount(u.a & v.b) + std::popcount(u.b & v.a)) & 1;
}

// Generator matrix Gamma + w*I for the graph's adjacency matrix Gamma.
inline AdditiveCode code_from_graph(const Graph& g) {
  AdditiveCode c;
  c.n = g.size();
  c.gens.reserve(c.n);
  for (int i = 0; i < c.n; ++i)
    c.gens.push_back(Gf4Vector{g.neighbors(i), 1u << i, c.n});
  return c;
}

// Self-duality: all pairwise trace products vanish and the binary expansion
// of the generators has full GF(2) rank.
inline bool is_self_dual(const AdditiveCode& c) {
  int n = c.n;
  if (static_cast<int>(c.gens.size()) != n) return false;
  for (const auto& g : c.gens)
    if (g.n != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (trace_inner_product(c.gens[i], c.gens[j]) != 0) return false;
  std::vector<std::uint64_t> rows;
  rows.reserve(n);
  for (const auto& g : c.gens)
    rows.push_back(static_cast<std::uint64_t>(g.a) | (static_cast<std::uint64_t>(g.b) << 32));
  int rank = 0;
  for (int bit = 63; bit >= 0 && rank < n; --bit) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if ((rows[r] >> bit) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != rank && ((rows[r] >> bit) & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank == n;
}

// Exact weight distribution by Gray-code enumeration of all 2^n codewords.
inline CodeProfile profile(const AdditiveCode& c) {
  int n = c.n;
  if (n < 1) throw std::invalid_argument("profile: empty code");
  if (n > 24) throw BudgetError("profile: blocklength " + std::to_string(n) +
                                " exceeds the 2^24 enumeration budget");
  CodeProfile p;
  p.weight_dist.assign(n + 1, 0);
  std::uint32_t a = 0, b = 0;
  p.weight_dist[0] = 1;
  std::uint64_t total = std::uint64_t(1) << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    int j = std::countr_zero(k);
    a ^= c.gens[j].a;
    b ^= c.gens[j].b;
    ++p.weight_dist[std::popcount(a | b)];
  }
  p.distance = n;
  for (int w = 1; w <= n; ++w)
    if (p.weight_dist[w] > 0) {
      p.distance = w;
      break;
    }
  return p;
}

// Every vertex degree is at least d-1: the row of a degree-delta vertex is a
// codeword of weight delta+1.  Exists as a cross-check, so it recomputes both
// sides honestly.
inline bool degree_distance_check(const Graph& g) {
  if (g.size() == 0) return true;
  return min_degree(g) >= profile(code_from_graph(g)).distance - 1;
}

// Transforms a self-dual code into graph form: row operations over GF(2)
// plus per-coordinate symplectic scalings (swap of a/b bits = the Hadamard
// scaling, a += b = the shear that clears a diagonal entry).  The output
// code is equivalent to the input and equals code_from_graph(graph).
inline std::pair<Graph, AdditiveCode> to_graph_form(const AdditiveCode& c) {
  if (!is_self_dual(c)) throw InvariantError("to_graph_form: input code is not self-dual");
  int n = c.n;
  std::vector<std::uint32_t> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = c.gens[i].a;
    b[i] = c.gens[i].b;
  }

  std::vector<int> pivot_row(n, -1);
  std::vector<bool> used(n, false);
  for (int col = 0; col < n; ++col) {
    std::uint32_t bit = 1u << col;
    int found = -1;
    for (int r = 0; r < n; ++r)
      if (!used[r] && (b[r] & bit)) {
        found = r;
        break;
      }
    if (found < 0) {
      // no pivot in the w-part: swap a/b on this coordinate
      for (int r = 0; r < n; ++r) {
        std::uint32_t ab = a[r] & bit, bb = b[r] & bit;
        a[r] = (a[r] & ~bit) | bb;
        b[r] = (b[r] & ~bit) | ab;
      }
      for (int r = 0; r < n; ++r)
        if (!used[r] && (b[r] & bit)) {
          found = r;
          break;
        }
    }
    if (found < 0)
      throw InvariantError("to_graph_form: reduction failed; code is not self-dual");
    used[found] = true;
    pivot_row[col] = found;
    for (int r = 0; r < n; ++r) {
      if (r != found && (b[r] & bit)) {
        a[r] ^= a[found];
        b[r] ^= b[found];
      }
    }
  }

  // reorder rows so that the w-part is the identity
  std::vector<std::uint32_t> a2(n), b2(n);
  for (int col = 0; col < n; ++col) {
    a2[col] = a[pivot_row[col]];
    b2[col] = b[pivot_row[col]];
  }

  // clear diagonal entries (a scaling on each offending coordinate)
  for (int i = 0; i < n; ++i)
    if ((a2[i] >> i) & 1u) a2[i] ^= 1u << i;

  // the remaining a-part must be a symmetric adjacency matrix
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (b2[i] != (1u << i)) throw InvariantError("to_graph_form: w-part not identity");
    for (int j = i + 1; j < n; ++j) {
      bool ij = (a2[i] >> j) & 1u, ji = (a2[j] >> i) & 1u;
      if (ij != ji) throw InvariantError("to_graph_form: asymmetric reduction");
      if (ij) g.add_edge(i, j);
    }
  }
  return {g, code_from_graph(g)};
}

// ---------------------------------------------------------------------------
// Generator matrix text: n lines of n characters from {0,1,w,W}, W = w^2.

inline std::string format_generator_matrix(const AdditiveCode& c) {
  std::ostringstream out;
  for (const auto& g : c.gens) {
    for (int j = 0; j < c.n; ++j) {
      int av = (g.a >> j) & 1, bv = (g.b >> j) & 1;
      out << "01wW"[av + 2 * bv];
    }
    out << '\n';
  }
  return out.str();
}

inline AdditiveCode parse_generator_matrix(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty()) lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  if (lines.empty()) throw ParseError("generator matrix: empty input");
  int n = static_cast<int>(lines.size());
  if (n > kMaxVertices) throw ParseError("generator matrix: too many rows");
  AdditiveCode c;
  c.n = n;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw ParseError("generator matrix: row has wrong length", i + 1,
                       static_cast<int>(lines[i].size()) + 1);
    Gf4Vector v;
    v.n = n;
    for (int j = 0; j < n; ++j) {
      switch (lines[i][j]) {
        case '0': break;
        case '1': v.a |= 1u << j; break;
        case 'w': v.b |= 1u << j; break;
        case 'W': v.a |= 1u << j; v.b |= 1u << j; break;
        default:
          throw ParseError(std::string("generator matrix: bad character '") + lines[i][j] + "'",
                           i + 1, j + 1);
      }
    }
    c.gens.push_back(v);
  }
  return c;
}

}  // namespace lcorbit
