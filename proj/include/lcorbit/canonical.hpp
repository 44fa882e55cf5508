#pragma once

// Canonical labelling by ordered-partition backtracking.  The certificate is
// the lexicographically smallest adjacency bit-string (upper triangle, column
// by column, the same bit order graph6 uses) over all labelings compatible
// with an iteratively refined vertex partition.  Two graphs get equal
// certificates iff they are isomorphic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "lcorbit/graph.hpp"

namespace lcorbit {

struct CanonicalGraph {
  Graph graph;                     // relabelled input
  std::vector<std::uint8_t> cert;  // [n, packed upper-triangle bits...]
};

namespace detail {

inline constexpr int kCertWords = 8;  // 496 bits >= C(32,2)

struct CanonContext {
  const Graph* g = nullptr;
  int n = 0;
  bool have_best = false;
  std::array<std::uint64_t, kCertWords> best{};
  std::array<std::uint8_t, kMaxVertices> best_perm{};  // position -> vertex
  std::vector<std::array<std::uint8_t, kMaxVertices>> autos;
  static constexpr std::size_t kMaxAutos = 192;
};

struct CanonNode {
  std::array<std::uint8_t, kMaxVertices> order;  // [0,depth) placed, rest in cells
  std::uint32_t cell_start = 0;                  // bit i set iff a cell starts at i
  std::array<std::uint64_t, kCertWords> bits{};
  int bitpos = 0;
};

inline void set_cert_bit(std::array<std::uint64_t, kCertWords>& w, int pos) {
  w[pos >> 6] |= std::uint64_t(1) << (63 - (pos & 63));
}

// Lexicographic comparison of the first `nbits` certificate bits.
inline int compare_prefix(const std::array<std::uint64_t, kCertWords>& a,
                          const std::array<std::uint64_t, kCertWords>& b, int nbits) {
  int full = nbits >> 6;
  for (int k = 0; k < full; ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  int rem = nbits & 63;
  if (rem) {
    std::uint64_t mask = ~0ull << (64 - rem);
    std::uint64_t x = a[full] & mask, y = b[full] & mask;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// Iterated neighbour-colour refinement.  Colour ids are assigned by sorted
// signature so they are label-independent.
inline std::array<std::uint8_t, kMaxVertices> initial_colors(const Graph& g) {
  int n = g.size();
  std::array<std::uint8_t, kMaxVertices> color{};
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    // signature: own colour followed by sorted neighbour colours
    std::array<std::array<std::uint8_t, kMaxVertices + 1>, kMaxVertices> sig{};
    std::array<int, kMaxVertices> siglen{};
    for (int v = 0; v < n; ++v) {
      int len = 0;
      sig[v][len++] = color[v];
      std::uint32_t nb = g.neighbors(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        sig[v][len++] = color[u];
      }
      std::sort(sig[v].begin() + 1, sig[v].begin() + len);
      siglen[v] = len;
    }
    std::array<int, kMaxVertices> idx{};
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) {
      return std::lexicographical_compare(sig[a].begin(), sig[a].begin() + siglen[a],
                                          sig[b].begin(), sig[b].begin() + siglen[b]);
    });
    std::array<std::uint8_t, kMaxVertices> next{};
    int c = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0) {
        int a = idx[k - 1], b = idx[k];
        bool eq = siglen[a] == siglen[b] &&
                  std::equal(sig[a].begin(), sig[a].begin() + siglen[a], sig[b].begin());
        if (!eq) ++c;
      }
      next[idx[k]] = static_cast<std::uint8_t>(c);
    }
    int new_classes = c + 1;
    if (new_classes == classes && next == color) break;
    color = next;
    classes = new_classes;
    if (classes == n) break;
  }
  return color;
}

inline void canon_descend(CanonContext& ctx, const CanonNode& node, int depth) {
  int n = ctx.n;
  if (depth == n) {
    if (!ctx.have_best) {
      ctx.have_best = true;
      ctx.best = node.bits;
      ctx.best_perm = node.order;
      return;
    }
    int cmp = compare_prefix(node.bits, ctx.best, node.bitpos);
    if (cmp < 0) {
      ctx.best = node.bits;
      ctx.best_perm = node.order;
    } else if (cmp == 0 && ctx.autos.size() < CanonContext::kMaxAutos) {
      // equal string: records an automorphism
      std::array<std::uint8_t, kMaxVertices> sigma{};
      for (int p = 0; p < n; ++p) sigma[ctx.best_perm[p]] = node.order[p];
      ctx.autos.push_back(sigma);
    }
    return;
  }

  int cell_end = depth + 1;
  while (cell_end < n && !((node.cell_start >> cell_end) & 1u)) ++cell_end;

  std::array<std::uint8_t, kMaxVertices> tried{};
  int ntried = 0;

  for (int idx = depth; idx < cell_end; ++idx) {
    int u = node.order[idx];

    // skip candidates equivalent (under a discovered automorphism fixing the
    // placed prefix pointwise) to one we already tried at this node
    bool skip = false;
    for (const auto& sigma : ctx.autos) {
      bool fixes = true;
      for (int i = 0; i < depth; ++i) {
        if (sigma[node.order[i]] != node.order[i]) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      int image = sigma[u];
      for (int t = 0; t < ntried; ++t) {
        if (tried[t] == image) {
          skip = true;
          break;
        }
      }
      if (skip) break;
    }
    if (skip) continue;
    tried[ntried++] = static_cast<std::uint8_t>(u);

    CanonNode child = node;
    std::swap(child.order[depth], child.order[idx]);

    // append the column of adjacency bits between u and the placed prefix
    std::uint32_t nb = ctx.g->neighbors(u);
    for (int i = 0; i < depth; ++i) {
      int b = (nb >> child.order[i]) & 1u;
      int pos = child.bitpos++;
      if (b) set_cert_bit(child.bits, pos);
    }
    if (ctx.have_best && compare_prefix(child.bits, ctx.best, child.bitpos) > 0) continue;

    // u becomes a singleton cell; split the remaining cells by adjacency to u
    if (depth + 1 < n) child.cell_start |= 1u << (depth + 1);
    int s = depth + 1;
    while (s < n) {
      int e = s + 1;
      while (e < n && !((child.cell_start >> e) & 1u)) ++e;
      if (e - s > 1) {
        std::array<std::uint8_t, kMaxVertices> non{}, adj{};
        int nn = 0, na = 0;
        for (int k = s; k < e; ++k) {
          int w = child.order[k];
          if ((nb >> w) & 1u)
            adj[na++] = static_cast<std::uint8_t>(w);
          else
            non[nn++] = static_cast<std::uint8_t>(w);
        }
        if (nn > 0 && na > 0) {
          for (int k = 0; k < nn; ++k) child.order[s + k] = non[k];
          for (int k = 0; k < na; ++k) child.order[s + nn + k] = adj[k];
          child.cell_start |= 1u << (s + nn);
        }
      }
      s = e;
    }

    canon_descend(ctx, child, depth + 1);
  }
}

inline void run_canon(const Graph& g, CanonContext& ctx) {
  int n = g.size();
  ctx.g = &g;
  ctx.n = n;
  ctx.have_best = false;
  ctx.autos.clear();
  if (n == 0) {
    ctx.have_best = true;
    return;
  }

  auto color = initial_colors(g);
  CanonNode root;
  std::array<int, kMaxVertices> idx{};
  for (int v = 0; v < n; ++v) idx[v] = v;
  std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  for (int k = 0; k < n; ++k) root.order[k] = static_cast<std::uint8_t>(idx[k]);
  root.cell_start = 1u;
  for (int k = 1; k < n; ++k)
    if (color[idx[k]] != color[idx[k - 1]]) root.cell_start |= 1u << k;

  canon_descend(ctx, root, 0);
}

}  // namespace detail

inline Graph canonical_graph(const Graph& g) {
  detail::CanonContext ctx;
  detail::run_canon(g, ctx);
  Graph h(g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.has_edge(ctx.best_perm[i], ctx.best_perm[j])) h.add_edge(i, j);
  return h;
}

// Packs the upper triangle of an (already canonical) graph in certificate bit
// order.  W words cover n <= 23 at W = 4 and n <= 12 at W = 2.
template <int W>
struct CertBits {
  std::array<std::uint64_t, W> w{};
  friend bool operator==(const CertBits&, const CertBits&) = default;
  friend auto operator<=>(const CertBits& a, const CertBits& b) {
    for (int k = 0; k < W; ++k)
      if (a.w[k] != b.w[k]) return a.w[k] <=> b.w[k];
    return std::strong_ordering::equal;
  }
};

template <int W>
inline CertBits<W> pack_cert(const Graph& g) {
  int n = g.size();
  if (n * (n - 1) / 2 > 64 * W) throw InvariantError("pack_cert: graph too large for word count");
  CertBits<W> c;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if (g.has_edge(i, j)) c.w[pos >> 6] |= std::uint64_t(1) << (63 - (pos & 63));
  return c;
}

template <int W>
inline Graph unpack_cert(int n, const CertBits<W>& c) {
  Graph g(n);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((c.w[pos >> 6] >> (63 - (pos & 63))) & 1u) g.add_edge(i, j);
  return g;
}

template <int W>
struct CertBitsHash {
  std::size_t operator()(const CertBits<W>& c) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < W; ++k) {
      h ^= c.w[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<std::uint8_t> cert_bytes(const Graph& canonical) {
  int n = canonical.size();
  int nbits = n * (n - 1) / 2;
  std::vector<std::uint8_t> out;
  out.reserve(1 + (nbits + 7) / 8);
  out.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t cur = 0;
  int fill = 0;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      cur = static_cast<std::uint8_t>(cur << 1 | (canonical.has_edge(i, j) ? 1 : 0));
      if (++fill == 8) {
        out.push_back(cur);
        cur = 0;
        fill = 0;
      }
    }
  }
  if (fill > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - fill)));
  return out;
}

inline CanonicalGraph canonical_form(const Graph& g) {
  Graph h = canonical_graph(g);
  return CanonicalGraph{h, cert_bytes(h)};
}

}  // namespace lcorbit
