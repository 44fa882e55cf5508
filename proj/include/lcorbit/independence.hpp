#pragma once

// Exact maximum independent set size by branch and bound with a greedy
// clique-cover bound.  Exact for every graph the library handles; tuned for
// the n <= 12 sizes the classification needs.

#include <bit>
#include <cstdint>

#include "lcorbit/graph.hpp"

namespace lcorbit {

namespace detail {

// Partitions the candidate set into cliques greedily; the number of cliques
// bounds the independent set size from above.
inline int clique_cover_bound(const Graph& g, std::uint32_t cand) {
  int bound = 0;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    std::uint32_t ext = g.neighbors(v) & cand;
    while (ext) {
      int u = std::countr_zero(ext);
      cand &= ~(1u << u);
      ext &= g.neighbors(u) & cand;
    }
    ++bound;
  }
  return bound;
}

inline void mis_descend(const Graph& g, std::uint32_t cand, int cur, int& best) {
  if (!cand) {
    if (cur > best) best = cur;
    return;
  }
  int avail = std::popcount(cand);
  if (cur + avail <= best) return;
  if (avail > 4 && cur + clique_cover_bound(g, cand) <= best) return;

  // pivot on the highest-degree candidate, ties to the lowest index
  int pivot = -1, pdeg = -1;
  for (std::uint32_t m = cand; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int d = std::popcount(g.neighbors(v) & cand);
    if (d > pdeg) {
      pdeg = d;
      pivot = v;
    }
  }
  mis_descend(g, cand & ~(g.neighbors(pivot) | (1u << pivot)), cur + 1, best);
  mis_descend(g, cand & ~(1u << pivot), cur, best);
}

}  // namespace detail

inline int independence_number(const Graph& g) {
  int best = 0;
  detail::mis_descend(g, g.vertex_mask(), 0, best);
  return best;
}

}  // namespace lcorbit
