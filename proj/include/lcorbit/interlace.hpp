#pragma once

// log2 of PAR_IHN for a quadratic function straight from its graph, via the
// three-branch pivot recursion on the interlace-polynomial degree.  No
// spectra are computed; this is the fast oracle the classification uses.

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcorbit/canonical.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

// Certificate-keyed memo.  The recursion revisits isomorphic subgraphs
// heavily, so queries share one of these where possible.  Safe for
// concurrent use.
class InterlaceDegreeMemo {
 public:
  bool lookup(const std::string& key, int& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void store(const std::string& key, int value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, value);
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, int> map_;
};

// Choice of pivot vertex u and neighbour v; the result is provably
// independent of it (exercised by tests), so the default just takes the
// lowest indices for determinism.
struct PivotPolicy {
  // returns u given the graph; u must be a vertex of g
  int (*pick_vertex)(const Graph&) = nullptr;
  // returns v given the graph and u; v must be a neighbour of u
  int (*pick_neighbor)(const Graph&, int) = nullptr;
};

namespace detail {

inline std::string memo_key(const Graph& canonical) {
  auto bytes = cert_bytes(canonical);
  return std::string(bytes.begin(), bytes.end());
}

inline int interlace_rec(const Graph& g, InterlaceDegreeMemo* memo, const PivotPolicy& policy) {
  int n = g.size();
  if (n == 0) return 0;
  if (n == 1) return 1;

  Graph canon = canonical_graph(g);
  std::string key;
  if (memo) {
    key = memo_key(canon);
    int cached;
    if (memo->lookup(key, cached)) return cached;
  }

  int u = policy.pick_vertex ? policy.pick_vertex(canon) : 0;
  std::uint32_t nb = canon.neighbors(u);
  int result;
  if (nb == 0) {
    // isolated vertex: contributes a factor 2 on its own
    result = 1 + interlace_rec(delete_vertex(canon, u), memo, policy);
  } else {
    int v = policy.pick_neighbor ? policy.pick_neighbor(canon, u) : std::countr_zero(nb);
    Graph gu = lc(canon, u);
    Graph guvu = lc(lc(gu, v), u);
    int a = interlace_rec(delete_vertex(canon, u), memo, policy);
    int b = interlace_rec(delete_vertex(gu, u), memo, policy);
    int c = interlace_rec(delete_vertex(guvu, u), memo, policy);
    result = std::max(a, std::max(b, c));
  }
  if (memo) memo->store(key, result);
  return result;
}

}  // namespace detail

inline int log2_par_recursive(const Graph& g, InterlaceDegreeMemo* memo = nullptr,
                              const PivotPolicy& policy = {}) {
  InterlaceDegreeMemo local;
  return detail::interlace_rec(g, memo ? memo : &local, policy);
}

}  // namespace lcorbit
