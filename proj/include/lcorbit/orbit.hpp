#pragma once

// LC orbits modulo isomorphism: closure of a single graph, full
// classification by vertex count, the orbit invariants lambda and Lambda_n,
// and the count tables derived from them.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "lcorbit/canonical.hpp"
#include "lcorbit/detail/parallel.hpp"
#include "lcorbit/errors.hpp"
#include "lcorbit/gf4.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/independence.hpp"

namespace lcorbit {

struct OrbitRecord {
  int n = 0;
  CanonicalGraph rep;          // lexicographically least certificate in the orbit
  std::uint64_t orbit_size = 0;  // non-isomorphic members
  int distance = 0;
  int lambda = 0;
  int log2_par = 0;  // equals lambda
  std::vector<std::uint64_t> weight_dist;
  bool connected = true;
};

struct ClassificationTable {
  int n = 0;
  std::uint64_t indecomposable = 0;            // i_n: connected orbits
  std::uint64_t total = 0;                     // t_n: including decomposable
  std::map<int, std::uint64_t> by_distance;    // over connected orbits
  std::map<int, std::pair<int, int>> lambda_range;  // d -> (min λ, max λ)
};

// Number of multisets of connected orbits with total size n, from the counts
// of connected orbits per size (indexed from 1).
inline std::vector<std::uint64_t> euler_transform(const std::vector<std::uint64_t>& i_seq) {
  int m = static_cast<int>(i_seq.size());
  std::vector<std::uint64_t> c(m + 1, 0), t(m + 1, 0);
  for (int k = 1; k <= m; ++k)
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) c[k] += static_cast<std::uint64_t>(d) * i_seq[d - 1];
  std::vector<std::uint64_t> out(m);
  for (int k = 1; k <= m; ++k) {
    std::uint64_t acc = c[k];
    for (int j = 1; j < k; ++j) acc += c[j] * t[k - j];
    t[k] = acc / static_cast<std::uint64_t>(k);
    out[k - 1] = t[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// LC closure of a single graph, members counted up to isomorphism.

inline std::vector<CanonicalGraph> lc_orbit(const Graph& g) {
  using Key = CertBits<4>;
  int n = g.size();
  if (n * (n - 1) / 2 > 256)
    throw BudgetError("lc_orbit: graph too large for orbit certificates");
  std::unordered_set<Key, CertBitsHash<4>> seen;
  std::vector<Key> frontier, members;
  Key start = pack_cert<4>(canonical_graph(g));
  seen.insert(start);
  frontier.push_back(start);
  members.push_back(start);
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const Key& k : frontier) {
      Graph h = unpack_cert<4>(n, k);
      for (int v = 0; v < n; ++v) {
        Key img = pack_cert<4>(canonical_graph(lc(h, v)));
        if (seen.insert(img).second) {
          next.push_back(img);
          members.push_back(img);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  std::vector<CanonicalGraph> out;
  out.reserve(members.size());
  for (const Key& k : members) {
    Graph h = unpack_cert<4>(n, k);
    out.push_back(CanonicalGraph{h, cert_bytes(h)});
  }
  return out;
}

// Largest independent set size over the whole LC orbit.
inline int lambda(const Graph& g) {
  int best = 0;
  for (const auto& m : lc_orbit(g)) best = std::max(best, independence_number(m.graph));
  return best;
}

// ---------------------------------------------------------------------------
// Full classification.

struct EnumerateOptions {
  bool connected_only = true;
  bool long_run = false;        // required for n >= 10
  unsigned threads = 0;         // 0 = default
  // Called once per finished connected orbit, in ascending certificate
  // order; used by the CLI to stream the database to disk.
  std::function<void(const OrbitRecord&)> on_record;
};

namespace detail {

using Key2 = CertBits<2>;

// All graphs on k vertices (connected or not), as sorted packed certificates,
// built by extending every graph on k-1 vertices by one vertex with every
// possible neighbourhood.
inline std::vector<Key2> all_graphs_level(int k, const std::vector<Key2>& prev,
                                          unsigned threads) {
  if (k == 1) return {Key2{}};
  std::size_t masks = std::size_t{1} << (k - 1);
  std::vector<std::vector<Key2>> shards(std::max(1u, threads == 0 ? default_thread_count() : threads));
  parallel_chunks(prev.size(), threads, 16, [&](std::size_t lo, std::size_t hi, unsigned tid) {
    auto& out = shards[tid];
    for (std::size_t idx = lo; idx < hi; ++idx) {
      Graph base = unpack_cert<2>(k - 1, prev[idx]);
      for (std::size_t mask = 0; mask < masks; ++mask) {
        Graph g(k);
        for (int i = 0; i < k - 1; ++i)
          for (int j = i + 1; j < k - 1; ++j)
            if (base.has_edge(i, j)) g.add_edge(i, j);
        for (int i = 0; i < k - 1; ++i)
          if ((mask >> i) & 1u) g.add_edge(i, k - 1);
        out.push_back(pack_cert<2>(canonical_graph(g)));
      }
    }
  });
  std::vector<Key2> merged;
  std::size_t sz = 0;
  for (auto& s : shards) sz += s.size();
  merged.reserve(sz);
  for (auto& s : shards) {
    merged.insert(merged.end(), s.begin(), s.end());
    s.clear();
    s.shrink_to_fit();
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

struct ConnectedOrbitData {
  std::vector<OrbitRecord> records;      // ascending rep certificate
};

// Classifies every connected graph on n vertices into LC orbits and fills in
// the per-orbit invariants.
inline ConnectedOrbitData enumerate_connected(int n, unsigned threads) {
  std::vector<Key2> level{Key2{}};
  for (int k = 2; k <= n; ++k) level = all_graphs_level(k, level, threads);

  std::vector<Key2> connected;
  connected.reserve(level.size());
  for (const Key2& key : level)
    if (is_connected(unpack_cert<2>(n, key))) connected.push_back(key);
  level.clear();
  level.shrink_to_fit();

  std::vector<std::int32_t> orbit_of(connected.size(), -1);
  auto index_of = [&](const Key2& key) {
    auto it = std::lower_bound(connected.begin(), connected.end(), key);
    if (it == connected.end() || !(*it == key))
      throw InvariantError("enumerate_orbits: LC image missing from graph table");
    return static_cast<std::size_t>(it - connected.begin());
  };

  ConnectedOrbitData data;
  std::vector<std::size_t> frontier, next, members;
  for (std::size_t seed = 0; seed < connected.size(); ++seed) {
    if (orbit_of[seed] >= 0) continue;
    std::int32_t oid = static_cast<std::int32_t>(data.records.size());
    orbit_of[seed] = oid;
    frontier.assign(1, seed);
    members.assign(1, seed);
    int lam = 0;
    while (!frontier.empty()) {
      next.clear();
      // expand the frontier; collect images, then dedupe sequentially
      std::vector<std::vector<Key2>> images(frontier.size());
      parallel_chunks(frontier.size(), threads, 4, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t f = lo; f < hi; ++f) {
          Graph h = unpack_cert<2>(n, connected[frontier[f]]);
          images[f].reserve(n);
          for (int v = 0; v < n; ++v)
            images[f].push_back(pack_cert<2>(canonical_graph(lc(h, v))));
        }
      });
      for (const auto& img_list : images)
        for (const Key2& img : img_list) {
          std::size_t idx = index_of(img);
          if (orbit_of[idx] < 0) {
            orbit_of[idx] = oid;
            next.push_back(idx);
            members.push_back(idx);
          }
        }
      frontier = next;
    }

    std::vector<int> alphas(members.size());
    parallel_chunks(members.size(), threads, 8, [&](std::size_t lo, std::size_t hi, unsigned) {
      for (std::size_t m = lo; m < hi; ++m)
        alphas[m] = independence_number(unpack_cert<2>(n, connected[members[m]]));
    });
    for (int a : alphas) lam = std::max(lam, a);

    OrbitRecord rec;
    rec.n = n;
    Graph rep = unpack_cert<2>(n, connected[seed]);
    rec.rep = CanonicalGraph{rep, cert_bytes(rep)};
    rec.orbit_size = members.size();
    rec.lambda = lam;
    rec.log2_par = lam;
    CodeProfile prof = profile(code_from_graph(rep));
    rec.distance = prof.distance;
    rec.weight_dist = std::move(prof.weight_dist);
    rec.connected = true;
    data.records.push_back(std::move(rec));
  }
  return data;
}

inline std::uint64_t multichoose(std::uint64_t m, std::uint64_t k) {
  // C(m+k-1, k)
  std::uint64_t num = 1;
  for (std::uint64_t i = 0; i < k; ++i) num = num * (m + i) / (i + 1);
  return num;
}

}  // namespace detail

// One record per orbit of graphs on n vertices.  Decomposable orbits are
// multisets of connected orbits of smaller sizes and are assembled
// arithmetically rather than by materialising disconnected graphs.
inline std::vector<OrbitRecord> enumerate_orbits(int n, const EnumerateOptions& opts = {}) {
  if (n < 1 || n > 12)
    throw BudgetError("enumerate_orbits: n must be in 1..12");
  if (n >= 10 && !opts.long_run)
    throw BudgetError("enumerate_orbits: n >= 10 is hours-scale; pass --long-run to proceed");

  // connected orbits per size, cached bottom-up
  std::vector<std::vector<OrbitRecord>> by_size(n + 1);
  int lo = opts.connected_only ? n : 1;
  for (int k = lo; k <= n; ++k)
    by_size[k] = detail::enumerate_connected(k, opts.threads).records;

  std::vector<OrbitRecord> out = by_size[n];
  if (opts.on_record)
    for (const auto& r : out) opts.on_record(r);
  if (opts.connected_only) return out;

  // multisets of connected orbits with total size n (excluding the single
  // full-size orbit, already listed), over a flattened list of component types
  std::vector<OrbitRecord> decomposable;
  std::vector<std::pair<int, std::size_t>> types;  // (size, index), descending size
  for (int size = n; size >= 1; --size)
    for (std::size_t idx = 0; idx < by_size[size].size(); ++idx) types.push_back({size, idx});
  std::vector<std::pair<std::size_t, int>> chosen;  // (type, multiplicity)
  std::function<void(std::size_t, int)> pick = [&](std::size_t t, int remaining) {
    if (remaining == 0) {
      if (chosen.size() == 1 && chosen[0].second == 1 && types[chosen[0].first].first == n)
        return;  // the connected case
      OrbitRecord rec;
      rec.n = n;
      rec.connected = false;
      rec.orbit_size = 1;
      rec.lambda = 0;
      rec.distance = n + 1;
      rec.weight_dist.assign(1, 1);
      Graph rep_union(0);
      for (auto [type, mult] : chosen) {
        const OrbitRecord& comp = by_size[types[type].first][types[type].second];
        rec.orbit_size *= detail::multichoose(comp.orbit_size, mult);
        for (int c = 0; c < mult; ++c) {
          rec.lambda += comp.lambda;
          rec.distance = std::min(rec.distance, comp.distance);
          rep_union = disjoint_union(rep_union, comp.rep.graph);
          std::vector<std::uint64_t> conv(rec.weight_dist.size() + comp.weight_dist.size() - 1, 0);
          for (std::size_t i = 0; i < rec.weight_dist.size(); ++i)
            for (std::size_t j = 0; j < comp.weight_dist.size(); ++j)
              conv[i + j] += rec.weight_dist[i] * comp.weight_dist[j];
          rec.weight_dist = std::move(conv);
        }
      }
      rec.log2_par = rec.lambda;
      Graph canon = canonical_graph(rep_union);
      rec.rep = CanonicalGraph{canon, cert_bytes(canon)};
      decomposable.push_back(std::move(rec));
      return;
    }
    if (t >= types.size()) return;
    int size = types[t].first;
    if (size > remaining) {
      // skip types too large to fit
      pick(t + 1, remaining);
      return;
    }
    for (int mult = remaining / size; mult >= 1; --mult) {
      chosen.push_back({t, mult});
      pick(t + 1, remaining - mult * size);
      chosen.pop_back();
    }
    pick(t + 1, remaining);
  };
  pick(0, n);

  std::sort(decomposable.begin(), decomposable.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) { return a.rep.cert < b.rep.cert; });
  for (auto& rec : decomposable) {
    if (opts.on_record) opts.on_record(rec);
    out.push_back(std::move(rec));
  }
  return out;
}

// Minimum of lambda over all connected orbits on n vertices.
inline int capital_lambda(int n, const EnumerateOptions& opts = {}) {
  EnumerateOptions o = opts;
  o.connected_only = true;
  o.on_record = nullptr;
  int best = n + 1;
  for (const auto& rec : enumerate_orbits(n, o)) best = std::min(best, rec.lambda);
  return best;
}

inline int capital_lambda_from_records(int n, const std::vector<OrbitRecord>& records) {
  int best = n + 1;
  bool any = false;
  for (const auto& rec : records)
    if (rec.n == n && rec.connected) {
      best = std::min(best, rec.lambda);
      any = true;
    }
  if (!any) throw std::invalid_argument("capital_lambda: no connected records for n");
  return best;
}

// Classification tables for n = 1..n_max from per-orbit records.
inline std::vector<ClassificationTable> tables(int n_max,
                                               const std::vector<OrbitRecord>& records) {
  std::vector<std::uint64_t> i_seq(n_max, 0);
  std::vector<ClassificationTable> out(n_max);
  for (int n = 1; n <= n_max; ++n) out[n - 1].n = n;
  for (const auto& rec : records) {
    if (!rec.connected || rec.n < 1 || rec.n > n_max) continue;
    auto& t = out[rec.n - 1];
    ++t.indecomposable;
    ++t.by_distance[rec.distance];
    auto [it, fresh] = t.lambda_range.try_emplace(rec.distance,
                                                  std::make_pair(rec.lambda, rec.lambda));
    if (!fresh) {
      it->second.first = std::min(it->second.first, rec.lambda);
      it->second.second = std::max(it->second.second, rec.lambda);
    }
    ++i_seq[rec.n - 1];
  }
  for (int n = 1; n <= n_max; ++n)
    if (out[n - 1].indecomposable == 0)
      throw std::invalid_argument("tables: no records for n=" + std::to_string(n));
  i_seq.assign(n_max, 0);
  for (int n = 1; n <= n_max; ++n) i_seq[n - 1] = out[n - 1].indecomposable;
  auto t_seq = euler_transform(i_seq);
  for (int n = 1; n <= n_max; ++n) out[n - 1].total = t_seq[n - 1];
  return out;
}

}  // namespace lcorbit
