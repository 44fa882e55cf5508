#pragma once

// Boolean functions assembled from a partition of the variables and a
// "generalised adjacency matrix": entry (i,j) is a vector of component
// functions over block i, and a non-zero pair {i,j} contributes the dot
// product <entry(i,j)(y_i), entry(j,i)(y_j)> over Z_2.  With all blocks of
// size one and identity entries this degenerates to the quadratic function
// of the template graph; larger blocks and nonlinear components push the
// degree above two while keeping the peak-to-average measures low.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcorbit/boolfun.hpp"
#include "lcorbit/errors.hpp"
#include "lcorbit/spectra.hpp"

namespace lcorbit {

struct Partition {
  std::vector<int> sizes;    // t_j, all >= 1
  std::vector<int> offsets;  // first variable of each block
  int n = 0;

  static Partition of(std::vector<int> sizes_in) {
    Partition p;
    p.sizes = std::move(sizes_in);
    if (p.sizes.empty()) throw std::invalid_argument("partition: no blocks");
    int at = 0;
    for (int t : p.sizes) {
      if (t < 1) throw std::invalid_argument("partition: block size must be >= 1");
      p.offsets.push_back(at);
      at += t;
    }
    p.n = at;
    if (p.n > 16) throw std::invalid_argument("partition: more than 16 variables");
    return p;
  }

  int blocks() const { return static_cast<int>(sizes.size()); }

  std::uint32_t block_mask(int j) const {
    return ((1u << sizes[j]) - 1u) << offsets[j];
  }
};

struct BlockMap {
  std::vector<BooleanFunction> components;  // over the source block's variables
  bool declared_permutation = false;
};

struct ConstructionSpec {
  Partition partition;
  std::map<std::pair<int, int>, BlockMap> entries;  // (i,j), i != j
  std::vector<BooleanFunction> offsets_g;           // one per block; empty = 0
};

namespace detail {

inline BooleanFunction anf_product(const BooleanFunction& a, const BooleanFunction& b) {
  BooleanFunction out;
  out.n = std::max(a.n, b.n);
  out.anf.reserve(a.anf.size() * b.anf.size());
  for (auto ma : a.anf)
    for (auto mb : b.anf) out.anf.push_back(ma | mb);
  out.normalize();
  return out;
}

inline void anf_accumulate(BooleanFunction& acc, const BooleanFunction& term) {
  acc.anf.insert(acc.anf.end(), term.anf.begin(), term.anf.end());
}

// evaluates the m-component map at every point of its block, as m-bit words
inline std::vector<std::uint32_t> map_table(const BlockMap& map, const Partition& p, int block) {
  int t = p.sizes[block], off = p.offsets[block];
  std::vector<std::uint32_t> table(std::size_t{1} << t, 0);
  for (std::size_t c = 0; c < map.components.size(); ++c) {
    BooleanFunction local = map.components[c];
    // shift to local variables
    BooleanFunction shifted;
    shifted.n = t;
    for (auto m : local.anf) shifted.anf.push_back(m >> off);
    shifted.normalize();
    auto truth = truth_table(shifted);
    for (std::uint32_t y = 0; y < table.size(); ++y)
      if (truth[y]) table[y] |= 1u << c;
  }
  return table;
}

}  // namespace detail

// Checks every structural invariant of a spec; throws on violation.
inline void validate(const ConstructionSpec& spec) {
  const Partition& p = spec.partition;
  int L = p.blocks();
  if (static_cast<int>(spec.offsets_g.size()) > L)
    throw std::invalid_argument("construction: more offsets than blocks");
  for (std::size_t j = 0; j < spec.offsets_g.size(); ++j)
    for (auto m : spec.offsets_g[j].anf)
      if (m & ~p.block_mask(static_cast<int>(j)))
        throw std::invalid_argument("construction: offset g_" + std::to_string(j) +
                                    " uses foreign variables");
  for (const auto& [key, map] : spec.entries) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= L || j >= L || i == j)
      throw std::invalid_argument("construction: bad entry index");
    if (map.components.empty())
      throw std::invalid_argument("construction: empty entry; omit zero entries instead");
    for (const auto& comp : map.components)
      for (auto m : comp.anf)
        if (m & ~p.block_mask(i))
          throw std::invalid_argument("construction: entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") uses foreign variables");
    auto mirror = spec.entries.find({j, i});
    if (mirror == spec.entries.end())
      throw std::invalid_argument("construction: entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") has no partner");
    if (mirror->second.components.size() != map.components.size())
      throw std::invalid_argument("construction: entries (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") differ in component count");
    if (map.declared_permutation) {
      int t = p.sizes[i];
      if (static_cast<int>(map.components.size()) != t)
        throw std::invalid_argument("construction: declared permutation must have t_i components");
      auto table = detail::map_table(map, p, i);
      std::vector<bool> hit(table.size(), false);
      for (auto v : table) {
        if (v >= table.size() || hit[v])
          throw std::invalid_argument("construction: declared permutation is not bijective");
        hit[v] = true;
      }
    }
  }
}

// p(x) = sum over non-zero pairs {i,j} of <entry(i,j)(y_i), entry(j,i)(y_j)>
//        + sum of the per-block offsets g_j.
inline BooleanFunction build(const ConstructionSpec& spec) {
  validate(spec);
  const Partition& p = spec.partition;
  BooleanFunction out;
  out.n = p.n;
  for (const auto& [key, map] : spec.entries) {
    auto [i, j] = key;
    if (i > j) continue;  // each unordered pair once
    const BlockMap& back = spec.entries.at({j, i});
    for (std::size_t c = 0; c < map.components.size(); ++c)
      detail::anf_accumulate(out, detail::anf_product(map.components[c], back.components[c]));
  }
  for (const auto& g : spec.offsets_g) detail::anf_accumulate(out, g);
  out.normalize();
  return out;
}

// Chain-shaped special case: entries only on consecutive pairs (j, j+1).
inline BooleanFunction build_path(const ConstructionSpec& spec) {
  for (const auto& [key, map] : spec.entries) {
    auto [i, j] = key;
    if (j != i + 1 && i != j + 1)
      throw std::invalid_argument("build_path: entries must sit on consecutive blocks");
  }
  return build(spec);
}

// Measured PAR_HN against the 2^{t_max} bound.
inline bool verify_par_hn_bound(const ConstructionSpec& spec, const ParOptions& opts = {}) {
  for (const auto& [key, map] : spec.entries) {
    auto [i, j] = key;
    if (j != i + 1 && i != j + 1)
      throw std::invalid_argument("verify_par_hn_bound: spec is not chain-shaped");
  }
  BooleanFunction f = build(spec);
  int t_max = *std::max_element(spec.partition.sizes.begin(), spec.partition.sizes.end());
  double measured = par(f, TransformSet::HN, opts);
  return measured <= std::pow(2.0, t_max) + 1e-9;
}

// ---------------------------------------------------------------------------
// Spec file format: line-oriented.
//   T t0 t1 ...                  block sizes
//   map i j : anf | anf | ...    components of entry (i,j), global indices
//   map! i j : ...               same, checked to be a bijection on block i
//   offset j : anf               g_j
// '#' starts a comment.  ANF syntax is the library's text form.

inline ConstructionSpec parse_construction_spec(std::string_view text) {
  ConstructionSpec spec;
  bool have_partition = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "T") {
      std::vector<int> sizes;
      int t;
      while (ls >> t) sizes.push_back(t);
      if (sizes.empty()) throw ParseError("spec: empty partition", lineno);
      try {
        spec.partition = Partition::of(sizes);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("spec: ") + e.what(), lineno);
      }
      spec.offsets_g.assign(spec.partition.blocks(), BooleanFunction{spec.partition.n, {}});
      have_partition = true;
    } else if (word == "map" || word == "map!") {
      if (!have_partition) throw ParseError("spec: 'map' before 'T'", lineno);
      int i, j;
      std::string colon;
      if (!(ls >> i >> j >> colon) || colon != ":")
        throw ParseError("spec: expected 'map i j : ...'", lineno);
      std::string rest;
      std::getline(ls, rest);
      BlockMap map;
      map.declared_permutation = (word == "map!");
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        std::size_t bar = rest.find('|', pos);
        std::string piece = rest.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        try {
          map.components.push_back(parse_anf(piece, spec.partition.n));
        } catch (const ParseError& e) {
          throw ParseError(std::string("spec: ") + e.what(), lineno);
        }
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
      if (!spec.entries.emplace(std::make_pair(i, j), std::move(map)).second)
        throw ParseError("spec: duplicate map entry", lineno);
    } else if (word == "offset") {
      if (!have_partition) throw ParseError("spec: 'offset' before 'T'", lineno);
      int j;
      std::string colon;
      if (!(ls >> j >> colon) || colon != ":")
        throw ParseError("spec: expected 'offset j : anf'", lineno);
      if (j < 0 || j >= spec.partition.blocks())
        throw ParseError("spec: offset block out of range", lineno);
      std::string rest;
      std::getline(ls, rest);
      try {
        spec.offsets_g[j] = parse_anf(rest, spec.partition.n);
      } catch (const ParseError& e) {
        throw ParseError(std::string("spec: ") + e.what(), lineno);
      }
    } else {
      throw ParseError("spec: unknown directive '" + word + "'", lineno);
    }
  }
  if (!have_partition) throw ParseError("spec: missing 'T' line");
  return spec;
}

inline std::string format_construction_spec(const ConstructionSpec& spec) {
  std::ostringstream out;
  out << "T";
  for (int t : spec.partition.sizes) out << ' ' << t;
  out << '\n';
  for (const auto& [key, map] : spec.entries) {
    out << (map.declared_permutation ? "map! " : "map ") << key.first << ' ' << key.second
        << " : ";
    for (std::size_t c = 0; c < map.components.size(); ++c) {
      if (c) out << " | ";
      out << format_anf(map.components[c]);
    }
    out << '\n';
  }
  for (std::size_t j = 0; j < spec.offsets_g.size(); ++j)
    if (!spec.offsets_g[j].anf.empty())
      out << "offset " << j << " : " << format_anf(spec.offsets_g[j]) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// The three reference constructions shipped with the library: two n=8
// functions over the hexacode-wheel template (one with linear lower maps,
// one with nonlinear row-0 maps) and an n=9 function over the triangle
// template with three-bit blocks.  One-variable offsets are pinned to zero.

struct ConstructionReport {
  std::string name;
  ConstructionSpec spec;
  BooleanFunction function;
  double par_ihn = 0;
};

namespace detail {

inline ConstructionSpec hexacode_template_spec(const std::vector<std::string>& row0,
                                               const std::string& g0) {
  // template graph: vertex 0 joined to 1..5, plus the cycle 1-2-3-4-5-1
  ConstructionSpec spec;
  spec.partition = Partition::of({3, 1, 1, 1, 1, 1});
  spec.offsets_g.assign(6, BooleanFunction{8, {}});
  auto var = [](int v) {
    return BooleanFunction{8, {1u << v}};
  };
  for (int j = 1; j <= 5; ++j) {
    spec.entries[{0, j}] = BlockMap{{parse_anf(row0[j - 1], 8)}, false};
    spec.entries[{j, 0}] = BlockMap{{var(j + 2)}, false};
  }
  const std::pair<int, int> cycle[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}};
  for (auto [i, j] : cycle) {
    spec.entries[{i, j}] = BlockMap{{var(i + 2)}, false};
    spec.entries[{j, i}] = BlockMap{{var(j + 2)}, false};
  }
  spec.offsets_g[0] = parse_anf(g0, 8);
  return spec;
}

inline ConstructionSpec triangle_template_spec() {
  ConstructionSpec spec;
  spec.partition = Partition::of({3, 3, 3});
  spec.offsets_g.assign(3, BooleanFunction{9, {}});
  auto mk = [&](std::initializer_list<const char*> comps) {
    BlockMap m;
    for (const char* c : comps) m.components.push_back(parse_anf(c, 9));
    return m;
  };
  spec.entries[{0, 1}] = mk({"1.2,0,1,2", "0.1,2", "0.2,1,2"});
  spec.entries[{0, 2}] = mk({"1.2,0,1,2", "0.1,2", "0.2,1,2"});
  spec.entries[{1, 0}] = mk({"3.4,5", "3.5,4,5", "4.5,3,4,5"});
  spec.entries[{1, 2}] = mk({"4.5,3,4,5", "3.4,5", "3.5,4,5"});
  spec.entries[{2, 0}] = mk({"6.8,7,8", "7.8,6,7,8", "6.7,8"});
  spec.entries[{2, 1}] = mk({"7.8,6,7,8", "6.7,8", "6.8,7,8"});
  spec.offsets_g[0] = parse_anf("0.1,0.2,1.2", 9);
  spec.offsets_g[1] = parse_anf("3.4,3.5,4.5", 9);
  spec.offsets_g[2] = parse_anf("6.7,6.8,7.8", 9);
  return spec;
}

}  // namespace detail

inline std::vector<ConstructionReport> reproduce_examples(const ParOptions& opts = {}) {
  std::vector<ConstructionReport> out;
  {
    ConstructionReport r;
    r.name = "hexacode-template-linear";
    r.spec = detail::hexacode_template_spec({"0.2,1", "0.2,1", "0.2,1", "0.2,1", "0.2,1"},
                                            "0.1,0.2,1.2");
    r.function = build(r.spec);
    r.par_ihn = par(r.function, TransformSet::IHN, opts);
    out.push_back(std::move(r));
  }
  {
    ConstructionReport r;
    r.name = "hexacode-template-nonlinear";
    r.spec = detail::hexacode_template_spec(
        {"0.2,1", "1.2,0,1,2", "0.1,0.2,1.2,1,2", "0.1,0.2,1.2", "0.2,1.2,1,2"}, "0.1,1.2");
    r.function = build(r.spec);
    r.par_ihn = par(r.function, TransformSet::IHN, opts);
    out.push_back(std::move(r));
  }
  {
    ConstructionReport r;
    r.name = "triangle-of-triples";
    r.spec = detail::triangle_template_spec();
    r.function = build(r.spec);
    r.par_ihn = par(r.function, TransformSet::IHN, opts);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lcorbit
