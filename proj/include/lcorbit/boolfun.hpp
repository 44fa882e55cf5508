#pragma once

// Boolean functions in algebraic normal form: a sorted set of monomial
// bitmasks over x_0..x_{n-1} (mask 0 is the constant 1).  The truth table is
// derived on demand via the binary Moebius transform.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"

namespace lcorbit {

struct BooleanFunction {
  int n = 0;
  std::vector<std::uint32_t> anf;  // sorted, duplicate-free monomial masks

  void normalize() {
    std::sort(anf.begin(), anf.end());
    // monomials appearing an even number of times cancel over GF(2)
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < anf.size();) {
      std::size_t j = i;
      while (j < anf.size() && anf[j] == anf[i]) ++j;
      if ((j - i) % 2) out.push_back(anf[i]);
      i = j;
    }
    anf = std::move(out);
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

inline int degree(const BooleanFunction& f) {
  int d = 0;
  for (auto m : f.anf) d = std::max(d, std::popcount(m));
  return d;
}

// truth[x] = sum over monomials m contained in x, mod 2
inline std::vector<std::uint8_t> truth_table(const BooleanFunction& f) {
  if (f.n < 0 || f.n > 20) throw BudgetError("truth_table: n out of the 2^20 budget");
  std::vector<std::uint8_t> t(std::size_t{1} << f.n, 0);
  for (auto m : f.anf) t[m] ^= 1;
  for (int i = 0; i < f.n; ++i) {
    std::uint32_t bit = 1u << i;
    for (std::uint32_t x = 0; x < t.size(); ++x)
      if (x & bit) t[x] ^= t[x ^ bit];
  }
  return t;
}

inline BooleanFunction from_truth(int n, const std::vector<std::uint8_t>& truth) {
  if (truth.size() != (std::size_t{1} << n))
    throw std::invalid_argument("from_truth: table size mismatch");
  std::vector<std::uint8_t> t = truth;
  for (int i = 0; i < n; ++i) {
    std::uint32_t bit = 1u << i;
    for (std::uint32_t x = 0; x < t.size(); ++x)
      if (x & bit) t[x] ^= t[x ^ bit];
  }
  BooleanFunction f;
  f.n = n;
  for (std::uint32_t m = 0; m < t.size(); ++m)
    if (t[m]) f.anf.push_back(m);
  return f;
}

// Quadratic bridge: x_i x_j occurs iff {i,j} is an edge.
inline BooleanFunction quadratic_of(const Graph& g) {
  BooleanFunction f;
  f.n = g.size();
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.has_edge(i, j)) f.anf.push_back((1u << i) | (1u << j));
  f.normalize();
  return f;
}

// Graph of the homogeneous degree-2 part; degree <= 1 terms are dropped.
// Throws if any monomial has degree three or more.
inline Graph graph_of(const BooleanFunction& f) {
  Graph g(f.n);
  for (auto m : f.anf) {
    int d = std::popcount(m);
    if (d > 2)
      throw std::invalid_argument("graph_of: function has degree > 2");
    if (d == 2) {
      int i = std::countr_zero(m);
      int j = 31 - std::countl_zero(m);
      g.add_edge(i, j);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// ANF text format.  Monomials are comma-separated; a monomial is a
// period-separated list of decimal variable indices ("0.1,0.2,1.2").  On
// input, an all-digit token is also accepted as single-digit shorthand
// ("01,02,12"), usable while every index is <= 9.  The constant 1 is "c".
// The whole input "0" is the zero function (write x_0 alone as "0." to
// disambiguate).

inline std::string format_anf(const BooleanFunction& f, bool shorthand = false) {
  if (f.anf.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.anf.size(); ++k) {
    if (k) out += ',';
    std::uint32_t m = f.anf[k];
    if (m == 0) {
      out += 'c';
      continue;
    }
    bool first = true;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      if (!first && !shorthand) out += '.';
      out += std::to_string(v);
      first = false;
    }
  }
  if (out == "0") out += '.';  // bare x_0; "0" alone means the zero function
  return out;
}

inline BooleanFunction parse_anf(std::string_view text, int n_hint = -1) {
  BooleanFunction f;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("ANF: empty input");
  int max_var = -1;
  if (s != "0") {
    std::size_t pos = 0;
    int col = 1;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw ParseError("ANF: empty monomial", 1, col);
      std::uint32_t mask = 0;
      if (tok == "c") {
        mask = 0;
      } else if (tok.find('.') != std::string::npos) {
        std::size_t tpos = 0;
        while (tpos < tok.size()) {
          std::size_t dot = tok.find('.', tpos);
          std::string num = tok.substr(tpos, dot == std::string::npos ? std::string::npos : dot - tpos);
          if (num.empty()) throw ParseError("ANF: empty variable index", 1, col);
          for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
              throw ParseError("ANF: bad variable index '" + num + "'", 1, col);
          int v = std::stoi(num);
          if (v >= kMaxVertices) throw ParseError("ANF: variable index too large", 1, col);
          if (mask & (1u << v)) throw ParseError("ANF: repeated variable in monomial", 1, col);
          mask |= 1u << v;
          max_var = std::max(max_var, v);
          if (dot == std::string::npos) break;
          tpos = dot + 1;
          if (tpos == tok.size()) break;  // tolerate a trailing period ("0.")
        }
      } else {
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(std::string("ANF: bad character '") + c + "'", 1, col);
          int v = c - '0';
          if (mask & (1u << v)) throw ParseError("ANF: repeated variable in monomial", 1, col);
          mask |= 1u << v;
          max_var = std::max(max_var, v);
        }
      }
      f.anf.push_back(mask);
      if (comma == std::string::npos) break;
      col += static_cast<int>(tok.size()) + 1;
      pos = comma + 1;
    }
  }
  f.n = n_hint >= 0 ? n_hint : max_var + 1;
  if (max_var >= f.n)
    throw ParseError("ANF: variable index " + std::to_string(max_var) +
                     " outside the declared " + std::to_string(f.n) + " variables");
  f.normalize();
  return f;
}

}  // namespace lcorbit
