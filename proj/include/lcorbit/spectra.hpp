#pragma once

// The {I,H,N}^n multispectrum of a Boolean function.  Kernel k of an
// assignment acts on index bit k (x_0 is the least significant bit).
//
// Two arithmetic backends: Gaussian integers with an implicit power-of-sqrt2
// scale (exact; flatness tests, Z_8 phase extraction, PAR values), and plain
// complex<double> (bulk sampling scans).  Spectral magnitudes never leave
// Z[i] because H and N butterflies only add, subtract and multiply by i.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "lcorbit/boolfun.hpp"
#include "lcorbit/detail/parallel.hpp"
#include "lcorbit/errors.hpp"
#include "lcorbit/graph.hpp"
#include "lcorbit/independence.hpp"

namespace lcorbit {

enum class Kernel : std::uint8_t { I, H, N };

struct TransformAssignment {
  std::vector<Kernel> kernels;  // kernels[k] acts on variable x_k
};

enum class TransformSet { IHN, IH, HN };

struct Spectrum {
  std::vector<std::complex<double>> values;
  TransformAssignment assignment;
};

struct ParOptions {
  bool long_run = false;
  unsigned threads = 0;  // 0 = default; scans below ~n=9 stay single-threaded anyway
};

// s = 2^{-n/2} (-1)^{f(x)}
inline std::vector<double> bipolar(const BooleanFunction& f) {
  if (f.n > 20) throw BudgetError("bipolar: n exceeds the 2^20 budget");
  auto t = truth_table(f);
  double scale = std::pow(2.0, -0.5 * f.n);
  std::vector<double> s(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) s[x] = t[x] ? -scale : scale;
  return s;
}

inline Spectrum apply_transform(const std::vector<std::complex<double>>& s,
                                const TransformAssignment& a) {
  int n = static_cast<int>(a.kernels.size());
  if (s.size() != (std::size_t{1} << n))
    throw std::invalid_argument("apply_transform: size mismatch");
  Spectrum out{std::vector<std::complex<double>>(s), a};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    if (a.kernels[k] == Kernel::I) continue;
    std::size_t step = std::size_t{1} << k;
    for (std::size_t x = 0; x < out.values.size(); ++x) {
      if (x & step) continue;
      std::complex<double> u = out.values[x], v = out.values[x | step];
      if (a.kernels[k] == Kernel::H) {
        out.values[x] = (u + v) * inv_sqrt2;
        out.values[x | step] = (u - v) * inv_sqrt2;
      } else {
        std::complex<double> iv(-v.imag(), v.real());
        out.values[x] = (u + iv) * inv_sqrt2;
        out.values[x | step] = (u - iv) * inv_sqrt2;
      }
    }
  }
  return out;
}

inline Spectrum apply_transform(const std::vector<double>& s, const TransformAssignment& a) {
  std::vector<std::complex<double>> c(s.begin(), s.end());
  return apply_transform(c, a);
}

namespace detail {

struct GaussInt {
  std::int64_t re = 0, im = 0;
};
inline GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
inline GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
inline GaussInt mul_i(GaussInt a) { return {-a.im, a.re}; }
inline std::int64_t norm_of(GaussInt a) { return a.re * a.re + a.im * a.im; }

inline std::complex<double> mul_i(std::complex<double> a) { return {-a.imag(), a.real()}; }
inline double norm_of(std::complex<double> a) { return std::norm(a); }

template <typename E>
void butterfly(std::vector<E>& dst, const std::vector<E>& src, int bit, Kernel k) {
  std::size_t step = std::size_t{1} << bit;
  dst.resize(src.size());
  for (std::size_t x = 0; x < src.size(); ++x) {
    if (x & step) continue;
    E u = src[x], v = src[x | step];
    if (k == Kernel::H) {
      dst[x] = u + v;
      dst[x | step] = u - v;
    } else {
      E iv = mul_i(v);
      dst[x] = u + iv;
      dst[x | step] = u - iv;
    }
  }
}

inline std::array<Kernel, 3> kernels_of(TransformSet set, int& count) {
  switch (set) {
    case TransformSet::IHN: count = 3; return {Kernel::I, Kernel::H, Kernel::N};
    case TransformSet::IH: count = 2; return {Kernel::I, Kernel::H, Kernel::I};
    default: count = 2; return {Kernel::H, Kernel::N, Kernel::I};
  }
}

// Depth-first sweep over every assignment in the set.  Buffers are shared
// along the path; an I kernel costs nothing.  leaf(assignment, values,
// non_identity_count) is called once per assignment.
template <typename E, typename LeafFn>
struct Scan {
  int n;            // number of variables this scan sweeps
  int bit_offset;   // kernel at depth d acts on index bit (bit_offset + d)
  std::array<Kernel, 3> allowed;
  int allowed_count;
  std::vector<std::vector<E>> buf;
  std::vector<Kernel> assign;
  LeafFn leaf;

  Scan(int n_, TransformSet set, const std::vector<E>& s0, LeafFn fn, int bit_offset_ = 0)
      : n(n_), bit_offset(bit_offset_), buf(static_cast<std::size_t>(n_) + 1),
        assign(n_, Kernel::I), leaf(std::move(fn)) {
    allowed = kernels_of(set, allowed_count);
    buf[0] = s0;
  }

  void run(int depth, int src, int non_identity) {
    if (depth == n) {
      leaf(assign, buf[src], non_identity);
      return;
    }
    for (int c = 0; c < allowed_count; ++c) {
      Kernel k = allowed[c];
      assign[depth] = k;
      if (k == Kernel::I) {
        run(depth + 1, src, non_identity);
      } else {
        butterfly(buf[depth + 1], buf[src], bit_offset + depth, k);
        run(depth + 1, depth + 1, non_identity + 1);
      }
    }
  }
};

template <typename E, typename LeafFn>
void scan_assignments(int n, TransformSet set, const std::vector<E>& s0, LeafFn leaf) {
  Scan<E, LeafFn> scan(n, set, s0, std::move(leaf));
  scan.run(0, 0, 0);
}

inline std::vector<GaussInt> bipolar_exact(const BooleanFunction& f) {
  auto t = truth_table(f);
  std::vector<GaussInt> s(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) s[x] = GaussInt{t[x] ? -1 : 1, 0};
  return s;
}

// PAR candidate value num / 2^den_log2 with exact comparison.
struct DyadicMax {
  std::int64_t num = -1;
  int den_log2 = 0;

  void consider(std::int64_t m, int k) {
    if (num < 0) {
      num = m;
      den_log2 = k;
      return;
    }
    __int128 lhs = static_cast<__int128>(m) << den_log2;
    __int128 rhs = static_cast<__int128>(num) << k;
    if (lhs > rhs) {
      num = m;
      den_log2 = k;
    }
  }

  double value() const { return static_cast<double>(num) / std::pow(2.0, den_log2); }
};

inline int par_budget_check(int n, TransformSet set, const ParOptions& opts, const char* who) {
  int def = set == TransformSet::IHN ? 9 : 12;
  int max = set == TransformSet::IHN ? 12 : 14;
  if (n <= def) return n;
  if (n <= max && opts.long_run) return n;
  if (n <= max)
    throw BudgetError(std::string(who) + ": n=" + std::to_string(n) +
                      " exceeds the default scan budget; pass --long-run to proceed");
  throw BudgetError(std::string(who) + ": n=" + std::to_string(n) + " is beyond the scan budget");
}

}  // namespace detail

// 2^n times the largest |S_k|^2 over every assignment in the set.  Computed
// in exact arithmetic; the result is a dyadic rational that converts to
// double without rounding.
inline double par(const BooleanFunction& f, TransformSet set, const ParOptions& opts = {}) {
  detail::par_budget_check(f.n, set, opts, "par");
  auto s0 = detail::bipolar_exact(f);
  unsigned threads = opts.threads ? opts.threads : detail::default_thread_count();
  if (f.n <= 9 || threads <= 1) {
    detail::DyadicMax best;
    detail::scan_assignments<detail::GaussInt>(
        f.n, set, s0, [&](const std::vector<Kernel>&, const std::vector<detail::GaussInt>& v, int k) {
          std::int64_t m = 0;
          for (const auto& z : v) m = std::max(m, detail::norm_of(z));
          best.consider(m, k);
        });
    return best.value();
  }

  // distribute prefix subtrees over threads
  int count;
  auto allowed = detail::kernels_of(set, count);
  int prefix_depth = 0;
  std::size_t subtrees = 1;
  while (prefix_depth < f.n && subtrees < 4 * static_cast<std::size_t>(threads)) {
    subtrees *= count;
    ++prefix_depth;
  }
  std::vector<detail::DyadicMax> partial(threads);
  detail::parallel_chunks(subtrees, threads, 1, [&](std::size_t lo, std::size_t hi, unsigned tid) {
    for (std::size_t code = lo; code < hi; ++code) {
      std::vector<detail::GaussInt> cur = s0, tmp;
      std::vector<Kernel> prefix(prefix_depth);
      int non_identity = 0;
      std::size_t c = code;
      for (int d = 0; d < prefix_depth; ++d) {
        Kernel k = allowed[c % count];
        c /= count;
        prefix[d] = k;
        if (k != Kernel::I) {
          detail::butterfly(tmp, cur, d, k);
          std::swap(tmp, cur);
          ++non_identity;
        }
      }
      detail::Scan scan(f.n - prefix_depth, set, cur,
                        [&](const std::vector<Kernel>&, const std::vector<detail::GaussInt>& v,
                            int k) {
                          std::int64_t m = 0;
                          for (const auto& z : v) m = std::max(m, detail::norm_of(z));
                          partial[tid].consider(m, k + non_identity);
                        },
                        prefix_depth);
      scan.run(0, 0, 0);
    }
  });
  detail::DyadicMax best;
  for (const auto& p : partial)
    if (p.num >= 0) best.consider(p.num, p.den_log2);
  return best.value();
}

// gamma(f) = 2^{n/2-1} (2^{n/2} - sqrt(PAR_IHN))
inline double gamma_nonlinearity(const BooleanFunction& f, const ParOptions& opts = {}) {
  double p = par(f, TransformSet::IHN, opts);
  double half = std::pow(2.0, 0.5 * f.n);
  return 0.5 * half * (half - std::sqrt(p));
}

// Applies H exactly on the vertices of A (a bitmask), I elsewhere, to the
// bipolar vector of the graph's quadratic function; returns 2^n max |S_k|^2.
// A must be independent in g.
inline double peak_at_independent_set(const Graph& g, std::uint32_t A) {
  if (A & ~g.vertex_mask()) throw std::invalid_argument("peak_at_independent_set: set out of range");
  for (std::uint32_t m = A; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (g.neighbors(v) & A)
      throw std::invalid_argument("peak_at_independent_set: set is not independent");
  }
  int n = g.size();
  if (n > 16) throw BudgetError("peak_at_independent_set: n exceeds the 2^16 budget");
  auto s = detail::bipolar_exact(quadratic_of(g));
  std::vector<detail::GaussInt> tmp;
  int k = 0;
  for (int bit = 0; bit < n; ++bit) {
    if (!((A >> bit) & 1u)) continue;
    detail::butterfly(tmp, s, bit, Kernel::H);
    std::swap(tmp, s);
    ++k;
  }
  std::int64_t m = 0;
  for (const auto& z : s) m = std::max(m, detail::norm_of(z));
  return static_cast<double>(m) / std::pow(2.0, k);
}

// The set of distinct f' arising from flat {I,H,N}^n spectra with an
// affine-or-lower residual phase, returned as graphs.  For quadratic input
// this is the LC orbit of the function's graph.
inline std::vector<Graph> flat_spectra_orbit(const BooleanFunction& f, const ParOptions& opts = {}) {
  if (degree(f) > 2) throw std::invalid_argument("flat_spectra_orbit: function must be quadratic");
  Graph g = graph_of(f);  // degree <= 1 terms discarded
  BooleanFunction q = quadratic_of(g);
  int n = f.n;
  if (n > 9 && !opts.long_run)
    throw BudgetError("flat_spectra_orbit: n > 9 requires --long-run");
  if (n > 12) throw BudgetError("flat_spectra_orbit: n exceeds the scan budget");

  auto s0 = detail::bipolar_exact(q);
  std::set<std::vector<std::uint32_t>> distinct;
  std::vector<std::uint8_t> e(s0.size());
  detail::scan_assignments<detail::GaussInt>(
      n, TransformSet::IHN, s0,
      [&](const std::vector<Kernel>&, const std::vector<detail::GaussInt>& v, int) {
        std::int64_t m0 = detail::norm_of(v[0]);
        for (const auto& z : v)
          if (detail::norm_of(z) != m0) return;  // not flat
        // phases as eighth-root exponents
        for (std::size_t x = 0; x < v.size(); ++x) {
          const auto& z = v[x];
          int ex;
          if (z.im == 0)
            ex = z.re > 0 ? 0 : 4;
          else if (z.re == 0)
            ex = z.im > 0 ? 2 : 6;
          else if (z.re == z.im)
            ex = z.re > 0 ? 1 : 5;
          else if (z.re == -z.im)
            ex = z.im > 0 ? 3 : 7;
          else
            return;  // flat but not on the eighth-root grid
          e[x] = static_cast<std::uint8_t>(ex);
        }
        // Z_8-valued ANF by Moebius transform
        std::vector<std::uint8_t> c = e;
        for (int i = 0; i < n; ++i) {
          std::uint32_t bit = 1u << i;
          for (std::uint32_t x = 0; x < c.size(); ++x)
            if (x & bit) c[x] = static_cast<std::uint8_t>((c[x] - c[x ^ bit]) & 7);
        }
        // residual h must have degree <= 1: every deg >= 2 coefficient is 0 or 4
        std::vector<std::uint32_t> edges;
        for (std::uint32_t m = 0; m < c.size(); ++m) {
          if (std::popcount(m) < 2 || c[m] == 0) continue;
          if (c[m] != 4) return;
          if (std::popcount(m) > 2)
            throw InvariantError("flat_spectra_orbit: quadratic input produced degree > 2 image");
          edges.push_back(m);
        }
        distinct.insert(std::move(edges));
      });

  std::vector<Graph> out;
  out.reserve(distinct.size());
  for (const auto& edges : distinct) {
    Graph h(n);
    for (auto m : edges) {
      int i = std::countr_zero(m);
      int j = 31 - std::countl_zero(m);
      h.add_edge(i, j);
    }
    out.push_back(h);
  }
  return out;
}

// Observed (min, max) of PAR_IHN over `count` uniformly random truth tables,
// deterministic in the seed.  Uses the floating-point backend.
inline std::pair<double, double> sample_par(int n, std::uint64_t count, std::uint64_t seed,
                                            const ParOptions& opts = {}) {
  detail::par_budget_check(n, TransformSet::IHN, opts, "sample_par");
  unsigned threads = opts.threads ? opts.threads : detail::default_thread_count();
  std::vector<double> mins(threads, std::numeric_limits<double>::infinity());
  std::vector<double> maxs(threads, -std::numeric_limits<double>::infinity());

  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  };

  std::size_t size = std::size_t{1} << n;
  detail::parallel_chunks(count, threads, 1, [&](std::size_t lo, std::size_t hi, unsigned tid) {
    std::vector<std::complex<double>> s0(size);
    for (std::size_t sample = lo; sample < hi; ++sample) {
      for (std::size_t x = 0; x < size; ++x) {
        std::uint64_t word = mix(seed * 0x2545f4914f6cdd1dull + sample * 0x100000001b3ull + (x >> 6));
        s0[x] = ((word >> (x & 63)) & 1u) ? -1.0 : 1.0;
      }
      double best = 0;
      detail::scan_assignments<std::complex<double>>(
          n, TransformSet::IHN, s0,
          [&](const std::vector<Kernel>&, const std::vector<std::complex<double>>& v, int k) {
            double m = 0;
            for (const auto& z : v) m = std::max(m, detail::norm_of(z));
            best = std::max(best, m / std::pow(2.0, k));
          });
      mins[tid] = std::min(mins[tid], best);
      maxs[tid] = std::max(maxs[tid], best);
    }
  });
  double lo = *std::min_element(mins.begin(), mins.end());
  double hi = *std::max_element(maxs.begin(), maxs.end());
  return {lo, hi};
}

}  // namespace lcorbit
