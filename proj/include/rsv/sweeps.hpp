#pragma once

// Exhaustive and randomized sweeps over the verifiers. Each sweep returns the
// number of cases checked and a description of every failure.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rsv/hive.hpp"
#include "rsv/lr.hpp"
#include "rsv/parallel.hpp"
#include "rsv/schur.hpp"
#include "rsv/unramified.hpp"
#include "rsv/weights.hpp"

namespace rsv {

struct SweepResult {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

using Progress = std::function<void(const std::string&)>;

/// Every admissible ranks triple (l, m, n) with m, n <= max_rank and m+n+1 <= l <= max_l.
inline std::vector<Ranks> admissible_ranks(std::size_t max_rank, std::size_t max_l, std::size_t min_l = 1) {
  std::vector<Ranks> out;
  for (std::size_t l = min_l; l <= max_l; ++l)
    for (std::size_t m = 0; m <= max_rank; ++m)
      for (std::size_t n = 0; n <= max_rank; ++n)
        if (m + n + 1 <= l) out.push_back({l, m, n});
  return out;
}

struct TaoCase {
  Partition x, u, y, v;
  Ranks ranks;
};

/// All (x,u,y,v) with parts <= max_part, x,u in T+(m), y,v in T+(n), equal degree gap in [0, max_gap].
inline std::vector<TaoCase> tao_cases(int max_part, std::size_t max_rank, std::size_t max_l, int max_gap) {
  std::vector<TaoCase> out;
  for (const Ranks& r : admissible_ranks(max_rank, max_l)) {
    const auto big = partitions_in_box(r.m, max_part);
    const auto small = partitions_in_box(r.n, max_part);
    for (const auto& x : big)
      for (const auto& u : big) {
        const int gap = u.size() - x.size();
        if (gap < 0 || gap > max_gap) continue;
        for (const auto& y : small)
          for (const auto& v : small)
            if (v.size() - y.size() == gap) out.push_back({x, u, y, v, r});
      }
  }
  return out;
}

inline SweepResult tao_sweep(int max_part, std::size_t max_rank, std::size_t max_l, int max_gap, int workers = 1) {
  const auto cases = tao_cases(max_part, max_rank, max_l, max_gap);
  const auto ok = parallel_map(cases, workers, [](const TaoCase& c) {
    return verify_tao(c.x, c.u, c.y, c.v, c.ranks).equal ? 1 : 0;
  });
  SweepResult res;
  res.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!ok[i]) {
      const auto& c = cases[i];
      res.failures.push_back("tao x=" + c.x.str() + " u=" + c.u.str() + " y=" + c.y.str() + " v=" + c.v.str() +
                             " l=" + std::to_string(c.ranks.l) + " m=" + std::to_string(c.ranks.m) +
                             " n=" + std::to_string(c.ranks.n));
    }
  return res;
}

/// Uniformly chosen partition of a random size in [min_size, max_size] with at most `parts` parts.
inline Partition random_partition(std::mt19937_64& rng, int min_size, int max_size, std::size_t parts) {
  if (min_size < 0 || max_size < min_size) throw std::invalid_argument("random_partition: bad size range");
  const int s = min_size + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size - min_size + 1));
  const auto all = enumerate_dominant(parts, s);
  return all[rng() % all.size()];
}

struct LrTriple {
  Partition x, z, u;
};

/// Every degree-compatible triple with |u| <= max_size and all parts counts <= max_parts.
inline std::vector<LrTriple> lr_exhaustive_triples(int max_size, std::size_t max_parts) {
  std::vector<LrTriple> out;
  for (int s = 0; s <= max_size; ++s)
    for (const Partition& u : enumerate_dominant(max_parts, s))
      for (int sx = 0; sx <= s; ++sx)
        for (const Partition& x : enumerate_dominant(max_parts, sx))
          for (const Partition& z : enumerate_dominant(max_parts, s - sx)) out.push_back({x, z, u});
  return out;
}

/// Random triples with |u| in (small, small + 6]: half drawn from the support of s_x s_z.
inline std::vector<LrTriple> lr_random_triples(std::size_t count, std::uint64_t seed, int small = 10) {
  std::mt19937_64 rng(seed);
  std::vector<LrTriple> out;
  while (out.size() < count) {
    const Partition x = random_partition(rng, std::min(4, std::max(1, small - 2)), std::max(1, small - 2), 4);
    const int zmin = std::max(1, small + 1 - x.size());
    const Partition z = random_partition(rng, zmin, zmin + 5, 4);
    const std::size_t rows = x.length() + z.length();
    if (rng() % 2 == 0) {
      const auto support = schur_product_expand(x, z);
      auto it = support.begin();
      std::advance(it, static_cast<long>(rng() % support.size()));
      out.push_back({x, z, it->first});
    } else {
      const auto all = enumerate_dominant(rows, x.size() + z.size());
      out.push_back({x, z, all[rng() % all.size()]});
    }
  }
  return out;
}

struct LrCounts {
  std::uint64_t tableaux = 0, hive = 0, antihive = 0;
  bool agree() const { return tableaux == hive && hive == antihive; }
};

inline LrCounts lr_three_way(const LrTriple& t) {
  const int n = default_hive_size(t.x, t.z, t.u);
  return {lr_coeff_tableaux(t.x, t.z, t.u), count_hives(t.x, t.z, t.u, n).count,
          count_anti_hives(t.x, t.z, t.u, n).count};
}

inline SweepResult lr_sweep(const std::vector<LrTriple>& triples, int workers = 1) {
  const auto counts = parallel_map(triples, workers, lr_three_way);
  SweepResult res;
  res.cases = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i)
    if (!counts[i].agree())
      res.failures.push_back("lr x=" + triples[i].x.str() + " z=" + triples[i].z.str() + " u=" + triples[i].u.str() +
                             " tableaux=" + std::to_string(counts[i].tableaux) + " hive=" +
                             std::to_string(counts[i].hive) + " antihive=" + std::to_string(counts[i].antihive));
  return res;
}

struct UnramifiedConfig {
  std::size_t l, m, n;
  int j;
};

/// Every admissible (l, m, n, j) with l in [min_l, max_l].
inline std::vector<UnramifiedConfig> unramified_configs(std::size_t min_l, std::size_t max_l) {
  std::vector<UnramifiedConfig> out;
  for (std::size_t l = min_l; l <= max_l; ++l)
    for (std::size_t m = 0; m < l; ++m)
      for (std::size_t n = 0; m + n < l; ++n)
        for (int j = 0; j <= static_cast<int>(l - m - n - 1); ++j) out.push_back({l, m, n, j});
  return out;
}

inline SweepResult unramified_sweep(std::size_t min_l, std::size_t max_l, SeriesCaps caps, int draws,
                                    std::uint64_t seed, const Rational& Q, SatakeRange range, int workers = 1,
                                    const Progress& progress = {}) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  for (const auto& c : unramified_configs(min_l, max_l)) {
    for (int d = 0; d < draws; ++d) {
      const SatakeData data = random_satake(c.l, c.m, c.n, c.j, Q, rng, range);
      const auto rep = verify_unramified(data, caps, workers);
      ++res.cases;
      if (!rep.equal)
        res.failures.push_back("unramified l=" + std::to_string(c.l) + " m=" + std::to_string(c.m) +
                               " n=" + std::to_string(c.n) + " j=" + std::to_string(c.j) + " draw=" +
                               std::to_string(d) + " mismatch at (" + std::to_string(rep.first_mismatch->first) +
                               "," + std::to_string(rep.first_mismatch->second) + ")");
    }
    if (progress)
      progress("unramified l=" + std::to_string(c.l) + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
               " j=" + std::to_string(c.j) + " done");
  }
  return res;
}

inline SweepResult cauchy_sweep(std::size_t max_m, std::size_t max_n, int max_e, int draws, std::uint64_t seed,
                                SatakeRange range) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t mm = 1; mm <= max_m; ++mm)
    for (std::size_t nn = 1; nn <= max_n; ++nn)
      for (int d = 0; d < draws; ++d) {
        std::vector<Rational> a, b;
        for (std::size_t i = 0; i < mm; ++i) a.push_back(random_nonzero_rational(rng, range));
        for (std::size_t i = 0; i < nn; ++i) b.push_back(random_nonzero_rational(rng, range));
        for (int e = 0; e <= max_e; ++e) {
          ++res.cases;
          if (trace_sym_cauchy(a, b, e) != trace_sym_schur(a, b, e))
            res.failures.push_back("cauchy M=" + std::to_string(mm) + " N=" + std::to_string(nn) +
                                   " e=" + std::to_string(e) + " draw=" + std::to_string(d));
        }
      }
  return res;
}

inline SweepResult delta_sweep(std::size_t max_l, int max_size, const Rational& Q) {
  SweepResult res;
  for (const auto& c : unramified_configs(1, max_l))
    for (int sx = 0; sx <= (c.m ? max_size : 0); ++sx)
      for (const Partition& x : enumerate_dominant(c.m, sx))
        for (int sy = 0; sy <= (c.n ? max_size : 0); ++sy)
          for (const Partition& y : enumerate_dominant(c.n, sy)) {
            ++res.cases;
            if (!delta_cancellation_check(x, y, c.l, c.m, c.n, c.j, Q))
              res.failures.push_back("delta x=" + x.str() + " y=" + y.str() + " l=" + std::to_string(c.l) +
                                     " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
                                     " j=" + std::to_string(c.j));
          }
  return res;
}

/// Jacobi-Trudi against the tableau sum for every |lam| <= max_size in 1..max_vars variables.
inline SweepResult schur_sweep(int max_size, std::size_t max_vars, int oracle_cap = kDefaultOracleCap) {
  SweepResult res;
  for (std::size_t nv = 1; nv <= max_vars; ++nv)
    for (int s = 0; s <= max_size; ++s)
      for (const Partition& lam : enumerate_dominant(nv + 1, s)) {
        ++res.cases;
        if (schur_jacobi_trudi(lam, nv).poly != schur_ssyt(lam, nv, oracle_cap))
          res.failures.push_back("schur lam=" + lam.str() + " N=" + std::to_string(nv));
      }
  return res;
}

inline SweepResult dual_sweep(int max_size, std::size_t max_l, int points, std::uint64_t seed, SatakeRange range) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t l = 1; l <= max_l; ++l)
    for (int s = 0; s <= max_size; ++s)
      for (const Partition& v : enumerate_dominant(l, s))
        for (int p = 0; p < points; ++p) {
          std::vector<Rational> pt;
          for (std::size_t i = 0; i < l; ++i) pt.push_back(random_nonzero_rational(rng, range));
          ++res.cases;
          if (!schur_dual_check(v, l, pt))
            res.failures.push_back("dual v=" + v.str() + " l=" + std::to_string(l) + " point=" + std::to_string(p));
        }
  return res;
}

}  // namespace rsv
