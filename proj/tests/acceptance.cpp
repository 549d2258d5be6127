// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// All comparisons are exact rational or integer equality; the only numeric
// thresholds are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "oracles.hpp"
#include "rsv/rsv.hpp"
#include "rsv/sweeps.hpp"

namespace {

using namespace rsv;

// Tolerance for every identity: exact equality (difference must be 0).
constexpr long kExactTolerance = 0;
constexpr double kLimitHiveSeconds = 1.0;
constexpr double kLimitSchurIdentitySeconds = 5.0;
constexpr double kLimitTaoSeconds = 60.0;
constexpr double kLimitUnramifiedSeconds = 300.0;
constexpr double kNoLimit = 0.0;

constexpr std::uint64_t kSeed = 20240601;

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Verdict {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit <= 0 || secs < limit;
  const bool pass = v.ok && in_time;
  if (!pass) ++failures;
  std::string budget = limit > 0 ? " (limit " + std::to_string(limit).substr(0, 5) + " s)" : "";
  std::printf("%s criterion %d: %s; %s; %.3f s%s%s\n", pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs,
              budget.c_str(), in_time ? "" : " TIME LIMIT EXCEEDED");
  std::fflush(stdout);
}

Verdict sweep_verdict(const SweepResult& r, const std::string& what) {
  std::string d = std::to_string(r.cases) + " " + what + ", " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) d += " (first: " + r.failures.front() + ")";
  return {r.passed() && r.cases > 0, d};
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(random_nonzero_rational(rng, SatakeRange{}));
  return pt;
}

Verdict hive_worked_example() {
  const Partition x{2, 1}, u{3, 2, 1};
  const auto t = lr_coeff_tableaux(x, x, u);
  const auto h = count_hives(x, x, u, 3).count;
  const auto a = count_anti_hives(x, x, u, 3).count;
  const HiveBoundary b(x, x, u, 3);
  std::set<long> middles;
  bool grid_ok = true;
  for_each_hive(b, HiveMode::hive, [&](const Hive& hv) {
    const long m = hv.at(1, 1);
    middles.insert(m);
    const std::string expected = "3\n3 5\n2 " + std::to_string(m) + " 6\n0 3 5 6";
    grid_ok = grid_ok && hv.grid() == expected;
  });
  std::set<std::vector<long>> anti;
  for_each_hive(b, HiveMode::anti_hive, [&](const Hive& hv) { anti.insert(hv.negated().values()); });
  const bool ok = t == 2 && h == 2 && a == 2 && middles == std::set<long>{4, 5} && grid_ok && anti.size() == 2;
  return {ok, "tableaux=" + std::to_string(t) + " hive=" + std::to_string(h) + " antihive=" + std::to_string(a) +
                  " interior values {" + (middles.count(4) ? "4" : "") + (middles.count(5) ? ",5" : "") + "}" +
                  (grid_ok ? " grids match" : " grid mismatch")};
}

Verdict rank_four_schur_identity() {
  const std::size_t l = 4;
  const LaurentPolynomial lhs = schur_glweight(GLWeight({2, 1, 0, 0}), l) * schur_glweight(GLWeight({0, 0, 0, -2}), l);
  const std::vector<GLWeight> terms{GLWeight({2, 1, 0, -2}), GLWeight({1, 0, 0, 0}), GLWeight({1, 1, 0, -1}),
                                    GLWeight({2, 0, 0, -1})};
  LaurentPolynomial rhs(l);
  for (const auto& w : terms) rhs += schur_glweight(w, l);
  const bool symbolic = (lhs - rhs).is_zero();

  // the LR-driven expansion must produce exactly these four weights
  std::map<GLWeight, std::uint64_t> expected;
  for (const auto& w : terms) expected[w] = 1;
  const bool expansion = reduction2_weights(reduction2_terms(Partition{2, 1}, Partition{2}, {4, 2, 1})) == expected;

  std::mt19937_64 rng(kSeed);
  int agree = 0;
  for (int p = 0; p < 20; ++p) {
    const auto pt = random_point(rng, l);
    Rational r(0);
    for (const auto& w : terms) r += schur_value(w, pt);
    const Rational diff = schur_value(GLWeight({2, 1, 0, 0}), pt) * schur_value(GLWeight({0, 0, 0, -2}), pt) - r;
    if (diff == Rational(kExactTolerance)) ++agree;
  }
  return {symbolic && expansion && agree == 20,
          std::string("symbolic ") + (symbolic ? "equal" : "DIFFERENT") + ", LR expansion " +
              (expansion ? "matches" : "DIFFERS") + ", " + std::to_string(agree) + "/20 random points equal"};
}

Verdict delta_with_oracle() {
  const SweepResult r = delta_sweep(5, 4, Rational(2));
  std::size_t oracle_checked = 0, oracle_bad = 0;
  for (const auto& c : unramified_configs(1, 5))
    for (int sx = 0; sx <= (c.m ? 4 : 0); ++sx)
      for (const Partition& x : enumerate_dominant(c.m, sx))
        for (int sy = 0; sy <= (c.n ? 4 : 0); ++sy)
          for (const Partition& y : enumerate_dominant(c.n, sy)) {
            const auto b = delta_bookkeeping(x, y, c.l, c.m, c.n, c.j);
            std::vector<int> xy = x.padded(c.m);
            const GLWeight ys = star_dual(y, c.n);
            xy.insert(xy.end(), ys.entries().begin(), ys.entries().end());
            const long lroot = oracle::delta_q_half_exponent(central_weight(x, y, c.l, c.m, c.n).entries());
            const long mroot = oracle::delta_q_half_exponent(x.padded(c.m));
            const long nroot = oracle::delta_q_half_exponent(y.padded(c.n));
            const long mnroot = oracle::delta_q_half_exponent(xy);
            ++oracle_checked;
            // delta^{1/2} for three groups, delta^{-1} for the measure
            const long residual = lroot / 2 + mroot / 2 + nroot / 2 - mnroot + b.det_shifts + b.t_normalization;
            if (2 * b.whittaker_l != lroot || 2 * b.whittaker_m != mroot || 2 * b.whittaker_n != nroot ||
                b.measure != -mnroot || residual != kExactTolerance)
              ++oracle_bad;
          }
  Verdict v = sweep_verdict(r, "configurations");
  v.ok = v.ok && oracle_bad == 0 && oracle_checked == r.cases;
  v.detail += ", positive-root oracle " + std::to_string(oracle_checked - oracle_bad) + "/" +
              std::to_string(oracle_checked) + " agree";
  return v;
}

Verdict schur_equivalence() {
  const SweepResult jt = schur_sweep(8, 4);
  const SweepResult dual = dual_sweep(6, 5, 20, kSeed, SatakeRange{});
  Verdict v = sweep_verdict(jt, "Jacobi-Trudi/tableau pairs");
  const Verdict d = sweep_verdict(dual, "dual evaluations");
  return {v.ok && d.ok, v.detail + "; " + d.detail};
}

}  // namespace

int main() {
  std::printf("acceptance run, seed %llu, %d workers, exact equality throughout\n",
              static_cast<unsigned long long>(kSeed), workers());

  criterion(1, "hive worked example c^(3,2,1)_(2,1),(2,1)", kLimitHiveSeconds, hive_worked_example);

  criterion(2, "rank-4 Schur identity S_(2,1,0,0) S_(0,0,0,-2)", kLimitSchurIdentitySeconds,
            rank_four_schur_identity);

  criterion(3, "LR identity sweep (part values <= 3, m,n <= 2, l <= 5, gap <= 3)", kLimitTaoSeconds,
            [] { return sweep_verdict(tao_sweep(3, 2, 5, 3, workers()), "cases"); });

  criterion(4, "unramified zeta identity, l in 2..5, caps (5,5), 5 draws", kLimitUnramifiedSeconds, [] {
    return sweep_verdict(unramified_sweep(2, 5, {5, 5}, 5, kSeed, Rational(2), SatakeRange{}, workers()),
                         "configuration draws");
  });

  criterion(5, "three-way LR agreement (|u| <= 10, <= 4 parts, + 500 random)", kNoLimit, [] {
    auto triples = lr_exhaustive_triples(10, 4);
    const std::size_t exhaustive = triples.size();
    const auto extra = lr_random_triples(500, kSeed);
    triples.insert(triples.end(), extra.begin(), extra.end());
    Verdict v = sweep_verdict(lr_sweep(triples, workers()), "triples");
    v.detail += " (" + std::to_string(exhaustive) + " exhaustive + " + std::to_string(extra.size()) + " random)";
    return v;
  });

  criterion(6, "Cauchy identity (M,N <= 4, e <= 8, 50 draws)", kNoLimit,
            [] { return sweep_verdict(cauchy_sweep(4, 4, 8, 50, kSeed, SatakeRange{}), "traces"); });

  criterion(7, "modulus-character cancellation (l <= 5, |x|,|y| <= 4)", kNoLimit, delta_with_oracle);

  criterion(8, "Schur oracle equivalence and dual symmetry", kNoLimit, schur_equivalence);

  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "NOT ALL PASS", failures);
  return failures == 0 ? 0 : 1;
}
