#pragma once

// The unramified local computation in the formal variables T1, T2:
//
//   sum_{x in T+(m), y in T+(n)} S_{(x,0,y*)}(a) S_x(b1) S_y(b2) T1^|x| T2^|y|
//     = prod (1 - a_i b1_s T1)^{-1} prod (1 - a_i^{-1} b2_t T2)^{-1} prod (1 - b1_s b2_t T1 T2)
//
// Modulus characters are tracked as integral powers of Q = q^{1/2}.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/laurent.hpp"
#include "rsv/parallel.hpp"
#include "rsv/rational.hpp"
#include "rsv/schur.hpp"
#include "rsv/series.hpp"
#include "rsv/weights.hpp"

namespace rsv {

/// Satake parameters of pi (alpha), tau_1 (beta1) and the contragredient of tau_2 (beta2).
struct SatakeData {
  std::vector<Rational> alpha, beta1, beta2;
  Rational Q{2};
  int j = 0;

  std::size_t l() const { return alpha.size(); }
  std::size_t m() const { return beta1.size(); }
  std::size_t n() const { return beta2.size(); }
  /// k = l - m - n - 1 - j.
  int k() const { return static_cast<int>(l()) - static_cast<int>(m()) - static_cast<int>(n()) - 1 - j; }

  void validate() const {
    if (m() + n() >= l())
      throw ConfigurationError("SatakeData: need m+n < l (l=" + std::to_string(l()) + ", m=" + std::to_string(m()) +
                               ", n=" + std::to_string(n()) + ")");
    if (j < 0 || k() < 0)
      throw ConfigurationError("SatakeData: need 0 <= j <= l-m-n-1 (j=" + std::to_string(j) + ")");
    if (Q.sign() <= 0) throw ConfigurationError("SatakeData: Q must be positive");
    for (const auto* v : {&alpha, &beta1, &beta2})
      for (const Rational& r : *v)
        if (r.is_zero()) throw ConfigurationError("SatakeData: Satake parameters must be nonzero");
  }
};

/// Ranges for random Satake parameters: numerators in [-num_range, num_range] \ {0}, denominators in [1, den_max].
struct SatakeRange {
  int num_range = 7;
  int den_max = 5;
};

/// Deterministic random nonzero rational; the mapping from engine output is fixed
/// (no std distributions) so reports are reproducible across standard libraries.
inline Rational random_nonzero_rational(std::mt19937_64& rng, SatakeRange range) {
  const auto span = static_cast<std::uint64_t>(2 * range.num_range);
  long num = static_cast<long>(rng() % span) - range.num_range;
  if (num >= 0) ++num;
  const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(range.den_max));
  return {num, den};
}

inline SatakeData random_satake(std::size_t l, std::size_t m, std::size_t n, int j, const Rational& Q,
                                std::mt19937_64& rng, SatakeRange range = {}) {
  if (range.num_range < 1 || range.den_max < 1) throw ConfigurationError("SatakeRange: ranges must be positive");
  SatakeData d;
  d.Q = Q;
  d.j = j;
  for (std::size_t i = 0; i < l; ++i) d.alpha.push_back(random_nonzero_rational(rng, range));
  for (std::size_t i = 0; i < m; ++i) d.beta1.push_back(random_nonzero_rational(rng, range));
  for (std::size_t i = 0; i < n; ++i) d.beta2.push_back(random_nonzero_rational(rng, range));
  d.validate();
  return d;
}

/// sum_i mu_i (N + 1 - 2i), so that delta_{B_N}(varpi^mu) = q^{-this}.
inline long modulus_weight(const GLWeight& mu) {
  const long big_n = static_cast<long>(mu.rank());
  long s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i) s += static_cast<long>(mu[i]) * (big_n + 1 - 2 * static_cast<long>(i + 1));
  return s;
}

/// delta_{B_N}(varpi^mu) as a power of Q = q^{1/2}.
inline HalfPowerScalar delta_B(const GLWeight& mu, std::size_t rank, const Rational& Q) {
  if (mu.rank() != rank) throw RankMismatch("delta_B: weight " + mu.str() + " is not of rank " + std::to_string(rank));
  return {Q, -2 * modulus_weight(mu)};
}

/// delta_{B_N}^{1/2}(varpi^mu).
inline HalfPowerScalar delta_B_half(const GLWeight& mu, std::size_t rank, const Rational& Q) {
  if (mu.rank() != rank) throw RankMismatch("delta_B_half: weight " + mu.str() + " is not of rank " + std::to_string(rank));
  return {Q, -modulus_weight(mu)};
}

/// Normalized unramified Whittaker value: modulus * schur, zero off the dominant chamber.
struct WhittakerValue {
  HalfPowerScalar modulus;
  Rational schur;
  Rational value() const { return schur.is_zero() ? Rational(0) : modulus.value() * schur; }
};

/// W(varpi^mu) = delta^{1/2}(varpi^mu) S_mu(alpha) for dominant mu, else 0.
inline WhittakerValue cs_whittaker(const GLWeight& mu, std::span<const Rational> alpha, const Rational& Q) {
  if (mu.rank() != alpha.size()) throw RankMismatch("cs_whittaker: weight rank differs from Satake rank");
  if (!mu.dominant()) return {HalfPowerScalar(Q, 0), Rational(0)};
  return {delta_B_half(mu, mu.rank(), Q), schur_value(mu, alpha)};
}

/// Tr Sym^e(alpha (x) beta) = h_e of all pairwise products.
inline Rational trace_sym_cauchy(std::span<const Rational> alpha, std::span<const Rational> beta, int e) {
  if (e < 0) throw std::invalid_argument("trace_sym_cauchy: negative degree");
  std::vector<Rational> eig;
  eig.reserve(alpha.size() * beta.size());
  for (const Rational& a : alpha)
    for (const Rational& b : beta) eig.push_back(a * b);
  return detail::complete_homogeneous_values(eig, e)[static_cast<std::size_t>(e)];
}

/// The same trace as sum_{z |- e, l(z) <= min(M,N)} s_z(alpha) s_z(beta).
inline Rational trace_sym_schur(std::span<const Rational> alpha, std::span<const Rational> beta, int e) {
  if (e < 0) throw std::invalid_argument("trace_sym_schur: negative degree");
  Rational total(0);
  for (const Partition& z : enumerate_dominant(std::min(alpha.size(), beta.size()), e))
    total += schur_value(z, alpha) * schur_value(z, beta);
  return total;
}

/// Q-power bookkeeping of one (x, y) summand, before and after cancellation.
/// All exponents are in Q-units; the T-degrees are what survives of |det|^{s_1}, |det|^{s_2}.
struct DeltaBookkeeping {
  long whittaker_l = 0;       // delta_{B_l}^{1/2}(varpi^{(x,0,y*)})
  long whittaker_m = 0;       // delta_{B_m}^{1/2}(varpi^x)
  long whittaker_n = 0;       // delta_{B_n}^{1/2}(varpi^y)
  long measure = 0;           // delta_{B_{m+n}}^{-1}(varpi^{(x,y*)})
  long det_shifts = 0;        // |det varpi^x|^{(n-1)/2-j} |det varpi^y|^{(m-1)/2-k}
  long t_normalization = 0;   // q^{-s_1|x|} q^{-s_2|y|} rewritten as T1^|x| T2^|y| times this
  int t1_degree = 0;
  int t2_degree = 0;

  long residual() const { return whittaker_l + whittaker_m + whittaker_n + measure + det_shifts + t_normalization; }
};

inline DeltaBookkeeping delta_bookkeeping(const Partition& x, const Partition& y, std::size_t l, std::size_t m,
                                          std::size_t n, int j) {
  if (m + n >= l) throw ConfigurationError("delta_bookkeeping: need m+n < l");
  const int k = static_cast<int>(l) - static_cast<int>(m) - static_cast<int>(n) - 1 - j;
  if (j < 0 || k < 0) throw ConfigurationError("delta_bookkeeping: need 0 <= j <= l-m-n-1");
  const GLWeight mid = central_weight(x, y, l, m, n);
  std::vector<int> xy = x.padded(m);
  const GLWeight ys = star_dual(y, n);
  xy.insert(xy.end(), ys.entries().begin(), ys.entries().end());
  const long ax = x.size(), ay = y.size();
  const long mm = static_cast<long>(m), nn = static_cast<long>(n);

  DeltaBookkeeping b;
  b.whittaker_l = -modulus_weight(mid);
  b.whittaker_m = -modulus_weight(GLWeight::from_partition(x, m));
  b.whittaker_n = -modulus_weight(GLWeight::from_partition(y, n));
  b.measure = 2 * modulus_weight(GLWeight(xy));
  // q^{-|x|((n-1)/2 - j)} q^{-|y|((m-1)/2 - k)}
  b.det_shifts = -ax * (nn - 1 - 2L * j) - ay * (mm - 1 - 2L * k);
  // T1 = q^{-(s_1 + (k-j)/2)}, T2 = q^{-(s_2 + (j-k)/2)}
  b.t_normalization = ax * (k - j) + ay * (j - k);
  b.t1_degree = static_cast<int>(ax);
  b.t2_degree = static_cast<int>(ay);
  return b;
}

/// True iff every residual power of q cancels, leaving exactly T1^|x| T2^|y|.
inline bool delta_cancellation_check(const Partition& x, const Partition& y, std::size_t l, std::size_t m,
                                     std::size_t n, int j, const Rational& Q) {
  const DeltaBookkeeping b = delta_bookkeeping(x, y, l, m, n, j);
  const HalfPowerScalar residual(Q, b.residual());
  return b.residual() == 0 && residual.value().is_one() && b.t1_degree == x.size() && b.t2_degree == y.size();
}

struct SeriesCaps {
  int cap1 = 5;
  int cap2 = 5;
};

namespace detail {

/// Fills every (a, b) cell of a series with cell(a, b), in parallel over cells.
template <class Cell>
RationalSeries fill_series(SeriesCaps caps, int workers, Cell&& cell) {
  const std::size_t cols = static_cast<std::size_t>(caps.cap2 + 1);
  const std::size_t total = static_cast<std::size_t>(caps.cap1 + 1) * cols;
  std::vector<Rational> values(total);
  parallel_for(total, workers, [&](std::size_t i) {
    values[i] = cell(static_cast<int>(i / cols), static_cast<int>(i % cols));
  });
  RationalSeries s(caps.cap1, caps.cap2);
  for (std::size_t i = 0; i < total; ++i) s.at(static_cast<int>(i / cols), static_cast<int>(i % cols)) = values[i];
  return s;
}

}  // namespace detail

/// Sum over x, y of S_{(x,0,y*)}(alpha) S_x(beta1) S_y(beta2) T1^|x| T2^|y|.
inline RationalSeries zeta_lhs_series(const SatakeData& d, SeriesCaps caps, int workers = 1) {
  d.validate();
  return detail::fill_series(caps, workers, [&](int a, int b) {
    Rational c(0);
    for (const Partition& x : enumerate_dominant(d.m(), a)) {
      const Rational sx = schur_value(x, d.beta1);
      for (const Partition& y : enumerate_dominant(d.n(), b)) {
        c += schur_value(central_weight(x, y, d.l(), d.m(), d.n()), d.alpha) * sx * schur_value(y, d.beta2);
      }
    }
    return c;
  });
}

/// The same series assembled before the modulus characters cancel: Whittaker values of
/// pi, tau_1, tau_2~, the measure factor and the |det| shifts, all as explicit powers of Q.
inline RationalSeries zeta_lhs_series_whittaker(const SatakeData& d, SeriesCaps caps, int workers = 1) {
  d.validate();
  const std::size_t l = d.l(), m = d.m(), n = d.n();
  return detail::fill_series(caps, workers, [&](int a, int b) {
    Rational c(0);
    for (const Partition& x : enumerate_dominant(m, a)) {
      const WhittakerValue w1 = cs_whittaker(GLWeight::from_partition(x, m), d.beta1, d.Q);
      for (const Partition& y : enumerate_dominant(n, b)) {
        const WhittakerValue w = cs_whittaker(central_weight(x, y, l, m, n), d.alpha, d.Q);
        const WhittakerValue w2 = cs_whittaker(GLWeight::from_partition(y, n), d.beta2, d.Q);
        std::vector<int> xy = x.padded(m);
        const GLWeight ys = star_dual(y, n);
        xy.insert(xy.end(), ys.entries().begin(), ys.entries().end());
        const HalfPowerScalar measure = delta_B(GLWeight(xy), m + n, d.Q).inverse();
        const DeltaBookkeeping bk = delta_bookkeeping(x, y, l, m, n, d.j);
        const HalfPowerScalar shifts(d.Q, bk.det_shifts + bk.t_normalization);
        c += w.value() * w1.value() * w2.value() * (measure * shifts).value();
      }
    }
    return c;
  });
}

/// L(pi x tau_1) L(pi~ x tau_2~) / L(tau_1 x tau_2~) expanded in T1, T2.
inline RationalSeries zeta_rhs_series(const SatakeData& d, SeriesCaps caps) {
  d.validate();
  RationalSeries s = RationalSeries::constant(caps.cap1, caps.cap2, Rational(1));
  for (const Rational& a : d.alpha) {
    for (const Rational& b1 : d.beta1) s *= geom_inverse(a * b1, 1, 0, caps.cap1, caps.cap2);
    for (const Rational& b2 : d.beta2) s *= geom_inverse(a.inverse() * b2, 0, 1, caps.cap1, caps.cap2);
  }
  for (const Rational& b1 : d.beta1)
    for (const Rational& b2 : d.beta2)
      s *= one_minus_monomial(b1 * b2, 1, 1, caps.cap1, caps.cap2, Rational(1), Rational(0));
  return s;
}

struct UnramifiedReport {
  bool equal = false;
  std::optional<std::pair<int, int>> first_mismatch;
  RationalSeries lhs{0, 0};
  RationalSeries rhs{0, 0};
  double lhs_seconds = 0;
  double rhs_seconds = 0;
};

/// Coefficientwise exact comparison of the two sides up to the caps.
inline UnramifiedReport verify_unramified(const SatakeData& d, SeriesCaps caps, int workers = 1) {
  using clock = std::chrono::steady_clock;
  UnramifiedReport rep;
  auto t0 = clock::now();
  rep.lhs = zeta_lhs_series(d, caps, workers);
  auto t1 = clock::now();
  rep.rhs = zeta_rhs_series(d, caps);
  auto t2 = clock::now();
  rep.lhs_seconds = std::chrono::duration<double>(t1 - t0).count();
  rep.rhs_seconds = std::chrono::duration<double>(t2 - t1).count();
  rep.first_mismatch = rep.lhs.first_mismatch(rep.rhs);
  rep.equal = !rep.first_mismatch.has_value();
  return rep;
}

inline constexpr std::size_t kDefaultSymbolicMaxVars = 7;

struct UnramifiedSymbolicReport {
  bool equal = false;
  std::optional<std::pair<int, int>> first_mismatch;
  SymbolicSeries lhs{0, 0};
  SymbolicSeries rhs{0, 0};
};

/// The identity with alpha, beta1, beta2 kept as l + m + n independent variables
/// (alpha -> x_1..x_l, beta1 -> next m, beta2 -> last n). Refused above max_vars.
inline UnramifiedSymbolicReport verify_unramified_symbolic(std::size_t l, std::size_t m, std::size_t n,
                                                           SeriesCaps caps,
                                                           std::size_t max_vars = kDefaultSymbolicMaxVars) {
  if (m + n >= l) throw ConfigurationError("verify_unramified_symbolic: need m+n < l");
  const std::size_t nv = l + m + n;
  if (nv > max_vars)
    throw ConfigurationError("verify_unramified_symbolic: l+m+n = " + std::to_string(nv) + " exceeds symbolic cap " +
                             std::to_string(max_vars) + "; use rational Satake points");
  const LaurentPolynomial zero(nv), one = LaurentPolynomial::one(nv);

  UnramifiedSymbolicReport rep;
  rep.lhs = SymbolicSeries(caps.cap1, caps.cap2, zero);
  for (int a = 0; a <= caps.cap1; ++a) {
    for (const Partition& x : enumerate_dominant(m, a)) {
      const LaurentPolynomial sx = schur_jacobi_trudi(x, m).poly.embedded(nv, l);
      for (int b = 0; b <= caps.cap2; ++b) {
        for (const Partition& y : enumerate_dominant(n, b)) {
          const LaurentPolynomial sy = schur_jacobi_trudi(y, n).poly.embedded(nv, l + m);
          const LaurentPolynomial sa = schur_glweight(central_weight(x, y, l, m, n), l).embedded(nv, 0);
          rep.lhs.at(a, b) += sa * sx * sy;
        }
      }
    }
  }

  auto var = [&](std::size_t i, int power) {
    Exponent e(nv, 0);
    e[i] = power;
    return LaurentPolynomial::monomial(std::move(e), Rational(1));
  };
  rep.rhs = SymbolicSeries::constant(caps.cap1, caps.cap2, one, zero);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t s = 0; s < m; ++s)
      rep.rhs *= geom_inverse<LaurentPolynomial>(var(i, 1) * var(l + s, 1), 1, 0, caps.cap1, caps.cap2, one, zero);
    for (std::size_t t = 0; t < n; ++t)
      rep.rhs *= geom_inverse<LaurentPolynomial>(var(i, -1) * var(l + m + t, 1), 0, 1, caps.cap1, caps.cap2, one, zero);
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < n; ++t)
      rep.rhs *= one_minus_monomial<LaurentPolynomial>(var(l + s, 1) * var(l + m + t, 1), 1, 1, caps.cap1, caps.cap2,
                                                       one, zero);
  rep.first_mismatch = rep.lhs.first_mismatch(rep.rhs);
  rep.equal = !rep.first_mismatch.has_value();
  return rep;
}

}  // namespace rsv
