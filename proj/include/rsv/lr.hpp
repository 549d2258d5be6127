#pragma once

// Littlewood-Richardson coefficients by the tableau rule, Schur product
// expansion, and verifiers for the LR identity
//     c^lambda_{v~, u} = sum_{z in T+(n)} c^u_{x,z} c^v_{y,z}
// and the Schur-polynomial identity it implies.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rsv/errors.hpp"
#include "rsv/hive.hpp"
#include "rsv/laurent.hpp"
#include "rsv/rational.hpp"
#include "rsv/schur.hpp"
#include "rsv/weights.hpp"

namespace rsv {

namespace detail {

// Fills the skew shape u/x row by row, each row right to left (the reverse
// reading order), keeping rows weakly increasing, columns strictly
// increasing and the reading word a lattice word of content z.
class LrTableauCounter {
 public:
  LrTableauCounter(const Partition& x, const Partition& z, const Partition& u)
      : x_(x.padded(u.length())), u_(u.padded(u.length())), z_(z.padded(z.length())) {
    cells_.resize(u_.size());
    for (std::size_t r = 0; r < u_.size(); ++r) cells_[r].assign(static_cast<std::size_t>(u_[r]), 0);
    used_.assign(z_.size() + 1, 0);
  }

  std::uint64_t run() {
    if (u_.empty()) return 1;
    return fill(0, u_[0] - 1);
  }

 private:
  std::uint64_t fill(std::size_t r, int c) {
    if (c < x_[r]) {
      if (r + 1 == u_.size()) return 1;
      return fill(r + 1, u_[r + 1] - 1);
    }
    const auto col = static_cast<std::size_t>(c);
    int hi = static_cast<int>(z_.size());
    if (c + 1 < u_[r]) hi = std::min(hi, cells_[r][col + 1]);
    int lo = 1;
    if (r > 0 && c >= x_[r - 1] && c < u_[r - 1]) lo = cells_[r - 1][col] + 1;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used_[vi] >= z_[vi - 1]) continue;
      if (v > 1 && used_[vi] + 1 > used_[vi - 1]) continue;
      ++used_[vi];
      cells_[r][col] = v;
      total += fill(r, c - 1);
      --used_[vi];
    }
    return total;
  }

  std::vector<int> x_, u_, z_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> used_;  // used_[v] = occurrences of v so far (1-based)
};

}  // namespace detail

/// c^u_{x,z}: number of LR tableaux of shape u/x and content z.
/// Returns 0 on any degree or containment failure.
inline std::uint64_t lr_coeff_tableaux(const Partition& x, const Partition& z, const Partition& u) {
  if (x.size() + z.size() != u.size()) return 0;
  if (!u.contains(x) || !u.contains(z)) return 0;
  return detail::LrTableauCounter(x, z, u).run();
}

/// s_x * s_z = sum_u c^u_{x,z} s_u, listing only the nonzero terms.
inline std::map<Partition, std::uint64_t> schur_product_expand(const Partition& x, const Partition& z) {
  std::map<Partition, std::uint64_t> out;
  for (const Partition& u : enumerate_dominant(x.length() + z.length(), x.size() + z.size())) {
    if (!u.contains(x) || !u.contains(z)) continue;
    if (const auto c = lr_coeff_tableaux(x, z, u); c > 0) out.emplace(u, c);
  }
  return out;
}

struct Ranks {
  std::size_t l = 0, m = 0, n = 0;
};

struct TaoReport {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::vector<Partition> witness_z;
  bool equal = false;
  /// The (x,u,m) and (y,v,n) roles were exchanged because m < n.
  bool swapped = false;
  GLWeight v_tilde;
  GLWeight lambda;
};

/// Checks c^lambda_{v~,u} (hive count in rank l) against sum_z c^u_{x,z} c^v_{y,z} (tableaux).
inline TaoReport verify_tao(Partition x, Partition u, Partition y, Partition v, Ranks r) {
  TaoReport rep;
  if (r.m < r.n) {
    std::swap(x, y);
    std::swap(u, v);
    std::swap(r.m, r.n);
    rep.swapped = true;
  }
  if (r.l < r.m + r.n + 1)
    throw ConfigurationError("verify_tao: need l >= m+n+1 (l=" + std::to_string(r.l) + ", m=" + std::to_string(r.m) +
                             ", n=" + std::to_string(r.n) + ")");
  if (x.length() > r.m || u.length() > r.m)
    throw RankMismatch("verify_tao: x, u must have at most m parts");
  if (y.length() > r.n || v.length() > r.n)
    throw RankMismatch("verify_tao: y, v must have at most n parts");
  const int gap = u.size() - x.size();
  if (gap != v.size() - y.size() || gap < 0)
    throw PreconditionError("verify_tao: need |u|-|x| = |v|-|y| >= 0");

  rep.v_tilde = v_tilde(v, r.l, r.n);
  rep.lambda = lambda_shift(x, y, v.first(), r.l, r.m, r.n);
  // lambda with a negative entry (y_1 > v_1) cannot occur in a product of two partition Schur functions.
  if (rep.lambda.min_entry() >= 0) {
    rep.lhs = count_hives(rep.v_tilde.to_partition(), u, rep.lambda.to_partition(), static_cast<int>(r.l)).count;
  }
  for (const Partition& z : enumerate_dominant(r.n, gap)) {
    const std::uint64_t c = lr_coeff_tableaux(x, z, u) * lr_coeff_tableaux(y, z, v);
    if (c == 0) continue;
    rep.rhs += c;
    rep.witness_z.push_back(z);
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

/// One summand c^u_{x,z} c^v_{y,z} S_{(x,0,y*)} of the expansion.
struct Reduction2Term {
  Partition x, y, z;
  std::uint64_t coeff = 0;
  GLWeight weight;
};

/// Degree-compatible (x, y, z) with nonzero c^u_{x,z} c^v_{y,z}.
inline std::vector<Reduction2Term> reduction2_terms(const Partition& u, const Partition& v, Ranks r) {
  if (r.m + r.n >= r.l) throw ConfigurationError("reduction2: need m+n < l");
  if (u.length() > r.m) throw RankMismatch("reduction2: u must have at most m parts");
  if (v.length() > r.n) throw RankMismatch("reduction2: v must have at most n parts");
  std::vector<Reduction2Term> terms;
  const int max_e = std::min(u.size(), v.size());
  for (int e = 0; e <= max_e; ++e) {
    for (const Partition& z : enumerate_dominant(std::min(r.m, r.n), e)) {
      for (const Partition& x : enumerate_dominant(r.m, u.size() - e)) {
        const std::uint64_t cx = lr_coeff_tableaux(x, z, u);
        if (cx == 0) continue;
        for (const Partition& y : enumerate_dominant(r.n, v.size() - e)) {
          const std::uint64_t cy = lr_coeff_tableaux(y, z, v);
          if (cy == 0) continue;
          terms.push_back({x, y, z, cx * cy, central_weight(x, y, r.l, r.m, r.n)});
        }
      }
    }
  }
  return terms;
}

/// Total multiplicity of each S_{(x,0,y*)} in the expansion.
inline std::map<GLWeight, std::uint64_t> reduction2_weights(const std::vector<Reduction2Term>& terms) {
  std::map<GLWeight, std::uint64_t> out;
  for (const auto& t : terms) out[t.weight] += t.coeff;
  return out;
}

struct Reduction2Report {
  bool equal = false;
  Rational lhs, rhs;
  std::vector<Reduction2Term> terms;
};

/// S_{(u,0)}(a) S_{(0,v*)}(a) == sum c^u_{x,z} c^v_{y,z} S_{(x,0,y*)}(a) at a rational point.
inline Reduction2Report verify_reduction2(const Partition& u, const Partition& v, Ranks r,
                                          std::span<const Rational> point) {
  if (point.size() != r.l) throw RankMismatch("verify_reduction2: point must have l coordinates");
  Reduction2Report rep;
  rep.terms = reduction2_terms(u, v, r);
  rep.lhs = schur_value(GLWeight::from_partition(u, r.l), point) * schur_value(star_dual(v, r.l), point);
  rep.rhs = Rational(0);
  for (const auto& t : rep.terms) rep.rhs += Rational(static_cast<long>(t.coeff)) * schur_value(t.weight, point);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

struct Reduction2SymbolicReport {
  bool equal = false;
  LaurentPolynomial lhs, rhs;
  std::vector<Reduction2Term> terms;
};

/// The same identity as exact Laurent polynomials in l variables.
inline Reduction2SymbolicReport verify_reduction2_symbolic(const Partition& u, const Partition& v, Ranks r) {
  Reduction2SymbolicReport rep;
  rep.terms = reduction2_terms(u, v, r);
  rep.lhs = schur_glweight(GLWeight::from_partition(u, r.l), r.l) * schur_glweight(star_dual(v, r.l), r.l);
  rep.rhs = LaurentPolynomial(r.l);
  for (const auto& [w, c] : reduction2_weights(rep.terms))
    rep.rhs += schur_glweight(w, r.l) * Rational(static_cast<long>(c));
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace rsv
