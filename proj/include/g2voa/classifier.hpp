#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2voa/polynomials.hpp"
#include "g2voa/rootsys.hpp"

namespace g2voa {

// Weight of the affine algebra: level * Lambda0 + finite part + delta part.
// Lambda0(K)=1, Lambda0(h)=0; delta vanishes on the span of the coroots, so
// delta_coeff never enters pairings.
struct AffineWeight {
  Q level;
  FiniteWeight finite;
  Q delta;

  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.level == b.level && a.finite == b.finite && a.delta == b.delta;
  }
  AffineWeight operator+(const AffineWeight& o) const {
    return {level + o.level, finite + o.finite, delta + o.delta};
  }
};

// rho = h^vee Lambda0 + rho_bar = 4 Lambda0 + rho_bar.
inline AffineWeight affine_rho() { return {Q(4), kRhoBar, Q(0)}; }

inline AffineWeight vacuum_weight(const Q& k) {
  return {k, FiniteWeight{Q(0), Q(0)}, Q(0)};
}

// Positive real root gamma = finite_part + m*delta: m > 0 with finite_part in
// Delta, or m = 0 with finite_part in Delta+.
struct RealAffineRoot {
  Root finite_part;
  int m = 0;

  bool valid() const {
    if (m > 0) return is_root(finite_part);
    return m == 0 && is_positive_root(finite_part);
  }
};

inline const std::vector<Root>& all_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> r(kPositiveRoots.begin(), kPositiveRoots.end());
    for (Root p : kPositiveRoots) r.push_back(-p);
    return r;
  }();
  return roots;
}

// <xi, gamma^vee> = (2/(g,g)) m xi.level + <xi.finite, g^vee>.
inline Q pairing_affine(const AffineWeight& xi, const RealAffineRoot& gamma) {
  if (!gamma.valid())
    throw std::domain_error("pairing_affine: invalid positive real root");
  Root g = gamma.finite_part;
  return Q(2) / inner_product(g, g) * Q(gamma.m) * xi.level +
         pairing(xi.finite, g);
}

// Shifted reflection r_gamma . lambda = lambda - <lambda+rho, gamma^vee> gamma,
// with gamma carrying its delta multiple into delta_coeff.
inline AffineWeight shifted_reflection(const RealAffineRoot& gamma,
                                       const AffineWeight& lambda) {
  if (!gamma.valid())
    throw std::domain_error("shifted_reflection: invalid positive real root");
  Q p = pairing_affine(lambda + affine_rho(), gamma);
  AffineWeight out = lambda;
  FiniteWeight g = root_as_weight(gamma.finite_part);
  out.finite.mu10 -= p * g.mu10;
  out.finite.mu01 -= p * g.mu01;
  out.delta -= p * Q(gamma.m);
  return out;
}

struct AdmissibilityReport {
  bool pairing_ok = false;
  bool span_ok = false;
  std::vector<std::string> witness_violations;

  bool admissible() const { return pairing_ok && span_ok; }
};

// Checks the two defining conditions of admissibility for lambda:
//  (i)  <lambda+rho, gamma^vee> not in -Z+ for every positive real coroot;
//       checked for m up to the monotonicity bound m*, beyond which every
//       pairing is strictly positive because its slope in m is
//       (2/(g,g)) * level(lambda+rho) > 0.
//  (ii) the integral coroots span Q Pi^vee; integrality of the pairing is
//       affine in m with rational slope, so its pattern is periodic and two
//       full periods of witnesses decide the span exactly.
inline AdmissibilityReport check_admissible(const AffineWeight& lambda) {
  AffineWeight xi = lambda + affine_rho();
  if (xi.level <= 0)
    throw std::domain_error(
        "check_admissible: shifted level must be positive");

  AdmissibilityReport rep;
  rep.pairing_ok = true;

  // m* = max(0, ceil(max_g |(mu, g)| / level)) + 1
  Q max_ratio(0);
  for (Root g : all_roots()) {
    Q num = q_abs(weight_root_product(xi.finite, g));
    if (num > max_ratio) max_ratio = num;
  }
  long long m_star =
      static_cast<long long>(q_ceil(max_ratio / xi.level)) + 1;

  for (Root g : all_roots()) {
    for (long long m = is_positive_root(g) ? 0 : 1; m <= m_star; ++m) {
      RealAffineRoot gamma{g, static_cast<int>(m)};
      Q p = pairing_affine(xi, gamma);
      if (is_integer(p) && p <= 0) {
        rep.pairing_ok = false;
        rep.witness_violations.push_back(
            "<lambda+rho, (" + root_to_string(g) + " + " + std::to_string(m) +
            "d)^vee> = " + q_to_string(p));
      }
    }
  }

  // Span of the integral coroots g^vee + m (2/(g,g)) K inside
  // span(H10, H01, K); integrality is tested against lambda itself.
  Int period(1);
  for (Root g : all_roots()) {
    Q slope = Q(2) / inner_product(g, g) * xi.level;
    period = lcm_int(period, q_den(slope));
  }
  long long span_m_max = 2 * static_cast<long long>(period);

  std::vector<std::array<Q, 3>> rows;
  for (Root g : all_roots()) {
    for (long long m = is_positive_root(g) ? 0 : 1; m <= span_m_max; ++m) {
      RealAffineRoot gamma{g, static_cast<int>(m)};
      if (!is_integer(pairing_affine(lambda, gamma))) continue;
      CorootExpansion e = coroot_expansion(g);
      rows.push_back({Q(e.c10), Q(e.c01),
                      Q(2) / inner_product(g, g) * Q(m)});
    }
  }
  // rank over Q by Gaussian elimination
  size_t rank = 0;
  for (size_t col = 0; col < 3 && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Q f = rows[r][col] / rows[rank][col];
      for (size_t cc = 0; cc < 3; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  rep.span_ok = (rank == 3);
  if (!rep.span_ok)
    rep.witness_violations.push_back("integral coroots span rank " +
                                     std::to_string(rank) + " < 3");
  return rep;
}

// --- common zeros of the zero-weight polynomials ---------------------------

struct CommonZeroResult {
  std::vector<FiniteWeight> zeros;
  std::vector<std::string> flags;
};

// Exact rational solution of q = p1 = p2 = 0: rational roots of the
// univariate p1 enumerate the mu10 branches; on each branch the gcd of the
// specialized q and p2 carries exactly the common mu01 values. Non-rational
// factors are reported in `flags`, never silently dropped; an empty flag list
// certifies completeness of the rational solution set.
inline CommonZeroResult solve_common_zeros(const CartanPoly& q,
                                           const CartanPoly& p1,
                                           const CartanPoly& p2) {
  if (!p1.univariate_in_h10())
    throw std::domain_error("solve_common_zeros: p1 not univariate in h10");
  CommonZeroResult out;
  RationalRoots r1 = rational_roots(p1.as_unipoly_h10());
  if (r1.unresolved) {
    std::string f = "p1 has non-rational factor of degree " +
                    std::to_string(r1.unresolved->degree());
    out.flags.push_back(f);
  }
  for (const Q& mu10 : r1.roots) {
    PolyQ qs = q.substitute_h10(mu10);
    PolyQ ps = p2.substitute_h10(mu10);
    if (qs.is_zero() && ps.is_zero()) {
      out.flags.push_back("branch mu10=" + q_to_string(mu10) +
                          ": q and p2 both vanish identically");
      continue;
    }
    PolyQ g = qs.is_zero() ? ps.monic() : (ps.is_zero() ? qs.monic()
                                                        : poly_gcd(qs, ps));
    if (g.degree() < 1) continue;
    RationalRoots rg = rational_roots(squarefree_part(g));
    if (rg.unresolved)
      out.flags.push_back("branch mu10=" + q_to_string(mu10) +
                          ": gcd has non-rational factor of degree " +
                          std::to_string(rg.unresolved->degree()));
    for (const Q& mu01 : rg.roots)
      out.zeros.push_back(FiniteWeight{mu10, mu01});
  }
  std::sort(out.zeros.begin(), out.zeros.end());
  return out;
}

inline std::vector<FiniteWeight> dominant_integral_filter(
    const std::vector<FiniteWeight>& weights) {
  std::vector<FiniteWeight> out;
  for (const FiniteWeight& w : weights)
    if (is_integer(w.mu10) && is_integer(w.mu01) && w.mu10 >= 0 && w.mu01 >= 0)
      out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace g2voa
