#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "g2voa/rational.hpp"

namespace g2voa {

// Element of the G2 root lattice, written ca*alpha + cb*beta where alpha is
// the short simple root and beta the long one. General lattice elements are
// allowed; is_root() singles out the twelve roots.
struct Root {
  int ca = 0;
  int cb = 0;

  friend constexpr bool operator==(Root x, Root y) {
    return x.ca == y.ca && x.cb == y.cb;
  }
  friend constexpr bool operator<(Root x, Root y) {
    return x.ca != y.ca ? x.ca < y.ca : x.cb < y.cb;
  }
  constexpr Root operator+(Root o) const { return {ca + o.ca, cb + o.cb}; }
  constexpr Root operator-(Root o) const { return {ca - o.ca, cb - o.cb}; }
  constexpr Root operator-() const { return {-ca, -cb}; }
};

inline constexpr Root kAlpha{1, 0};
inline constexpr Root kBeta{0, 1};
inline constexpr Root kTheta{3, 2};  // highest root, 3*alpha + 2*beta

// The six positive roots in height order; the index is the canonical root
// label used by the Chevalley basis (E_i / F_i <-> kPositiveRoots[i]).
inline constexpr std::array<Root, 6> kPositiveRoots{
    Root{1, 0}, Root{0, 1}, Root{1, 1}, Root{2, 1}, Root{3, 1}, Root{3, 2}};

constexpr bool is_positive_root(Root r) {
  for (Root p : kPositiveRoots)
    if (p == r) return true;
  return false;
}

constexpr bool is_root(Root r) {
  return is_positive_root(r) || is_positive_root(-r);
}

inline int positive_root_index(Root r) {
  for (int i = 0; i < 6; ++i)
    if (kPositiveRoots[i] == r) return i;
  throw std::domain_error("not a positive root");
}

inline std::string root_to_string(Root r) {
  return std::to_string(r.ca) + "a+" + std::to_string(r.cb) + "b";
}

// Invariant bilinear form on the root lattice, normalized so that
// (theta, theta) = 2. Gram matrix on (alpha, beta): [[2/3, -1], [-1, 2]].
inline Q inner_product(Root x, Root y) {
  return Q(2, 3) * (x.ca * y.ca) - Q(x.ca * y.cb + x.cb * y.ca) +
         Q(2) * (x.cb * y.cb);
}

// Simple reflections acting on the root lattice.
constexpr Root reflect_alpha(Root x) {
  // s_a(x) = x - <x, alpha^vee> alpha, with <i a + j b, a^vee> = 2i - 3j
  return {x.ca - (2 * x.ca - 3 * x.cb), x.cb};
}
constexpr Root reflect_beta(Root x) {
  return {x.ca, x.cb - (-x.ca + 2 * x.cb)};
}

// Expansion of the coroot H_gamma = gamma^vee in the simple coroots:
// H_gamma = c10*H10 + c01*H01.
struct CorootExpansion {
  int c10 = 0;
  int c01 = 0;
};

inline CorootExpansion coroot_expansion(Root gamma) {
  if (!is_root(gamma)) throw std::domain_error("coroot_expansion: not a root");
  // gamma^vee = 2 t_gamma / (gamma,gamma) and t_{i a + j b} = i t_a + j t_b
  // with t_a = (a,a)/2 H10, t_b = (b,b)/2 H01.
  Q len = inner_product(gamma, gamma);
  Q c10 = Q(gamma.ca) * inner_product(kAlpha, kAlpha) / len;
  Q c01 = Q(gamma.cb) * inner_product(kBeta, kBeta) / len;
  if (!is_integer(c10) || !is_integer(c01))
    throw std::logic_error("coroot expansion is not integral");
  return {static_cast<int>(q_num(c10)), static_cast<int>(q_num(c01))};
}

// A weight of the finite algebra, stored by its pairing values
// (mu(H10), mu(H01)) on the simple coroots.
struct FiniteWeight {
  Q mu10;
  Q mu01;

  friend bool operator==(const FiniteWeight& x, const FiniteWeight& y) {
    return x.mu10 == y.mu10 && x.mu01 == y.mu01;
  }
  friend bool operator<(const FiniteWeight& x, const FiniteWeight& y) {
    return x.mu10 != y.mu10 ? x.mu10 < y.mu10 : x.mu01 < y.mu01;
  }
  FiniteWeight operator+(const FiniteWeight& o) const {
    return {mu10 + o.mu10, mu01 + o.mu01};
  }
  FiniteWeight operator-(const FiniteWeight& o) const {
    return {mu10 - o.mu10, mu01 - o.mu01};
  }
};

inline const FiniteWeight kRhoBar{1, 1};    // sum of fundamental weights
inline const FiniteWeight kOmega1{1, 0};
inline const FiniteWeight kOmega2{0, 1};

// A root-lattice element viewed as a weight (its pairing values).
inline FiniteWeight root_as_weight(Root r) {
  return {Q(2 * r.ca - 3 * r.cb), Q(-r.ca + 2 * r.cb)};
}

// <mu, gamma^vee> for a root gamma, evaluated through the coroot expansion.
inline Q pairing(const FiniteWeight& mu, Root gamma) {
  if (!is_root(gamma)) throw std::domain_error("pairing: gamma not a root");
  CorootExpansion e = coroot_expansion(gamma);
  return Q(e.c10) * mu.mu10 + Q(e.c01) * mu.mu01;
}

// (mu, gamma) for a root gamma, recovered from the pairing:
// (mu, gamma) = <mu, gamma^vee> (gamma,gamma)/2.
inline Q weight_root_product(const FiniteWeight& mu, Root gamma) {
  return pairing(mu, gamma) * inner_product(gamma, gamma) / 2;
}

// Dimension of the irreducible G2-module V(mu) for dominant integral mu,
// by the Weyl dimension formula (product over the six positive roots).
inline Int weyl_dimension(const FiniteWeight& mu) {
  if (!is_integer(mu.mu10) || !is_integer(mu.mu01) || mu.mu10 < 0 ||
      mu.mu01 < 0)
    throw std::domain_error("weyl_dimension: weight not dominant integral");
  Q dim(1);
  FiniteWeight shifted = mu + kRhoBar;
  for (Root gamma : kPositiveRoots)
    dim *= pairing(shifted, gamma) / pairing(kRhoBar, gamma);
  if (!is_integer(dim) || dim <= 0)
    throw std::logic_error("weyl_dimension: non-integral result");
  return q_num(dim);
}

}  // namespace g2voa
