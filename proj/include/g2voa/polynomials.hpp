#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2voa/rational.hpp"
#include "g2voa/rootsys.hpp"

namespace g2voa {

// --- univariate polynomials over Q ----------------------------------------

struct PolyQ {
  std::vector<Q> c;  // ascending powers, no trailing zeros

  PolyQ() = default;
  explicit PolyQ(Q constant) {
    if (constant != 0) c.push_back(std::move(constant));
  }

  static PolyQ var() {
    PolyQ p;
    p.c = {Q(0), Q(1)};
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Q& leading() const { return c.back(); }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c == b.c; }

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    PolyQ r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Q(0));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    PolyQ r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Q(0));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    PolyQ r;
    r.c.assign(a.c.size() + b.c.size() - 1, Q(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  Q eval(const Q& x) const {
    Q acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  PolyQ derivative() const {
    PolyQ r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * Q(i));
    r.trim();
    return r;
  }

  PolyQ monic() const {
    if (is_zero()) return {};
    PolyQ r = *this;
    Q lead = r.leading();
    for (auto& x : r.c) x /= lead;
    return r;
  }

  // Quotient and remainder of exact division over Q.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyQ rem = *this, quot;
    quot.c.assign(
        std::max<size_t>(rem.c.size(), d.c.size()) - d.c.size() + 1, Q(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      Q factor = rem.leading() / d.leading();
      int shift = rem.degree() - d.degree();
      quot.c[shift] += factor;
      for (size_t i = 0; i < d.c.size(); ++i)
        rem.c[i + shift] -= factor * d.c[i];
      rem.trim();
    }
    quot.trim();
    return {quot, rem};
  }
};

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline PolyQ squarefree_part(const PolyQ& p) {
  if (p.is_zero() || p.degree() == 0) return p.monic();
  PolyQ g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

// All rational roots of p (without multiplicity), found by the rational root
// theorem on the primitive integer form; `unresolved` carries the remaining
// rational-root-free factor when p does not split over Q.
struct RationalRoots {
  std::vector<Q> roots;
  std::optional<PolyQ> unresolved;
};

namespace detail {
inline std::vector<Int> positive_divisors(Int n) {
  n = boost::multiprecision::abs(n);
  std::vector<Int> out;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

inline RationalRoots rational_roots(PolyQ p) {
  RationalRoots out;
  if (p.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  // strip x^k
  size_t low = 0;
  while (low < p.c.size() && p.c[low] == 0) ++low;
  if (low > 0) {
    out.roots.push_back(Q(0));
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(low));
  }
  while (p.degree() >= 1) {
    // primitive integer form
    Int den(1);
    for (const Q& x : p.c) den = lcm_int(den, q_den(x));
    std::vector<Int> ic;
    for (const Q& x : p.c) ic.push_back(q_num(x) * (den / q_den(x)));
    std::optional<Q> found;
    for (const Int& pn : detail::positive_divisors(ic.front())) {
      if (found) break;
      for (const Int& qd : detail::positive_divisors(ic.back())) {
        Q cand(pn, qd);
        if (p.eval(cand) == 0) {
          found = cand;
          break;
        }
        if (p.eval(-cand) == 0) {
          found = -cand;
          break;
        }
      }
    }
    if (!found) break;
    out.roots.push_back(*found);
    // deflate to full multiplicity
    PolyQ lin;
    lin.c = {-*found, Q(1)};
    while (true) {
      auto [quot, rem] = p.divmod(lin);
      if (!rem.is_zero()) break;
      p = quot;
      if (p.degree() < 1) break;
    }
  }
  if (p.degree() >= 1) out.unresolved = p.monic();
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// --- polynomials on the Cartan subalgebra ----------------------------------

// Exact polynomial in the two coordinates (H10, H01), expanded canonical
// form. Substitution H_ij -> c10*h10 + c01*h01 through the coroot expansion
// is the only entry point for non-simple coroots.
struct CartanPoly {
  // (deg of h10, deg of h01) -> coefficient
  std::map<std::pair<int, int>, Q> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const CartanPoly& a, const CartanPoly& b) {
    return a.terms == b.terms;
  }

  void add_term(int a, int b, const Q& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  static CartanPoly constant(const Q& c) {
    CartanPoly p;
    p.add_term(0, 0, c);
    return p;
  }

  // The linear polynomial of H_gamma for any root gamma.
  static CartanPoly coroot_poly(Root gamma) {
    CorootExpansion e = coroot_expansion(gamma);
    CartanPoly p;
    p.add_term(1, 0, Q(e.c10));
    p.add_term(0, 1, Q(e.c01));
    return p;
  }

  friend CartanPoly operator+(const CartanPoly& x, const CartanPoly& y) {
    CartanPoly r = x;
    for (const auto& [k, c] : y.terms) r.add_term(k.first, k.second, c);
    return r;
  }
  friend CartanPoly operator-(const CartanPoly& x, const CartanPoly& y) {
    CartanPoly r = x;
    for (const auto& [k, c] : y.terms) r.add_term(k.first, k.second, -c);
    return r;
  }
  friend CartanPoly operator*(const CartanPoly& x, const CartanPoly& y) {
    CartanPoly r;
    for (const auto& [k1, c1] : x.terms)
      for (const auto& [k2, c2] : y.terms)
        r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }
  friend CartanPoly operator*(const CartanPoly& x, const Q& c) {
    CartanPoly r;
    for (const auto& [k, cc] : x.terms) r.add_term(k.first, k.second, cc * c);
    return r;
  }
  friend CartanPoly operator-(const CartanPoly& x) { return x * Q(-1); }

  Q eval(const FiniteWeight& mu) const {
    Q acc(0);
    for (const auto& [k, c] : terms) {
      Q t = c;
      for (int i = 0; i < k.first; ++i) t *= mu.mu10;
      for (int i = 0; i < k.second; ++i) t *= mu.mu01;
      acc += t;
    }
    return acc;
  }

  bool univariate_in_h10() const {
    for (const auto& [k, c] : terms)
      if (k.second != 0) return false;
    return true;
  }

  PolyQ as_unipoly_h10() const {
    PolyQ p;
    for (const auto& [k, c] : terms) {
      if (k.second != 0)
        throw std::domain_error("polynomial not univariate in h10");
      if (p.c.size() <= static_cast<size_t>(k.first))
        p.c.resize(static_cast<size_t>(k.first) + 1, Q(0));
      p.c[static_cast<size_t>(k.first)] += c;
    }
    p.trim();
    return p;
  }

  // Substitute h10 -> value; result is univariate in h01.
  PolyQ substitute_h10(const Q& value) const {
    PolyQ p;
    for (const auto& [k, c] : terms) {
      Q t = c;
      for (int i = 0; i < k.first; ++i) t *= value;
      if (t == 0) continue;
      if (p.c.size() <= static_cast<size_t>(k.second))
        p.c.resize(static_cast<size_t>(k.second) + 1, Q(0));
      p.c[static_cast<size_t>(k.second)] += t;
    }
    p.trim();
    return p;
  }

  // Canonical text: terms in descending (total degree, h10 degree) order,
  // "c * h10^a * h01^b" with trivial exponents elided.
  std::string to_string() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, Q>> sorted(terms.begin(),
                                                          terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      int tx = x.first.first + x.first.second;
      int ty = y.first.first + y.first.second;
      if (tx != ty) return tx > ty;
      return x.first.first > y.first.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [k, c] : sorted) {
      if (!first) s += " + ";
      first = false;
      s += q_to_string(c);
      if (k.first > 0) {
        s += " * h10";
        if (k.first > 1) s += "^" + std::to_string(k.first);
      }
      if (k.second > 0) {
        s += " * h01";
        if (k.second > 1) s += "^" + std::to_string(k.second);
      }
    }
    return s;
  }
};

// Falling factorial product base*(base-1)*...*(base-m+1).
inline CartanPoly falling_factorial(const CartanPoly& base, int m) {
  CartanPoly r = CartanPoly::constant(Q(1));
  for (int t = 0; t < m; ++t)
    r = r * (base - CartanPoly::constant(Q(t)));
  return r;
}

// C such that lhs == C * rhs exactly, when such a nonzero constant exists.
inline std::optional<Q> proportionality_constant(const CartanPoly& lhs,
                                                 const CartanPoly& rhs) {
  if (rhs.is_zero()) return std::nullopt;
  if (lhs.is_zero()) return std::nullopt;
  const auto& [k, c] = *rhs.terms.begin();
  auto it = lhs.terms.find(k);
  if (it == lhs.terms.end()) return std::nullopt;
  Q ratio = it->second / c;
  if (!(lhs == rhs * ratio)) return std::nullopt;
  return ratio;
}

}  // namespace g2voa
