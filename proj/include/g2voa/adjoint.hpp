#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2voa/finite.hpp"
#include "g2voa/polynomials.hpp"
#include "g2voa/serialize.hpp"

namespace g2voa {

// Reduction of a zero-weight element of U(g) modulo U(g)n+. In canonical PBW
// order the E's sit rightmost, so any monomial containing an E factor lies in
// U(g)n+ and is dropped; a zero-weight monomial without E factors has no F
// factors either, so the survivors are pure Cartan monomials H10^a H01^b.
inline CartanPoly reduce_mod_nplus(const FinElem& x) {
  CartanPoly out;
  for (const auto& [mono, coeff] : x.terms) {
    Root w{0, 0};
    for (BasisId b : mono) w = w + weight_of_basis(b);
    if (!(w == Root{0, 0}))
      throw std::domain_error("reduce_mod_nplus: nonzero h-weight monomial");
    bool has_e = false;
    int a = 0, b01 = 0;
    for (BasisId b : mono) {
      if (is_e(b)) {
        has_e = true;
        break;
      }
      if (b == BasisId::H10) ++a;
      if (b == BasisId::H01) ++b01;
    }
    if (has_e) continue;
    if (a + b01 != static_cast<int>(mono.size()))
      throw std::logic_error("zero-weight monomial with F but no E factors");
    out.add_term(a, b01, coeff);
  }
  return out;
}

// (X^n)_L (Y1 ... Ym) expanded by the multinomial rule, checked against
// direct iteration of the derivation. The rule is a test oracle here, never
// the implementation path.
inline bool lemma_b1_property(BasisId x, const std::vector<FinElem>& ys, int n,
                              const FiniteAlgebra& alg) {
  FinElem product = alg.one();
  for (const FinElem& y : ys) product = alg.multiply(product, y);
  FinElem direct = alg.adjoint_pow(x, n, product);

  // all (k1..km) with sum n, weighted by n!/(k1!...km!)
  size_t m = ys.size();
  std::vector<int> k(m, 0);
  FinElem sum;
  std::vector<Q> factorial(static_cast<size_t>(n) + 1, Q(1));
  for (int i = 1; i <= n; ++i)
    factorial[static_cast<size_t>(i)] =
        factorial[static_cast<size_t>(i - 1)] * i;
  // iterate compositions of n into m parts
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos + 1 == m) {
      k[pos] = left;
      Q coeff = factorial[static_cast<size_t>(n)];
      for (size_t i = 0; i < m; ++i)
        coeff /= factorial[static_cast<size_t>(k[i])];
      FinElem term = alg.one();
      for (size_t i = 0; i < m; ++i)
        term = alg.multiply(term, alg.adjoint_pow(x, k[i], ys[i]));
      sum = FiniteAlgebra::add(sum, FiniteAlgebra::scale(term, coeff));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (m == 0) return direct == (n == 0 ? alg.one() : FinElem{});
  rec(0, n);
  return direct == sum;
}

// --- exact linear algebra over the PBW monomial space ----------------------

// Row-reduced subspace of U(g) viewed as a vector space on interned PBW
// monomials; used for adjoint-orbit dimensions and two-sided membership
// tests.
class SubspaceBasis {
 public:
  using SparseVec = std::vector<std::pair<int, Q>>;  // sorted by id

  SparseVec to_vec(const FinElem& x) {
    SparseVec v;
    for (const auto& [mono, c] : x.terms) v.push_back({intern(mono), c});
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  // Reduces x against the basis; inserts the residual when independent.
  // Returns true when the dimension grew.
  bool add(const FinElem& x) { return add_vec(to_vec(x)); }

  bool add_vec(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    Q lead = v.front().second;
    for (auto& [id, c] : v) c /= lead;
    rows_.emplace(v.front().first, std::move(v));
    return true;
  }

  // True iff x lies in the current span.
  bool contains(const FinElem& x) {
    SparseVec v = to_vec(x);
    reduce(v);
    return v.empty();
  }

  size_t size() const { return rows_.size(); }

 private:
  void reduce(SparseVec& v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) return;
      Q factor = v.front().second;
      v = axpy(v, it->second, -factor);
    }
  }

  static SparseVec axpy(const SparseVec& a, const SparseVec& b,
                        const Q& coeff) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back({b[j].first, b[j].second * coeff});
        ++j;
      } else {
        Q c = a[i].second + b[j].second * coeff;
        if (c != 0) out.push_back({a[i].first, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  int intern(const FinMono& m) {
    auto [it, inserted] = ids_.emplace(m, static_cast<int>(ids_.size()));
    return it->second;
  }

  std::map<FinMono, int> ids_;
  std::map<int, SparseVec> rows_;  // pivot id -> reduced row
};

// Dimension of the span of the iterated adjoint orbit of seed under the 14
// basis derivations, closed to stabilization.
inline size_t adjoint_orbit_dimension(const FinElem& seed,
                                      const FiniteAlgebra& alg) {
  SubspaceBasis basis;
  std::vector<FinElem> frontier;
  if (basis.add(seed)) frontier.push_back(seed);
  while (!frontier.empty()) {
    std::vector<FinElem> next;
    for (const FinElem& x : frontier) {
      for (int i = 0; i < kBasisCount; ++i) {
        FinElem y = alg.adjoint(basis_id(i), x);
        if (!y.is_zero() && basis.add(y)) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return basis.size();
}

// Span of F_r * U(g)_{<=d} + U(g)_{<=d} * E_r restricted to one weight space;
// membership oracle for the shift-formula congruences.
class TwoSidedIdealSlice {
 public:
  TwoSidedIdealSlice(Root r, int max_degree, Root weight,
                     const FiniteAlgebra& alg)
      : alg_(alg) {
    BasisId f = f_of(positive_root_index(r));
    BasisId e = e_of(positive_root_index(r));
    FinMono mono;
    enumerate(mono, BasisId::F10, max_degree, weight - weight_of_basis(f),
              [&](const FinMono& m) {
                FinMono fm;
                fm.push_back(f);
                fm.insert(fm.end(), m.begin(), m.end());
                basis_.add(alg_.word(std::move(fm)));
              });
    enumerate(mono, BasisId::F10, max_degree, weight - weight_of_basis(e),
              [&](const FinMono& m) {
                FinMono me = m;
                me.push_back(e);
                basis_.add(alg_.word(std::move(me)));
              });
  }

  bool contains(const FinElem& x) { return basis_.contains(x); }

 private:
  template <class Fn>
  void enumerate(FinMono& mono, BasisId from, int budget, Root target,
                 const Fn& emit) {
    Root w{0, 0};
    for (BasisId b : mono) w = w + weight_of_basis(b);
    if (w == target) emit(mono);
    if (budget == 0) return;
    for (int i = basis_index(from); i < kBasisCount; ++i) {
      mono.push_back(basis_id(i));
      enumerate(mono, basis_id(i), budget - 1, target, emit);
      mono.pop_back();
    }
  }

  const FiniteAlgebra& alg_;
  SubspaceBasis basis_;
};

// --- the zero-weight polynomials of the three levels ------------------------

struct LevelPolynomials {
  CartanPoly q, p1, p2;  // the stated polynomials
  Q c_q, c_p1, c_p2;     // computed proportionality constants
};

// The published target polynomials, per level.
inline CartanPoly target_q(const Q& k) {
  CartanPoly h21 = CartanPoly::coroot_poly(Root{2, 1});
  CartanPoly h01 = CartanPoly::coroot_poly(Root{0, 1});
  CartanPoly h10 = CartanPoly::coroot_poly(Root{1, 0});
  CartanPoly h11 = CartanPoly::coroot_poly(Root{1, 1});
  auto c = [](long long v) { return CartanPoly::constant(Q(v)); };
  if (k == Q(-5, 3)) return h21 * (h21 + c(2));
  if (k == Q(-4, 3))
    return (h21 * (h21 - c(1)) * (h21 - c(2))) * Q(2, 9) +
           h21 * (h21 - c(2)) + (h01 * (h01 + c(2))) * Q(3);
  if (k == Q(-2, 3)) {
    CartanPoly r = falling_factorial(h21, 5) * Q(2, 27);
    r = r + h21 * (h21 - c(2)) * (h21 - c(3)) * (h21 - c(4)) * Q(5, 9);
    r = r + (h21 - c(3)) * (h21 - c(4)) * h01 * (h01 + c(2));
    r = r + h21 * (h21 - c(4)) * (h11 - c(1)) * Q(2);
    r = r + (h21 - c(4)) * h10 * (h10 - c(1)) * Q(2);
    r = r - (h21 - c(4)) * h01 * (h01 + c(1)) * Q(6);
    r = r + (h21 - c(3)) * h01 * (h01 + c(2)) * Q(6);
    return r;
  }
  throw std::domain_error("unsupported level");
}

inline CartanPoly target_p1(const Q& k) {
  CartanPoly h10 = CartanPoly::coroot_poly(Root{1, 0});
  if (k == Q(-5, 3)) return falling_factorial(h10, 2);
  if (k == Q(-4, 3)) return falling_factorial(h10, 3);
  if (k == Q(-2, 3)) return falling_factorial(h10, 5);
  throw std::domain_error("unsupported level");
}

inline CartanPoly target_p2(const Q& k) {
  CartanPoly h11 = CartanPoly::coroot_poly(Root{1, 1});
  CartanPoly h01 = CartanPoly::coroot_poly(Root{0, 1});
  CartanPoly h31 = CartanPoly::coroot_poly(Root{3, 1});
  auto c = [](long long v) { return CartanPoly::constant(Q(v)); };
  if (k == Q(-5, 3))
    return h11 * (h11 - c(1)) * Q(1, 3) + h01 * Q(3);
  if (k == Q(-4, 3))
    return falling_factorial(h11, 3) * Q(2, 9) +
           h01 * CartanPoly::coroot_poly(Root{3, 2}) * Q(6);
  if (k == Q(-2, 3)) {
    CartanPoly r = falling_factorial(h11, 5) * Q(2, 27);
    r = r + (h11 - c(2)) * (h11 - c(3)) * (h11 - c(4)) * h01 * Q(5, 3);
    r = r + (h11 - c(3)) * (h11 - c(4)) * h01 * (h31 + c(2));
    r = r + (h11 - c(4)) * h01 * (h01 - c(1)) * Q(18);
    r = r - (h11 - c(3)) * (h11 - c(4)) * h01 * Q(2);
    r = r + h01 * (h01 - c(1)) * (h31 + c(2)) * Q(18);
    return r;
  }
  throw std::domain_error("unsupported level");
}

// Computes the three adjoint-action expressions of the corresponding lemma on
// the Zhu image of the singular vector, reduces modulo U(g)n+, and matches
// each against the stated polynomial up to a nonzero rational constant.
// Proportionality failure raises with both polynomials printed.
inline LevelPolynomials build_zero_weight_polynomials(const FinElem& zhu_vk,
                                                      const Q& k,
                                                      const FiniteAlgebra& alg) {
  int n = 0;
  if (k == Q(-5, 3)) n = 2;
  else if (k == Q(-4, 3)) n = 3;
  else if (k == Q(-2, 3)) n = 5;
  else throw std::domain_error("unsupported level");

  auto run = [&](BasisId e, BasisId f, int fpow,
                 const CartanPoly& target) -> std::pair<CartanPoly, Q> {
    FinElem x = alg.adjoint_pow(f, fpow, zhu_vk);
    x = alg.adjoint_pow(e, n, std::move(x));
    CartanPoly computed = reduce_mod_nplus(x);
    auto c = proportionality_constant(computed, target);
    if (!c)
      throw std::runtime_error(
          "zero-weight polynomial not proportional to target:\n  computed: " +
          computed.to_string() + "\n  target: " + target.to_string());
    return {target, *c};
  };

  LevelPolynomials out;
  auto [q, cq] = run(BasisId::E21, BasisId::F21, 2 * n, target_q(k));
  auto [p1, cp1] = run(BasisId::E10, BasisId::F31, n, target_p1(k));
  auto [p2, cp2] = run(BasisId::E11, BasisId::F32, n, target_p2(k));
  out.q = q;
  out.p1 = p1;
  out.p2 = p2;
  out.c_q = cq;
  out.c_p1 = cp1;
  out.c_p2 = cp2;
  return out;
}

}  // namespace g2voa
