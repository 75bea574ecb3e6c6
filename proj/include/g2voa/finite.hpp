#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "g2voa/affine.hpp"
#include "g2voa/chevalley.hpp"
#include "g2voa/pbw.hpp"

namespace g2voa {

// U(g): the mode-0 specialization of the affine engine, plain rational
// coefficients and no central term. Canonical PBW order is the basis
// enumeration itself: F's < H's < E's.
struct FiniteCtx {
  using Gen = BasisId;
  using Coeff = Q;

  const StructureTable* table;

  void bracket(BasisId x, BasisId y, std::vector<std::pair<BasisId, Q>>& lie,
               Q& central) const {
    (void)central;
    for (const auto& [z, c] : table->bracket(x, y)) lie.push_back({z, c});
  }
};

using FinElem = Element<BasisId, Q>;
using FinMono = Monomial<BasisId>;

class FiniteAlgebra {
 public:
  explicit FiniteAlgebra(const StructureTable& t = StructureTable::instance())
      : engine_(FiniteCtx{&t}), table_(&t) {}

  const StructureTable& table() const { return *table_; }

  FinElem zero() const { return {}; }

  FinElem one() const {
    FinElem e;
    e.add_term({}, Q(1));
    return e;
  }

  FinElem gen(BasisId b) const {
    FinElem e;
    e.add_term({b}, Q(1));
    return e;
  }

  FinElem coroot(Root gamma) const {
    CorootExpansion ex = coroot_expansion(gamma);
    FinElem e;
    if (ex.c10 != 0) e.add_term({BasisId::H10}, Q(ex.c10));
    if (ex.c01 != 0) e.add_term({BasisId::H01}, Q(ex.c01));
    return e;
  }

  FinElem multiply(const FinElem& a, const FinElem& b) const {
    return engine_.multiply(a, b);
  }
  FinElem commutator(const FinElem& a, const FinElem& b) const {
    return engine_.commutator(a, b);
  }

  // Straightened word of generators.
  FinElem word(FinMono m, Q c = Q(1)) const {
    return engine_.normalize({{std::move(m), std::move(c)}});
  }
  static FinElem add(const FinElem& a, const FinElem& b) {
    return PbwEngine<FiniteCtx>::add(a, b);
  }
  static FinElem sub(const FinElem& a, const FinElem& b) {
    return PbwEngine<FiniteCtx>::sub(a, b);
  }
  static FinElem scale(const FinElem& a, const Q& c) {
    return PbwEngine<FiniteCtx>::scale(a, c);
  }

  FinElem pow(const FinElem& a, int n) const {
    FinElem r = one();
    for (int i = 0; i < n; ++i) r = multiply(r, a);
    return r;
  }

  // Derivation action X_L f = [X, f], computed factorwise; exact and
  // degree-preserving.
  FinElem adjoint(BasisId x, const FinElem& y) const {
    typename PbwEngine<FiniteCtx>::Work work;
    for (const auto& [mono, coeff] : y.terms) {
      for (size_t j = 0; j < mono.size(); ++j) {
        for (const auto& [z, c] : table_->bracket(x, mono[j])) {
          FinMono m = mono;
          m[j] = z;
          work.emplace_back(std::move(m), coeff * c);
        }
      }
    }
    return engine_.normalize(std::move(work));
  }

  // (X^n)_L y by direct iteration, terms consolidated after every step.
  FinElem adjoint_pow(BasisId x, int n, FinElem y) const {
    for (int i = 0; i < n; ++i) y = adjoint(x, y);
    return y;
  }

  // h-weight of an element when homogeneous.
  static std::optional<Root> weight_of(const FinElem& x) {
    std::optional<Root> res;
    for (const auto& [mono, coeff] : x.terms) {
      Root w{0, 0};
      for (BasisId b : mono) w = w + weight_of_basis(b);
      if (!res) {
        res = w;
      } else if (!(*res == w)) {
        return std::nullopt;
      }
    }
    if (!res) res = Root{0, 0};
    return res;
  }

 private:
  PbwEngine<FiniteCtx> engine_;
  const StructureTable* table_;
};

// The images [a], [b], [c] of the singular-vector generators in U(g), and
// the combinations [u] = (1/3)[a]^2 - [b], [v] = (2/9)[a]^3 - [a][b] - 3[c],
// uv = [u][v].
struct ZhuGenerators {
  FinElem a, b, c, u, v, uv;
};

inline ZhuGenerators zhu_generators(const FiniteAlgebra& alg) {
  using enum BasisId;
  ZhuGenerators z;
  z.a = alg.gen(E21);
  z.b = FiniteAlgebra::sub(alg.multiply(alg.gen(E31), alg.gen(E11)),
                           alg.multiply(alg.gen(E32), alg.gen(E10)));
  FinElem c1 = alg.multiply(alg.multiply(alg.gen(E31), alg.gen(E31)),
                            alg.gen(E01));
  FinElem c2 = alg.multiply(alg.multiply(alg.gen(E32), alg.gen(E31)),
                            alg.gen(H01));
  FinElem c3 = alg.multiply(alg.multiply(alg.gen(E32), alg.gen(E32)),
                            alg.gen(F01));
  z.c = FiniteAlgebra::sub(FiniteAlgebra::sub(c1, c2), c3);
  z.u = FiniteAlgebra::sub(
      FiniteAlgebra::scale(alg.multiply(z.a, z.a), Q(1, 3)), z.b);
  z.v = FiniteAlgebra::sub(
      FiniteAlgebra::sub(
          FiniteAlgebra::scale(alg.pow(z.a, 3), Q(2, 9)),
          alg.multiply(z.a, z.b)),
      FiniteAlgebra::scale(z.c, Q(3)));
  z.uv = alg.multiply(z.u, z.v);
  return z;
}

// Zhu-map image of a vacuum element: each PBW monomial
// a1(-n1-1)...am(-nm-1).1 maps to (-1)^(n1+...+nm) am...a1 in U(g), extended
// linearly and normal-ordered. The factor order must be reversed relative to
// the monomial for the map to be independent of the chosen spanning
// expression: a(-1)b(-1).1 = b(-1)a(-1).1 + [a,b](-2).1 forces
// F(ab-form) = ba = ab - [a,b], which only the reversed product satisfies on
// both sides. This reading reproduces every displayed image ([a], [b], [c],
// [w] = 0, [u], [v], and [u(v-w)] = [u][v]) at once.
inline FinElem zhu_image(const VacuumState& s, const FiniteAlgebra& alg) {
  typename PbwEngine<FiniteCtx>::Work work;
  for (const auto& [mono, coeff] : s.element.terms) {
    long long nsum = 0;
    FinMono fm;
    fm.reserve(mono.size());
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      if (it->mode >= 0)
        throw std::domain_error("zhu_image: nonnegative mode in vacuum state");
      nsum += -it->mode - 1;
      fm.push_back(it->base);
    }
    work.emplace_back(std::move(fm), (nsum % 2 == 0) ? coeff : -coeff);
  }
  PbwEngine<FiniteCtx> engine(FiniteCtx{&alg.table()});
  return engine.normalize(std::move(work));
}

}  // namespace g2voa
