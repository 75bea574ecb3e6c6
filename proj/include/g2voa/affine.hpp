#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2voa/chevalley.hpp"
#include "g2voa/kpoly.hpp"
#include "g2voa/pbw.hpp"

namespace g2voa {

// a(n) = a tensor t^n. The PBW total order sorts by mode first, ties broken
// by the fixed basis enumeration, so in canonical form every nonnegative-mode
// factor sits to the right of every negative-mode one and vacuum application
// is a filter on rightmost factors.
struct AffineGen {
  int mode = 0;
  BasisId base = BasisId::F10;

  friend bool operator==(AffineGen a, AffineGen b) {
    return a.mode == b.mode && a.base == b.base;
  }
  friend bool operator<(AffineGen a, AffineGen b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    return basis_index(a.base) < basis_index(b.base);
  }
};

struct AffineCtx {
  using Gen = AffineGen;
  using Coeff = KPoly;

  const StructureTable* table;

  // [x(m), y(n)] = [x,y](m+n) + m (x,y) delta_{m+n,0} K
  void bracket(AffineGen x, AffineGen y,
               std::vector<std::pair<AffineGen, KPoly>>& lie,
               KPoly& central) const {
    for (const auto& [z, c] : table->bracket(x.base, y.base))
      lie.push_back({AffineGen{x.mode + y.mode, z}, KPoly(c)});
    if (x.mode != 0 && x.mode + y.mode == 0) {
      Q f = table->form(x.base, y.base);
      if (f != 0) {
        central.c = {Q(0), Q(x.mode) * f};
      }
    }
  }
};

using AffElem = Element<AffineGen, KPoly>;
using AffMono = Monomial<AffineGen>;

// Homogeneity data of an element: h-weight in the root lattice plus the
// delta-coefficient (total mode sum).
struct HWeight {
  Root finite;
  long long delta = 0;
  friend bool operator==(const HWeight& a, const HWeight& b) {
    return a.finite == b.finite && a.delta == b.delta;
  }
};

// Element of the vacuum module N(k,0): strictly negative modes applied to
// the vacuum, with K already specialized to the level.
struct VacuumState {
  Element<AffineGen, Q> element;
  Q level;

  friend bool operator==(const VacuumState& a, const VacuumState& b) {
    return a.level == b.level && a.element == b.element;
  }
  bool is_zero() const { return element.is_zero(); }
};

class AffineAlgebra {
 public:
  explicit AffineAlgebra(const StructureTable& t = StructureTable::instance())
      : engine_(AffineCtx{&t}), table_(&t) {}

  const StructureTable& table() const { return *table_; }
  const PbwEngine<AffineCtx>& engine() const { return engine_; }

  AffElem zero() const { return {}; }

  AffElem one() const {
    AffElem e;
    e.add_term({}, KPoly(Q(1)));
    return e;
  }

  // The central symbol K as an element (scalar K times the empty monomial).
  AffElem k_central() const {
    AffElem e;
    e.add_term({}, KPoly::k());
    return e;
  }

  AffElem gen(BasisId b, int mode) const {
    AffElem e;
    e.add_term({AffineGen{mode, b}}, KPoly(Q(1)));
    return e;
  }

  // H_gamma(mode) for any root gamma, through the coroot expansion.
  AffElem coroot(Root gamma, int mode) const {
    CorootExpansion ex = coroot_expansion(gamma);
    AffElem e;
    if (ex.c10 != 0) e.add_term({AffineGen{mode, BasisId::H10}}, KPoly(Q(ex.c10)));
    if (ex.c01 != 0) e.add_term({AffineGen{mode, BasisId::H01}}, KPoly(Q(ex.c01)));
    return e;
  }

  AffElem multiply(const AffElem& a, const AffElem& b) const {
    return engine_.multiply(a, b);
  }
  AffElem commutator(const AffElem& a, const AffElem& b) const {
    return engine_.commutator(a, b);
  }
  static AffElem add(const AffElem& a, const AffElem& b) {
    return PbwEngine<AffineCtx>::add(a, b);
  }
  static AffElem sub(const AffElem& a, const AffElem& b) {
    return PbwEngine<AffineCtx>::sub(a, b);
  }
  static AffElem scale(const AffElem& a, const Q& c) {
    return PbwEngine<AffineCtx>::scale(a, KPoly(c));
  }
  static AffElem scale(const AffElem& a, const KPoly& c) {
    return PbwEngine<AffineCtx>::scale(a, c);
  }

  // The Lie bracket of two single generators, straight from the affine
  // bracket formula (central term included as the symbol K). The engine's
  // multiply-commutator route must agree with this; the test suite checks.
  AffElem bracket_pair(AffineGen x, AffineGen y) const {
    std::vector<std::pair<AffineGen, KPoly>> lie;
    KPoly central;
    engine_.ctx().bracket(x, y, lie, central);
    AffElem e;
    for (const auto& [g, c] : lie) e.add_term({g}, c);
    if (!central.is_zero()) e.add_term({}, central);
    return e;
  }

  // Normal-orders x, drops every monomial whose rightmost factor has
  // mode >= 0 (those annihilate the vacuum), substitutes K -> level, and
  // returns the residual strictly-negative-mode element applied to 1.
  VacuumState apply_to_vacuum(const AffElem& x, const Q& level) const {
    VacuumState s;
    s.level = level;
    for (const auto& [mono, coeff] : x.terms) {
      if (!mono.empty() && mono.back().mode >= 0) continue;
      Q c = coeff.eval(level);
      if (c != 0) s.element.add_term(mono, c);
    }
    return s;
  }

  // Applies an enveloping-algebra element to a vacuum state: lifts the state
  // back to symbolic-K coefficients, multiplies, re-applies the vacuum at the
  // state's level.
  VacuumState act(const AffElem& op, const VacuumState& s) const {
    AffElem lifted;
    for (const auto& [mono, c] : s.element.terms) lifted.add_term(mono, KPoly(c));
    return apply_to_vacuum(multiply(op, lifted), s.level);
  }

  // h-weight and t-degree, when all monomials agree; empty when the element
  // is inhomogeneous. Zero and scalar elements report weight (0,0), degree 0.
  static std::optional<HWeight> weight_of(const AffElem& x) {
    std::optional<HWeight> res;
    for (const auto& [mono, coeff] : x.terms) {
      HWeight w = mono_weight(mono);
      if (!res) {
        res = w;
      } else if (!(*res == w)) {
        return std::nullopt;
      }
    }
    if (!res) res = HWeight{Root{0, 0}, 0};
    return res;
  }

  static std::optional<HWeight> weight_of(const VacuumState& s) {
    AffElem lifted;
    for (const auto& [mono, c] : s.element.terms) lifted.add_term(mono, KPoly(c));
    return weight_of(lifted);
  }

  static HWeight mono_weight(const AffMono& mono) {
    HWeight w{Root{0, 0}, 0};
    for (const AffineGen& g : mono) {
      w.finite = w.finite + weight_of_basis(g.base);
      w.delta += g.mode;
    }
    return w;
  }

 private:
  PbwEngine<AffineCtx> engine_;
  const StructureTable* table_;
};

}  // namespace g2voa
