#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2voa/affine.hpp"
#include "g2voa/reports.hpp"
#include "g2voa/serialize.hpp"

namespace g2voa {

// The generating elements of the singular vectors:
//   a = E21(-1)
//   b = E31(-1)E11(-1) - E32(-1)E10(-1)
//   c = E31(-1)^2 E01(-1) - E32(-1)E31(-1)H01(-1) - E32(-1)^2 F01(-1)
//   w = E31(-1)E32(-2) - E32(-1)E31(-2)
//   u = (1/3) a^2 - b
//   v = (2/9) a^3 - a b - 3 c
struct SingularGenerators {
  AffElem a, b, c, w, u, v;
};

inline SingularGenerators build_generators(const AffineAlgebra& alg) {
  using enum BasisId;
  auto g = [&](BasisId b, int m) { return alg.gen(b, m); };
  SingularGenerators out;
  out.a = g(E21, -1);
  out.b = AffineAlgebra::sub(alg.multiply(g(E31, -1), g(E11, -1)),
                             alg.multiply(g(E32, -1), g(E10, -1)));
  AffElem c1 = alg.multiply(alg.multiply(g(E31, -1), g(E31, -1)), g(E01, -1));
  AffElem c2 = alg.multiply(alg.multiply(g(E32, -1), g(E31, -1)), g(H01, -1));
  AffElem c3 = alg.multiply(alg.multiply(g(E32, -1), g(E32, -1)), g(F01, -1));
  out.c = AffineAlgebra::sub(AffineAlgebra::sub(c1, c2), c3);
  out.w = AffineAlgebra::sub(alg.multiply(g(E31, -1), g(E32, -2)),
                             alg.multiply(g(E32, -1), g(E31, -2)));
  out.u = AffineAlgebra::sub(
      AffineAlgebra::scale(alg.multiply(out.a, out.a), Q(1, 3)), out.b);
  AffElem a3 = alg.multiply(out.a, alg.multiply(out.a, out.a));
  out.v = AffineAlgebra::sub(
      AffineAlgebra::sub(AffineAlgebra::scale(a3, Q(2, 9)),
                         alg.multiply(out.a, out.b)),
      AffineAlgebra::scale(out.c, Q(3)));
  return out;
}

struct SingularCandidate {
  Q level;
  AffElem element;  // the pre-vacuum expression
  VacuumState state;
};

inline const std::vector<Q>& singular_levels() {
  static const std::vector<Q> levels = {Q(-5, 3), Q(-4, 3), Q(-2, 3)};
  return levels;
}

// The candidate expression paired with a level (not necessarily the matching
// one; mismatched pairs serve as negative controls).
inline SingularCandidate make_candidate_with(const AffElem& expr, const Q& k,
                                             const AffineAlgebra& alg) {
  return SingularCandidate{k, expr, alg.apply_to_vacuum(expr, k)};
}

// v_k as in the definition table: u.1 at k=-5/3, (v+w).1 at k=-4/3,
// u(v-w).1 at k=-2/3.
inline AffElem candidate_expression(const SingularGenerators& g, const Q& k,
                                    const AffineAlgebra& alg) {
  if (k == Q(-5, 3)) return g.u;
  if (k == Q(-4, 3)) return AffineAlgebra::add(g.v, g.w);
  if (k == Q(-2, 3))
    return alg.multiply(g.u, AffineAlgebra::sub(g.v, g.w));
  throw std::domain_error("unsupported level");
}

inline SingularCandidate make_candidate(const Q& k, const AffineAlgebra& alg) {
  SingularGenerators g = build_generators(alg);
  return make_candidate_with(candidate_expression(g, k, alg), k, alg);
}

// Applies the three operators that detect singularity. Nonzero residuals are
// reported, not raised.
struct SingularReport {
  bool e10_zero = false;
  bool e01_zero = false;
  bool f32_zero = false;
  VacuumState residual_e10, residual_e01, residual_f32;

  bool all_zero() const { return e10_zero && e01_zero && f32_zero; }
};

inline SingularReport check_singular(const SingularCandidate& cand,
                                     const AffineAlgebra& alg) {
  SingularReport r;
  r.residual_e10 = alg.act(alg.gen(BasisId::E10, 0), cand.state);
  r.residual_e01 = alg.act(alg.gen(BasisId::E01, 0), cand.state);
  r.residual_f32 = alg.act(alg.gen(BasisId::F32, 1), cand.state);
  r.e10_zero = r.residual_e10.is_zero();
  r.e01_zero = r.residual_e01.is_zero();
  r.f32_zero = r.residual_f32.is_zero();
  return r;
}

// Every displayed identity of the commutator lemmas, each computed on both
// sides in symbolic-K canonical PBW form and compared exactly.
inline std::vector<IdentityResult> verify_appendix_a(const AffineAlgebra& alg) {
  using enum BasisId;
  SingularGenerators s = build_generators(alg);
  auto g = [&](BasisId b, int m) { return alg.gen(b, m); };
  auto mul = [&](const AffElem& x, const AffElem& y) {
    return alg.multiply(x, y);
  };
  auto add = AffineAlgebra::add;
  auto sub = AffineAlgebra::sub;
  auto sc = [](const AffElem& x, const Q& c) {
    return AffineAlgebra::scale(x, c);
  };
  auto sck = [&](const AffElem& x, const KPoly& c) {
    return AffineAlgebra::scale(x, c);
  };
  const AffElem zero;
  const AffElem e10_0 = g(E10, 0), e01_0 = g(E01, 0), f32_1 = g(F32, 1);
  const AffElem h32_0 = alg.coroot(Root{3, 2}, 0);

  KPoly k_plus = KPoly::k();  // K
  auto k_shift = [&](const Q& c) {
    KPoly p = KPoly::k();
    p += KPoly(c);
    return p;
  };

  std::vector<IdentityResult> out;
  auto check = [&](const std::string& id, const AffElem& lhs,
                   const AffElem& rhs) {
    out.push_back({id, lhs == rhs, to_string(lhs), to_string(rhs)});
  };

  // --- lem-commute (commutators with E10(0) and E01(0)) ---
  check("A1.[a,E10(0)]", alg.commutator(s.a, e10_0), sc(g(E31, -1), Q(3)));
  check("A1.[b,E10(0)]", alg.commutator(s.b, e10_0),
        sc(mul(g(E31, -1), g(E21, -1)), Q(2)));
  check("A1.[c,E10(0)]", alg.commutator(s.c, e10_0),
        sub(mul(mul(g(E32, -1), g(E31, -1)), g(E10, -1)),
            mul(mul(g(E31, -1), g(E31, -1)), g(E11, -1))));
  check("A1.[u,E10(0)]", alg.commutator(s.u, e10_0), zero);
  check("A1.[v,E10(0)]", alg.commutator(s.v, e10_0), zero);
  check("A1.[w,E10(0)]", alg.commutator(s.w, e10_0), zero);
  check("A1.[a,E01(0)]", alg.commutator(s.a, e01_0), zero);
  check("A1.[b,E01(0)]", alg.commutator(s.b, e01_0), zero);
  check("A1.[c,E01(0)]", alg.commutator(s.c, e01_0), zero);
  check("A1.[u,E01(0)]", alg.commutator(s.u, e01_0), zero);
  check("A1.[v,E01(0)]", alg.commutator(s.v, e01_0), zero);
  check("A1.[w,E01(0)]", alg.commutator(s.w, e01_0), zero);

  // --- lem-commute-F (commutators with F32(1)) ---
  check("A2.[a,F32(1)]", alg.commutator(s.a, f32_1), sc(g(F11, 0), Q(-1)));
  AffElem b_f32 = alg.commutator(s.b, f32_1);
  check("A2.[b,F32(1)]", b_f32,
        add(sub(sub(mul(g(E31, -1), g(F21, 0)), mul(g(E11, -1), g(F01, 0))),
                mul(g(E10, -1), h32_0)),
            sck(g(E10, -1), k_shift(Q(1)))));
  AffElem c_f32 = alg.commutator(s.c, f32_1);
  {
    AffElem rhs = mul(mul(g(E32, -1), g(E31, -1)), g(F32, 0));
    rhs = add(rhs, mul(mul(g(E32, -1), g(H01, -1)), g(F01, 0)));
    rhs = sub(rhs, sc(mul(mul(g(E32, -1), g(F01, -1)), h32_0), Q(2)));
    rhs = add(rhs, sck(mul(g(E32, -1), g(F01, -1)), k_shift(Q(1)) + k_shift(Q(1))));
    rhs = add(rhs, mul(mul(g(E31, -1), g(E31, -1)), g(F31, 0)));
    rhs = sub(rhs, sc(mul(mul(g(E31, -1), g(E01, -1)), g(F01, 0)), Q(2)));
    rhs = sub(rhs, mul(mul(g(E31, -1), g(H01, -1)), h32_0));
    rhs = add(rhs, sck(mul(g(E31, -1), g(H01, -1)), k_shift(Q(1))));
    check("A2.[c,F32(1)]", c_f32, rhs);
  }
  {
    AffElem rhs = sck(g(E10, -1), -k_shift(Q(5, 3)));
    rhs = sub(rhs, mul(g(E31, -1), g(F21, 0)));
    rhs = sub(rhs, sc(mul(g(E21, -1), g(F11, 0)), Q(2, 3)));
    rhs = add(rhs, mul(g(E11, -1), g(F01, 0)));
    rhs = add(rhs, mul(g(E10, -1), h32_0));
    check("A2.[u,F32(1)]", alg.commutator(s.u, f32_1), rhs);
  }
  {
    // The [v, F32(1)] display references [b,F32(1)] and [c,F32(1)]
    // unexpanded; the engine's own values are substituted for those.
    AffElem rhs = sc(mul(mul(g(E32, -1), g(E10, -1)), g(F11, 0)), Q(-1));
    rhs = sub(rhs, sc(mul(g(E32, -1), g(F01, -1)), Q(3)));
    rhs = add(rhs, sc(g(E31, -2), Q(4, 3)));
    rhs = add(rhs, mul(mul(g(E31, -1), g(E11, -1)), g(F11, 0)));
    rhs = sub(rhs, mul(g(E31, -1), alg.coroot(Root{1, 1}, -1)));
    rhs = sub(rhs, sc(mul(mul(s.a, s.a), g(F11, 0)), Q(2, 3)));
    rhs = sub(rhs, sc(mul(s.a, g(E10, -1)), Q(1, 3)));
    rhs = sub(rhs, mul(s.a, b_f32));
    rhs = sub(rhs, sc(c_f32, Q(3)));
    check("A2.[v,F32(1)]", alg.commutator(s.v, f32_1), rhs);
  }
  {
    AffElem rhs = sc(mul(g(E32, -2), g(F01, 0)), Q(-1));
    rhs = add(rhs, mul(g(E32, -1), g(F01, -1)));
    rhs = sub(rhs, mul(g(E31, -2), h32_0));
    rhs = add(rhs, mul(g(E31, -1), alg.coroot(Root{3, 2}, -1)));
    rhs = add(rhs, sck(g(E31, -2), k_plus));
    check("A2.[w,F32(1)]", alg.commutator(s.w, f32_1), rhs);
  }

  // --- lem-zero (commutators with v - w) ---
  AffElem vw = sub(s.v, s.w);
  check("A3.[H32(0),v-w]", alg.commutator(h32_0, vw), sc(vw, Q(3)));
  check("A3.[F01(0),v-w]", alg.commutator(g(F01, 0), vw), zero);
  {
    AffElem rhs = mul(sub(sc(mul(s.a, s.a), Q(1, 3)), sc(s.b, Q(2))),
                      g(E10, -1));
    rhs = add(rhs, mul(mul(s.a, g(E31, -1)), g(H10, -1)));
    rhs = sub(rhs, sc(mul(s.a, g(E31, -2)), Q(5)));
    rhs = add(rhs, sc(mul(g(E31, -1), g(E21, -2)), Q(5)));
    rhs = add(rhs, sc(mul(mul(g(E31, -1), g(E31, -1)), g(F10, -1)), Q(3)));
    rhs = add(rhs, sc(mul(mul(g(E32, -1), g(E31, -1)), g(F11, -1)), Q(3)));
    rhs = sub(rhs, sc(mul(mul(s.a, g(E32, -1)), g(F01, -1)), Q(3)));
    check("A3.[F11(0),v-w]", alg.commutator(g(F11, 0), vw), rhs);
  }
  {
    AffElem rhs = mul(add(sc(mul(s.a, s.a), Q(-2, 3)), s.b),
                      alg.coroot(Root{2, 1}, -1));
    rhs = add(rhs, sc(mul(s.a, g(E21, -2)), Q(2, 3)));
    rhs = sub(rhs, sc(mul(mul(s.a, g(E31, -1)), g(F10, -1)), Q(2)));
    rhs = sub(rhs, sc(mul(mul(s.a, g(E32, -1)), g(F11, -1)), Q(2)));
    rhs = add(rhs, sc(mul(mul(g(E31, -1), g(E11, -1)), g(H01, -1)), Q(3)));
    rhs = add(rhs, sc(mul(mul(g(E32, -1), g(E10, -1)), g(H01, -1)), Q(3)));
    rhs = sub(rhs, sc(mul(mul(g(E31, -1), g(E10, -1)), g(E01, -1)), Q(6)));
    rhs = add(rhs, sc(mul(mul(g(E32, -1), g(E11, -1)), g(F01, -1)), Q(6)));
    rhs = add(rhs, sc(mul(g(E11, -1), g(E31, -2)), Q(4)));
    rhs = sub(rhs, sc(mul(g(E10, -1), g(E32, -2)), Q(4)));
    check("A3.[F21(0),v-w]", alg.commutator(g(F21, 0), vw), rhs);
  }

  // --- displayed identities inside the proofs ---
  check("A3p.[F11(0),a^3]",
        alg.commutator(g(F11, 0), mul(s.a, mul(s.a, s.a))),
        sub(sc(mul(mul(s.a, s.a), g(E10, -1)), Q(6)),
            sc(mul(s.a, g(E31, -2)), Q(18))));
  {
    AffElem rhs = sc(mul(mul(g(E31, -1), g(E31, -1)), g(F10, -1)), Q(-1));
    rhs = add(rhs, mul(mul(s.a, g(E31, -1)), g(H01, -1)));
    rhs = sub(rhs, mul(mul(g(E32, -1), g(E31, -1)), g(F11, -1)));
    rhs = add(rhs, sc(mul(mul(s.a, g(E32, -1)), g(F01, -1)), Q(2)));
    check("A3p.[F11(0),c]", alg.commutator(g(F11, 0), s.c), rhs);
  }
  check("A3p.[F11(0),w]", alg.commutator(g(F11, 0), s.w),
        sub(mul(s.a, g(E31, -2)), mul(g(E31, -1), g(E21, -2))));
  check("A3p.[E10(-1),b]", alg.commutator(g(E10, -1), s.b),
        sc(mul(g(E31, -1), g(E21, -2)), Q(-2)));
  check("A2p.[a,b]=3w", alg.commutator(s.a, s.b), sc(s.w, Q(3)));

  return out;
}

// Documented discrepancies between the engine and printed proof-internal
// lines. Each entry pins the exact relationship found, so a change in either
// side is caught.
inline std::vector<DeviationReport> known_print_deviations(
    const AffineAlgebra& alg) {
  using enum BasisId;
  SingularGenerators s = build_generators(alg);
  auto g = [&](BasisId b, int m) { return alg.gen(b, m); };
  auto mul = [&](const AffElem& x, const AffElem& y) {
    return alg.multiply(x, y);
  };

  std::vector<DeviationReport> out;
  {
    // The [F11(0), ab] line inside the commutation-lemma proof: the printed
    // right-hand side is the negative of the engine value ([F11, E21] =
    // +2 E10 by the structure table, not -2), while the lemma's own
    // statement for [F11(0), v-w] agrees with the engine.
    AffElem engine = alg.commutator(g(F11, 0), mul(s.a, s.b));
    AffElem printed = AffineAlgebra::sub(
        AffineAlgebra::scale(mul(g(E10, -1), s.b), Q(-2)),
        mul(s.a,
            AffineAlgebra::add(
                AffineAlgebra::sub(mul(s.a, g(E10, -1)),
                                   mul(g(E31, -1), alg.coroot(Root{1, 1}, -1))),
                AffineAlgebra::scale(mul(g(E32, -1), g(F01, -1)), Q(-3)))));
    DeviationReport d;
    d.id = "A3p.[F11(0),ab]";
    d.engine_value = to_string(engine);
    d.printed_value = to_string(printed);
    d.note =
        "printed proof line is the negative of the engine value; the lemma "
        "statement for [F11(0),v-w] matches the engine";
    d.relationship_holds = (engine == AffineAlgebra::scale(printed, Q(-1)));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace g2voa
