#pragma once

#include <map>
#include <utility>
#include <vector>

namespace g2voa {

// A PBW monomial: generator factors listed left to right, with multiplicity.
// Canonical monomials are nondecreasing in the context's total order.
template <class Gen>
using Monomial = std::vector<Gen>;

// Exact element of an enveloping algebra in canonical PBW form: monomials map
// to nonzero coefficients; the map order (lexicographic on factor sequences)
// is the canonical term order used for serialization.
template <class Gen, class Coeff>
struct Element {
  std::map<Monomial<Gen>, Coeff> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms == b.terms;
  }

  void add_term(const Monomial<Gen>& m, const Coeff& c) {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff{}) terms.erase(it);
    }
  }
};

// Straightening engine for a PBW basis. The context Ctx supplies:
//   using Gen;     totally ordered generator symbol (operator<, operator==)
//   using Coeff;   commutative coefficient ring (+=, *, unary -, ==, Coeff{})
//   void bracket(Gen a, Gen b, std::vector<std::pair<Gen,Coeff>>& lie,
//                Coeff& central) const;
//       -- [a, b] as a linear combination of generators plus a central scalar.
//
// An out-of-order adjacent pair a*b (a > b) rewrites as b*a + [a,b]. Each
// rewrite either strictly decreases the number of inversions at constant
// degree (the swap) or strictly decreases the degree (the bracket terms), so
// the (degree, inversions) measure is well-founded and the worklist
// terminates.
template <class Ctx>
class PbwEngine {
 public:
  using Gen = typename Ctx::Gen;
  using Coeff = typename Ctx::Coeff;
  using Elem = Element<Gen, Coeff>;
  using Mono = Monomial<Gen>;
  using Work = std::vector<std::pair<Mono, Coeff>>;

  explicit PbwEngine(Ctx ctx) : ctx_(std::move(ctx)) {}
  const Ctx& ctx() const { return ctx_; }

  Elem normalize(Work work) const {
    Elem out;
    std::vector<std::pair<Gen, Coeff>> lie;
    while (!work.empty()) {
      auto [mono, coeff] = std::move(work.back());
      work.pop_back();
      if (coeff == Coeff{}) continue;
      size_t i = 0;
      bool ordered = true;
      for (; i + 1 < mono.size(); ++i) {
        if (mono[i + 1] < mono[i]) {
          ordered = false;
          break;
        }
      }
      if (ordered) {
        out.add_term(mono, coeff);
        continue;
      }
      lie.clear();
      Coeff central{};
      ctx_.bracket(mono[i], mono[i + 1], lie, central);
      for (const auto& [g, c] : lie) {
        Mono shorter;
        shorter.reserve(mono.size() - 1);
        shorter.insert(shorter.end(), mono.begin(), mono.begin() + i);
        shorter.push_back(g);
        shorter.insert(shorter.end(), mono.begin() + i + 2, mono.end());
        work.emplace_back(std::move(shorter), coeff * c);
      }
      if (!(central == Coeff{})) {
        Mono rest;
        rest.reserve(mono.size() - 2);
        rest.insert(rest.end(), mono.begin(), mono.begin() + i);
        rest.insert(rest.end(), mono.begin() + i + 2, mono.end());
        work.emplace_back(std::move(rest), coeff * central);
      }
      std::swap(mono[i], mono[i + 1]);
      work.emplace_back(std::move(mono), std::move(coeff));
    }
    return out;
  }

  Elem multiply(const Elem& a, const Elem& b) const {
    Work work;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) {
        Mono m;
        m.reserve(ma.size() + mb.size());
        m.insert(m.end(), ma.begin(), ma.end());
        m.insert(m.end(), mb.begin(), mb.end());
        work.emplace_back(std::move(m), ca * cb);
      }
    return normalize(std::move(work));
  }

  Elem commutator(const Elem& a, const Elem& b) const {
    Elem r = multiply(a, b);
    for (const auto& [m, c] : multiply(b, a).terms) r.add_term(m, -c);
    return r;
  }

  // x y1 y2 ... yn for a word of generators, straightened.
  Elem word(const Mono& m, const Coeff& c) const {
    return normalize({{m, c}});
  }

  static Elem add(const Elem& a, const Elem& b) {
    Elem r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
  }

  static Elem sub(const Elem& a, const Elem& b) {
    Elem r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
  }

  static Elem scale(const Elem& a, const Coeff& c) {
    Elem r;
    if (c == Coeff{}) return r;
    for (const auto& [m, cc] : a.terms) r.add_term(m, cc * c);
    return r;
  }

 private:
  Ctx ctx_;
};

}  // namespace g2voa
