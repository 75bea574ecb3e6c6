#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2voa/affine.hpp"
#include "g2voa/finite.hpp"

namespace g2voa {

// Canonical, bit-exact text form of enveloping-algebra elements:
//   element  := "0" | term (" + " term)*
//   term     := coeff [" * " factor (" " factor)*]
//   factor   := Name "(" mode ")"   (affine)  |  Name   (finite)
//   coeff    := "p/q" | "(c0 + c1*K + ...)"
// Terms appear in the canonical map order, so equal elements serialize
// identically.

inline std::string to_string(const AffineGen& g) {
  return std::string(basis_name(g.base)) + "(" + std::to_string(g.mode) + ")";
}

namespace detail {

template <class Mono, class GenPrinter>
std::string mono_to_string(const Mono& m, GenPrinter&& pg) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += " ";
    s += pg(m[i]);
  }
  return s;
}

template <class Elem, class CoeffPrinter, class GenPrinter>
std::string element_to_string(const Elem& e, CoeffPrinter&& pc,
                              GenPrinter&& pg) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mono, coeff] : e.terms) {
    if (!first) s += " + ";
    first = false;
    s += pc(coeff);
    if (!mono.empty()) {
      s += " * ";
      s += mono_to_string(mono, pg);
    }
  }
  return s;
}

// Splits on " + " at parenthesis depth zero.
inline std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 2 < s.size() && s.substr(i, 3) == " + ") {
      out.push_back(s.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline KPoly parse_kpoly(std::string_view s) {
  KPoly p;
  if (s.empty() || s.front() != '(') {
    Q c = parse_rational(s);
    return KPoly(c);
  }
  s.remove_prefix(1);
  s.remove_suffix(1);
  for (std::string_view piece : split_terms(s)) {
    Q c;
    size_t pow = 0;
    auto star = piece.find('*');
    if (star == std::string_view::npos) {
      c = parse_rational(piece);
    } else {
      c = parse_rational(piece.substr(0, star));
      std::string_view kpart = piece.substr(star + 1);
      if (kpart == "K") {
        pow = 1;
      } else if (kpart.substr(0, 2) == "K^") {
        pow = static_cast<size_t>(std::stoul(std::string(kpart.substr(2))));
      } else {
        throw std::invalid_argument("malformed K term");
      }
    }
    if (p.c.size() <= pow) p.c.resize(pow + 1, Q(0));
    p.c[pow] += c;
  }
  p.trim();
  return p;
}

inline AffineGen parse_affine_gen(std::string_view tok) {
  auto open = tok.find('(');
  if (open == std::string_view::npos || tok.back() != ')')
    throw std::invalid_argument("malformed generator: " + std::string(tok));
  auto base = parse_basis_name(tok.substr(0, open));
  if (!base) throw std::invalid_argument("unknown basis: " + std::string(tok));
  int mode = std::stoi(std::string(tok.substr(open + 1, tok.size() - open - 2)));
  return AffineGen{mode, *base};
}

}  // namespace detail

inline std::string to_string(const AffElem& e) {
  return detail::element_to_string(
      e, [](const KPoly& c) { return c.to_string(); },
      [](const AffineGen& g) { return to_string(g); });
}

inline std::string to_string(const FinElem& e) {
  return detail::element_to_string(
      e, [](const Q& c) { return q_to_string(c); },
      [](BasisId b) { return std::string(basis_name(b)); });
}

inline std::string to_string(const VacuumState& s) {
  return detail::element_to_string(
      s.element, [](const Q& c) { return q_to_string(c); },
      [](const AffineGen& g) { return to_string(g); });
}

inline AffElem parse_affine(std::string_view s, const AffineAlgebra& alg) {
  if (s == "0") return {};
  typename PbwEngine<AffineCtx>::Work work;
  for (std::string_view term : detail::split_terms(s)) {
    std::string_view coeff_part = term;
    std::string_view mono_part;
    if (!term.empty() && term.front() == '(') {
      auto close = term.find(')');
      if (close == std::string_view::npos)
        throw std::invalid_argument("unbalanced coefficient");
      coeff_part = term.substr(0, close + 1);
      mono_part = term.substr(close + 1);
    } else {
      auto star = term.find(" * ");
      if (star != std::string_view::npos) {
        coeff_part = term.substr(0, star);
        mono_part = term.substr(star);
      }
    }
    if (mono_part.substr(0, 3) == " * ") mono_part.remove_prefix(3);
    KPoly coeff = detail::parse_kpoly(coeff_part);
    AffMono mono;
    for (std::string_view tok : detail::split_ws(mono_part))
      mono.push_back(detail::parse_affine_gen(tok));
    work.emplace_back(std::move(mono), std::move(coeff));
  }
  return alg.engine().normalize(std::move(work));
}

inline FinElem parse_finite(std::string_view s, const FiniteAlgebra& alg) {
  if (s == "0") return {};
  PbwEngine<FiniteCtx> engine(FiniteCtx{&alg.table()});
  typename PbwEngine<FiniteCtx>::Work work;
  for (std::string_view term : detail::split_terms(s)) {
    std::string_view coeff_part = term;
    std::string_view mono_part;
    auto star = term.find(" * ");
    if (star != std::string_view::npos) {
      coeff_part = term.substr(0, star);
      mono_part = term.substr(star + 3);
    }
    Q coeff = parse_rational(coeff_part);
    FinMono mono;
    for (std::string_view tok : detail::split_ws(mono_part)) {
      auto base = parse_basis_name(tok);
      if (!base)
        throw std::invalid_argument("unknown basis: " + std::string(tok));
      mono.push_back(*base);
    }
    work.emplace_back(std::move(mono), std::move(coeff));
  }
  return engine.normalize(std::move(work));
}

}  // namespace g2voa
