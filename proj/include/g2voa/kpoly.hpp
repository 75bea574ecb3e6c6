#pragma once

#include <string>
#include <vector>

#include "g2voa/rational.hpp"

namespace g2voa {

// Polynomial in the central symbol K with rational coefficients. Coefficients
// of enveloping-algebra elements live here until a vacuum application
// specializes K to a level.
struct KPoly {
  std::vector<Q> c;  // c[i] * K^i, no trailing zeros

  KPoly() = default;
  explicit KPoly(Q constant) {
    if (constant != 0) c.push_back(std::move(constant));
  }
  explicit KPoly(long long constant) : KPoly(Q(constant)) {}

  static KPoly k() {
    KPoly p;
    p.c = {Q(0), Q(1)};
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  friend bool operator==(const KPoly& a, const KPoly& b) { return a.c == b.c; }

  KPoly& operator+=(const KPoly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), Q(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  KPoly& operator-=(const KPoly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), Q(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator-(const KPoly& a) {
    KPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend KPoly operator*(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    KPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Q(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }

  Q eval(const Q& k) const {
    Q acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * k + c[i];
    return acc;
  }

  bool is_constant() const { return c.size() <= 1; }
  Q constant_value() const { return c.empty() ? Q(0) : c[0]; }

  // "p/q" for constants, "(c0 + c1*K + c2*K^2)" otherwise; zero terms are
  // omitted so the form is canonical.
  std::string to_string() const {
    if (is_zero()) return "0";
    if (is_constant()) return q_to_string(c[0]);
    std::string s = "(";
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      if (!first) s += " + ";
      first = false;
      s += q_to_string(c[i]);
      if (i == 1) s += "*K";
      if (i > 1) s += "*K^" + std::to_string(i);
    }
    s += ")";
    return s;
  }
};

}  // namespace g2voa
