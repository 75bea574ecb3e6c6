#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2voa {

// Exact arbitrary-precision arithmetic. All computations in this library are
// over Q; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Int q_num(const Q& x) { return boost::multiprecision::numerator(x); }
inline Int q_den(const Q& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Q& x) { return q_den(x) == 1; }

// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string q_to_string(const Q& x) {
  std::string s = q_num(x).str();
  if (!is_integer(x)) {
    s += "/";
    s += q_den(x).str();
  }
  return s;
}

inline Q parse_rational(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Q(Int(std::string(s)));
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Q(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + std::string(s));
  }
}

// Smallest integer >= x.
inline Int q_ceil(const Q& x) {
  Int n = q_num(x), d = q_den(x);
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

inline Q q_abs(const Q& x) { return x < 0 ? Q(-x) : x; }

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

}  // namespace g2voa
