#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <type_traits>

namespace hodgehyper {

using Rational = mpq_class;

// Float thresholds. HODGEHYPER_TOL="zero[,bin[,quasi]]" overrides the defaults.
struct Tolerances {
  double zero = 1e-9;   // singular value σ is zero iff σ <= zero * max(1, σ_max)
  double bin = 1e-7;    // eigenvalues closer than bin * max(1, |λ_max|) share a bin
  double quasi = 1e-7;  // principal-angle slack for float eigenspace intersections
};

inline Tolerances parse_tolerances(const std::string& spec) {
  Tolerances t;
  std::stringstream ss(spec);
  std::string item;
  double* slots[] = {&t.zero, &t.bin, &t.quasi};
  for (double* slot : slots) {
    if (!std::getline(ss, item, ',')) break;
    if (item.empty()) continue;
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (end != item.c_str() && v > 0) *slot = v;
  }
  return t;
}

inline const Tolerances& tolerances() {
  static const Tolerances t = [] {
    const char* env = std::getenv("HODGEHYPER_TOL");
    return env ? parse_tolerances(env) : Tolerances{};
  }();
  return t;
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static Rational from_rational(const Rational& q) { return q; }
  static double to_double(const Rational& q) { return q.get_d(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double to_double(double x) { return x; }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// "p/q", "p", or a decimal literal like "0.25"
inline Rational parse_rational(const std::string& text) {
  std::string s = text;
  auto dot = s.find('.');
  if (dot != std::string::npos && s.find('/') == std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string den = "1" + std::string(s.size() - dot - 1, '0');
    Rational q(mpz_class(digits.empty() ? "0" : digits, 10), mpz_class(den, 10));
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hodgehyper
