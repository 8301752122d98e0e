#pragma once

#include <random>
#include <string>
#include <vector>

#include <hodgehyper/hodgehyper.hpp>

namespace testutil {

using hodgehyper::Matrix;
using hodgehyper::Rational;

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Matrix<Rational> random_int_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Low-rank integer matrix: product of r×k and k×c factors.
inline Matrix<Rational> random_low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_int_matrix(r, k, rng, -3, 3) * random_int_matrix(k, c, rng, -3, 3);
}

// Plain fraction Gaussian elimination, kept separate from the library's
// fraction-free routine so the two can be compared.
inline std::size_t naive_rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

inline std::string data_path(const std::string& name) { return std::string(HODGEHYPER_DATA_DIR) + "/" + name; }

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testutil
