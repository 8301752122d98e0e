#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypergraph.hpp"
#include "weight.hpp"

namespace hodgehyper {

// Parameters of the random-suite hypergraph generator.
struct RandomParams {
  int vertices = 6;  // V
  int max_dim = 3;   // d
  double p = 0.3;
};

inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Each nonempty subset of {v0..v(V-1)} with at most d+1 elements is kept with
// probability p; an empty draw falls back to {v0}.
inline Hypergraph random_hypergraph(const RandomParams& params, std::mt19937_64& rng) {
  std::vector<Simplex> edges;
  const unsigned full = 1u << params.vertices;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (__builtin_popcount(mask) > params.max_dim + 1) continue;
    if (uniform01(rng) >= params.p) continue;
    std::vector<Vertex> vs;
    for (int i = 0; i < params.vertices; ++i)
      if (mask & (1u << i)) vs.push_back("v" + std::to_string(i));
    edges.emplace_back(std::move(vs));
  }
  if (edges.empty()) edges.emplace_back(std::vector<Vertex>{"v0"});
  return Hypergraph(edges);
}

inline Hypergraph random_hypergraph(const RandomParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_hypergraph(params, rng);
}

// w(σ) = k/m with k in 1..9, m in 1..4 on every simplex of the closure;
// C drawn from {1, 2, 1/2, 3}.
inline EvaluationWeight random_evaluation_weight(const Hypergraph& h, std::mt19937_64& rng) {
  static const Rational scales[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3)};
  EvaluationWeight w;
  w.scale = scales[rng() % 4];
  auto k = closure(h);
  for (int n = 0; n <= k.top_dim(); ++n)
    for (const auto& s : k.simplices(n)) {
      Rational v(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4));
      v.canonicalize();
      w.values[s] = v;
    }
  return w;
}

inline EvaluationWeight random_evaluation_weight(const Hypergraph& h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_evaluation_weight(h, rng);
}

// The acceptance corpus: V = 6, d = 3, p cycling through 0.15, 0.3, 0.45.
inline RandomParams corpus_params(std::uint64_t seed) {
  static const double ps[] = {0.15, 0.3, 0.45};
  return {6, 3, ps[seed % 3]};
}

inline Hypergraph corpus_hypergraph(std::uint64_t seed) { return random_hypergraph(corpus_params(seed), seed); }

}  // namespace hodgehyper
