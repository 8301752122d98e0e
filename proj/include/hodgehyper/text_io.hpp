#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"

namespace hodgehyper {

namespace detail {

inline std::vector<std::string> tokens_of(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// One hyperedge per line, whitespace-separated labels, '#' starts a comment.
inline Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<Simplex> edges;
  SimplexSet seen;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    try {
      Simplex s(toks);
      if (!seen.insert(s).second) throw ParseError("duplicate hyperedge {" + s.str() + "}", lineno);
      edges.push_back(std::move(s));
    } catch (const InvalidHypergraph& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return Hypergraph(edges);
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

inline Hypergraph read_hypergraph(const std::string& path) { return parse_hypergraph(detail::slurp(path)); }

// Canonical form: hyperedges by dimension then lexicographically.
inline std::string format_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& e : h.edges()) out += e.str() + '\n';
  return out;
}

// "a -> b" per line; a line holding a single label declares an isolated vertex.
// Chains "a -> b -> c" are accepted.
inline LabelDigraph parse_digraph(std::istream& in) {
  LabelDigraph g;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = detail::tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() % 2 == 0) throw ParseError("expected 'a -> b'", lineno);
    for (std::size_t i = 0; i < toks.size(); i += 2) {
      if (toks[i] == "->") throw ParseError("missing vertex label", lineno);
      if (i + 1 < toks.size() && toks[i + 1] != "->") throw ParseError("expected '->' after " + toks[i], lineno);
    }
    g.add_vertex(toks[0]);
    for (std::size_t i = 2; i < toks.size(); i += 2) g.add_edge(toks[i - 2], toks[i]);
  }
  return g;
}

inline LabelDigraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  return parse_digraph(in);
}

inline LabelDigraph read_digraph(const std::string& path) { return parse_digraph(detail::slurp(path)); }

// Canonical form: isolated vertices first, then edges in order.
inline std::string format_digraph(const LabelDigraph& g) {
  VertexSet touched;
  for (const auto& [a, b] : g.edges()) {
    touched.insert(a);
    touched.insert(b);
  }
  std::string out;
  for (const auto& v : g.vertices())
    if (!touched.count(v)) out += v + '\n';
  for (const auto& [a, b] : g.edges()) out += a + " -> " + b + '\n';
  return out;
}

}  // namespace hodgehyper
