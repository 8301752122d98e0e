#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"

namespace hodgehyper {

template <class Node, class Less = std::less<Node>>
class Digraph {
 public:
  using NodeSet = std::set<Node, Less>;

  void add_vertex(const Node& v) { vertices_.insert(v); }
  void add_edge(const Node& a, const Node& b) {
    vertices_.insert(a);
    vertices_.insert(b);
    out_[a].insert(b);
  }

  const NodeSet& vertices() const { return vertices_; }

  const NodeSet& successors(const Node& v) const {
    static const NodeSet none;
    auto it = out_.find(v);
    return it == out_.end() ? none : it->second;
  }

  bool has_edge(const Node& a, const Node& b) const { return successors(a).count(b) > 0; }

  std::vector<std::pair<Node, Node>> edges() const {
    std::vector<std::pair<Node, Node>> out;
    for (const auto& [a, succ] : out_)
      for (const auto& b : succ) out.emplace_back(a, b);
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& kv : out_) n += kv.second.size();
    return n;
  }

 private:
  NodeSet vertices_;
  std::map<Node, NodeSet, Less> out_;
};

template <class Node, class Less = std::less<Node>>
class WeightedDigraph : public Digraph<Node, Less> {
 public:
  void add_edge(const Node& a, const Node& b, int w) {
    Digraph<Node, Less>::add_edge(a, b);
    weight_[{a, b}] = w;
  }
  int weight(const Node& a, const Node& b) const { return weight_.at({a, b}); }

 private:
  std::map<std::pair<Node, Node>, int> weight_;
};

using LabelDigraph = Digraph<Vertex, VertexLess>;

// Any closed path (self-loops included) as a vertex sequence a ... a, or empty.
template <class Node, class Less>
std::vector<Node> find_cycle(const Digraph<Node, Less>& g) {
  std::map<Node, int, Less> color;  // 0 unseen, 1 on stack, 2 done
  std::vector<Node> stack;
  std::vector<Node> cycle;
  std::function<bool(const Node&)> visit = [&](const Node& v) {
    color[v] = 1;
    stack.push_back(v);
    for (const auto& w : g.successors(v)) {
      if (color[w] == 1) {
        auto it = std::find_if(stack.begin(), stack.end(),
                               [&](const Node& x) { return !Less{}(x, w) && !Less{}(w, x); });
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (color[w] == 0 && visit(w)) return true;
    }
    stack.pop_back();
    color[v] = 2;
    return false;
  };
  for (const auto& v : g.vertices())
    if (color[v] == 0 && visit(v)) return cycle;
  return {};
}

// Vertex sets of the allowed elementary paths with at most max_len arrows.
inline Hypergraph digraph_to_hypergraph(const LabelDigraph& g, int max_len) {
  if (max_len < 0) throw std::invalid_argument("digraph_to_hypergraph: max_len must be >= 0");
  if (auto cyc = find_cycle(g); !cyc.empty()) throw CyclicDigraph(cyc);
  SimplexSet edges;
  std::size_t paths = 0;
  std::vector<Vertex> path;
  std::function<void(const Vertex&)> extend = [&](const Vertex& v) {
    path.push_back(v);
    edges.insert(Simplex(path));
    ++paths;
    if (static_cast<int>(path.size()) <= max_len)
      for (const auto& w : g.successors(v)) extend(w);
    path.pop_back();
  };
  for (const auto& v : g.vertices()) extend(v);
  if (edges.size() != paths) throw InternalInconsistency("two allowed paths share a vertex set");
  return Hypergraph(std::move(edges));
}

// The pair (face digraph of the closure, vertices that are hyperedges).
inline std::pair<Digraph<Simplex>, SimplexSet> face_digraph(const Hypergraph& h) {
  Digraph<Simplex> g;
  const auto k = closure(h);
  for (const auto& s : k.as_hypergraph().edges()) {
    g.add_vertex(s);
    if (s.dim() > 0)
      for (std::size_t i = 0; i < s.size(); ++i) g.add_edge(s, s.face(i));
  }
  return {g, h.edges()};
}

// Strict inclusions between hyperedges, weighted by the drop in dimension.
inline WeightedDigraph<Simplex> inclusion_digraph(const Hypergraph& h) {
  WeightedDigraph<Simplex> g;
  for (const auto& s : h.edges()) g.add_vertex(s);
  for (const auto& s : h.edges())
    for (const auto& t : h.edges())
      if (s != t && t.is_face_of(s)) g.add_edge(s, t, s.dim() - t.dim());
  return g;
}

}  // namespace hodgehyper
