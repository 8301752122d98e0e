#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace hodgehyper;

namespace {

Hypergraph h0() { return Hypergraph{{"v0"}, {"v1"}, {"v2"}, {"v0", "v1", "v2"}}; }

// Closure by scanning every vertex subset against every hyperedge.
std::set<std::set<Vertex>> closure_by_subsets(const Hypergraph& h) {
  const auto all = h.vertex_set();
  std::vector<Vertex> vs(all.begin(), all.end());
  std::set<std::set<Vertex>> out;
  for (unsigned long mask = 1; mask < (1ul << vs.size()); ++mask) {
    std::set<Vertex> s;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (mask & (1ul << i)) s.insert(vs[i]);
    for (const auto& e : h.edges())
      if (std::includes(e.vertices().begin(), e.vertices().end(), s.begin(), s.end(), VertexLess{})) {
        out.insert(s);
        break;
      }
  }
  return out;
}

std::set<std::set<Vertex>> as_sets(const Hypergraph& h) {
  std::set<std::set<Vertex>> out;
  for (const auto& e : h.edges()) out.emplace(e.vertices().begin(), e.vertices().end());
  return out;
}

// Every sequence of distinct vertices following arrows, by trying all
// sequences up to the length bound.
std::size_t count_paths_brute(const LabelDigraph& g, int max_len, std::set<std::set<Vertex>>* sets) {
  std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
  std::size_t count = 0;
  std::vector<std::size_t> seq;
  std::function<void()> rec = [&] {
    if (!seq.empty()) {
      ++count;
      std::set<Vertex> s;
      for (auto i : seq) s.insert(vs[i]);
      sets->insert(s);
    }
    if (static_cast<int>(seq.size()) == max_len + 1) return;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (std::find(seq.begin(), seq.end(), i) != seq.end()) continue;
      if (!seq.empty() && !g.has_edge(vs[seq.back()], vs[i])) continue;
      seq.push_back(i);
      rec();
      seq.pop_back();
    }
  };
  rec();
  return count;
}

}  // namespace

TEST(Simplex, CanonicalFormAndFaces) {
  Simplex s{"v2", "v0", "v10", "v1"};
  EXPECT_EQ(s.str(), "v0 v1 v2 v10");
  EXPECT_EQ(s.dim(), 3);
  EXPECT_EQ(s.face(0).str(), "v1 v2 v10");
  EXPECT_EQ(s.face(3).str(), "v0 v1 v2");
  EXPECT_TRUE(s.face(2).is_face_of(s));
  EXPECT_THROW(Simplex({"a", "a"}), InvalidHypergraph);
  EXPECT_THROW(Simplex(std::vector<Vertex>{}), InvalidHypergraph);
  EXPECT_TRUE(Simplex({"b"}) < Simplex({"a", "b"}));
}

TEST(Hypergraph, RejectsDuplicates) {
  EXPECT_THROW(Hypergraph({Simplex{"a", "b"}, Simplex{"b", "a"}}), InvalidHypergraph);
}

TEST(Closure, Examples) {
  auto k = closure(Hypergraph{{"v0", "v1", "v2"}});
  EXPECT_EQ(k.as_hypergraph().size(), 7u);
  auto k0 = closure(h0());
  Hypergraph h3{{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}, {"v0", "v1", "v2"}};
  EXPECT_EQ(k0.as_hypergraph(), h3);
  EXPECT_THROW(SimplicialComplex{h0()}, InvalidHypergraph);
}

TEST(Closure, RandomHypergraphsMatchSubsetScanAndAreIdempotent) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto h = random_hypergraph({6, 3, 0.2}, seed);
    auto k = closure(h);
    EXPECT_EQ(as_sets(k.as_hypergraph()), closure_by_subsets(h));
    EXPECT_EQ(closure(k.as_hypergraph()).as_hypergraph(), k.as_hypergraph());
    for (const auto& e : h.edges()) EXPECT_TRUE(k.contains(e));
    // closure = h ⊔ complement
    auto c = complement(h).edges;
    EXPECT_EQ(c.size() + h.size(), k.as_hypergraph().size());
    for (const auto& e : c.edges()) EXPECT_FALSE(h.contains(e));
  }
}

TEST(Closure, Monotone) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto h = random_hypergraph({5, 2, 0.3}, seed);
    SimplexSet bigger = h.edges();
    bigger.insert(Simplex{"v0", "v4"});
    auto small = closure(h).as_hypergraph().edges();
    auto large = closure(Hypergraph(bigger)).as_hypergraph().edges();
    EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST(Complement, Examples) {
  EXPECT_TRUE(complement(closure(h0()).as_hypergraph()).edges.empty());
  EXPECT_EQ(complement(h0()).edges, (Hypergraph{{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}}));
  auto c = complement(Hypergraph{{"a", "b"}});
  EXPECT_EQ(c.edges, (Hypergraph{{"a"}, {"b"}}));
  EXPECT_TRUE(c.covers_vertex_set);
  auto c2 = complement(Hypergraph{{"a"}, {"b"}, {"a", "b"}, {"c"}});
  EXPECT_TRUE(c2.edges.empty());
}

TEST(DigraphBridge, ChainOfThree) {
  auto g = parse_digraph("a -> b\nb -> c\n");
  auto h = digraph_to_hypergraph(g, 2);
  EXPECT_EQ(h, (Hypergraph{{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}));
  EXPECT_EQ(digraph_to_hypergraph(g, 1).size(), 5u);
}

TEST(DigraphBridge, CyclesAreRejectedWithWitness) {
  try {
    digraph_to_hypergraph(parse_digraph("a -> b\nb -> a\n"), 3);
    FAIL() << "expected CyclicDigraph";
  } catch (const CyclicDigraph& e) {
    EXPECT_EQ(e.cycle, (std::vector<std::string>{"a", "b", "a"}));
  }
  EXPECT_THROW(digraph_to_hypergraph(parse_digraph("a -> a\n"), 3), CyclicDigraph);
  EXPECT_THROW(digraph_to_hypergraph(parse_digraph("x -> a\na -> b\nb -> c\nc -> a\n"), 3), CyclicDigraph);
}

TEST(DigraphBridge, IsolatedVertex) {
  EXPECT_EQ(digraph_to_hypergraph(parse_digraph("a\n"), 3), (Hypergraph{{"a"}}));
}

TEST(DigraphBridge, RandomDagsMatchBruteForcePaths) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 60; ++it) {
    LabelDigraph g;
    const int n = 2 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) g.add_vertex("u" + std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge("u" + std::to_string(i), "u" + std::to_string(j));
    const int max_len = static_cast<int>(rng() % 5);
    std::set<std::set<Vertex>> sets;
    const auto paths = count_paths_brute(g, max_len, &sets);
    auto h = digraph_to_hypergraph(g, max_len);
    EXPECT_EQ(h.size(), paths);  // distinct paths give distinct vertex sets
    EXPECT_EQ(as_sets(h), sets);
  }
}

TEST(FaceDigraph, Examples) {
  auto [g1, u1] = face_digraph(Hypergraph{{"a"}});
  EXPECT_EQ(g1.vertices().size(), 1u);
  EXPECT_EQ(g1.edge_count(), 0u);
  EXPECT_EQ(u1.size(), 1u);

  auto [g2, u2] = face_digraph(Hypergraph{{"a", "b"}});
  EXPECT_EQ(g2.vertices().size(), 3u);
  EXPECT_TRUE(g2.has_edge(Simplex{"a", "b"}, Simplex{"a"}));
  EXPECT_TRUE(g2.has_edge(Simplex{"a", "b"}, Simplex{"b"}));
  EXPECT_EQ(g2.edge_count(), 2u);
  EXPECT_EQ(u2, (SimplexSet{Simplex{"a", "b"}}));

  auto [g3, u3] = face_digraph(h0());
  EXPECT_EQ(g3.vertices().size(), 7u);
  EXPECT_EQ(g3.successors(Simplex{"v0", "v1", "v2"}).size(), 3u);
  EXPECT_EQ(g3.successors(Simplex{"v0", "v2"}).size(), 2u);
  EXPECT_EQ(u3.size(), 4u);
}

TEST(FaceDigraph, AlwaysAcyclic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto [g, u] = face_digraph(corpus_hypergraph(seed));
    EXPECT_TRUE(find_cycle(g).empty());
    for (const auto& [a, b] : g.edges()) EXPECT_EQ(a.dim(), b.dim() + 1);
  }
}

TEST(InclusionDigraph, Examples) {
  auto g = inclusion_digraph(Hypergraph{{"a"}, {"a", "b"}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.weight(Simplex{"a", "b"}, Simplex{"a"}), 1);
  auto g2 = inclusion_digraph(Hypergraph{{"a"}, {"a", "b", "c"}});
  EXPECT_EQ(g2.weight(Simplex{"a", "b", "c"}, Simplex{"a"}), 2);
  // strict face pairs of the full triangle: 3 (tri-edge) + 3 (tri-vertex) + 6 (edge-vertex)
  EXPECT_EQ(inclusion_digraph(closure(h0()).as_hypergraph()).edge_count(), 12u);
}

TEST(TextFormat, HypergraphRoundTrip) {
  const std::string canonical = "a\nb\na b\nb c d\n";
  auto h = parse_hypergraph("# comment\nb a\n\n  b\na   # trailing\nd c b\n");
  EXPECT_EQ(format_hypergraph(h), canonical);
  EXPECT_EQ(format_hypergraph(parse_hypergraph(canonical)), canonical);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = corpus_hypergraph(seed);
    EXPECT_EQ(parse_hypergraph(format_hypergraph(r)), r);
  }
}

TEST(TextFormat, HypergraphErrorsCarryLineNumbers) {
  try {
    parse_hypergraph("a\nb\na\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_hypergraph("a a\n"), ParseError);
}

TEST(TextFormat, DigraphRoundTrip) {
  auto g = parse_digraph("z\na -> b -> c\n# x\n");
  const auto text = format_digraph(g);
  EXPECT_EQ(text, "z\na -> b\nb -> c\n");
  EXPECT_EQ(format_digraph(parse_digraph(text)), text);
  EXPECT_THROW(parse_digraph("a ->\n"), ParseError);
}

TEST(TextFormat, DataFilesParse) {
  EXPECT_EQ(read_hypergraph(testutil::data_path("fig1.hg")).size(), 3u + 3u + 9u + 6u);
  EXPECT_EQ(read_hypergraph(testutil::data_path("fig2_h0.hg")).size(), 4u);
  EXPECT_EQ(read_digraph(testutil::data_path("chain3.dg")).edge_count(), 2u);
}

TEST(VertexOrder, DigitRunsCompareNumerically) {
  EXPECT_LT(compare_vertices("v2", "v10"), 0);
  EXPECT_LT(compare_vertices("a", "b"), 0);
  EXPECT_EQ(compare_vertices("x1", "x1"), 0);
  EXPECT_NE(compare_vertices("v01", "v1"), 0);
}
