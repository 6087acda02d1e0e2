#include "vlgraph/classical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracles.hpp"

namespace vlgraph {
namespace {

PitchClassSet set_of(std::vector<int> v) { return PitchClassSet::from_values(v); }
Graph graph_of(std::string_view preset) { return build_graph(preset_scale(preset)).graph(); }

Graph cube() {
  Graph g(8);
  for (VertexIndex v = 0; v < 8; ++v)
    for (VertexIndex bit : {1U, 2U, 4U})
      if (!(v & bit)) g.add_edge(v, v | bit);
  return g;
}

TEST(GeodesicTest, DiatonicDistances) {
  const auto vl = build_graph(preset_scale("major"));
  const auto d = geodesic_distances(vl.graph());
  const auto c = *vl.find(Triad(TriadQuality::Major, PitchClass(0)));
  const auto b = *vl.find(Triad(TriadQuality::Diminished, PitchClass(11)));
  EXPECT_EQ(d(c, b), 3u);
  for (VertexIndex v = 0; v < vl.order(); ++v) EXPECT_EQ(d(v, v), 0u);
  EXPECT_TRUE(d.is_symmetric());
}

TEST(GeodesicTest, WholeToneUnreachable) {
  const auto d = geodesic_distances(graph_of("whole-tone"));
  EXPECT_EQ(d(0, 1), kUnreachable);
}

TEST(EccentricityTest, MixolydianAugmented) {
  const auto vl = build_graph(preset_scale("mixolydian-augmented"));
  const auto s = eccentricity_summary(vl.graph());
  // F major is adjacent to d, f and a, which cover Bb, do and C+, so the
  // radius is 2 (published figure: 3).
  const auto f_major = *vl.find(Triad(TriadQuality::Major, PitchClass(5)));
  EXPECT_EQ(s.eccentricities[f_major], 2u);
  EXPECT_EQ(s.radius, 2u);
  EXPECT_EQ(s.diameter, 4u);
  EXPECT_EQ(s.self_centred, SelfCentred::No);
}

TEST(EccentricityTest, DiatonicSelfCentred) {
  const auto s = eccentricity_summary(graph_of("major"));
  for (auto e : s.eccentricities) EXPECT_EQ(e, 3u);
  EXPECT_EQ(s.self_centred, SelfCentred::Yes);
  EXPECT_EQ(s.central_vertices.size(), 7u);
  EXPECT_EQ(s.peripheral_vertices.size(), 7u);
}

TEST(EccentricityTest, EnigmaticMinorIsAPath) {
  const auto g = graph_of("enigmatic-minor");
  ASSERT_EQ(g.order(), 5u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(is_connected(g));
  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  const auto s = eccentricity_summary(g);
  EXPECT_EQ(s.radius, 2u);
  EXPECT_EQ(s.diameter, 4u);
  EXPECT_EQ(s.self_centred, SelfCentred::No);
  EXPECT_EQ(s.central_vertices.size(), 1u);
  EXPECT_EQ(s.peripheral_vertices.size(), 2u);
}

TEST(EccentricityTest, DegenerateGraphs) {
  const auto single = eccentricity_summary(Graph(1));
  EXPECT_EQ(single.radius, 0u);
  EXPECT_EQ(single.self_centred, SelfCentred::Yes);
  const auto disconnected = eccentricity_summary(graph_of("whole-tone"));
  EXPECT_EQ(disconnected.self_centred, SelfCentred::NotApplicable);
  EXPECT_EQ(disconnected.eccentricities, (std::vector<Distance>{kUnreachable, kUnreachable}));
  EXPECT_EQ(eccentricity_summary(Graph(0)).self_centred, SelfCentred::NotApplicable);
}

TEST(RegularTest, Examples) {
  EXPECT_EQ(regular_degree(graph_of("hexatonic")), 3u);
  EXPECT_EQ(regular_degree(graph_of("major")), 2u);
  EXPECT_FALSE(is_regular(graph_of("harmonic-minor")));
  EXPECT_FALSE(is_regular(graph_of("chromatic")));
  EXPECT_TRUE(is_regular(Graph(0)));
}

TEST(IsomorphismTest, CMajorPlusSharps) {
  const auto csharp = build_graph(set_of({0, 1, 2, 4, 5, 7, 9, 11})).graph();
  const auto fsharp = build_graph(set_of({0, 2, 4, 5, 6, 7, 9, 11})).graph();
  const auto gsharp = build_graph(set_of({0, 2, 4, 5, 7, 8, 9, 11})).graph();
  const auto iso = find_isomorphism(csharp, fsharp);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(verify_isomorphism(csharp, fsharp, *iso));
  EXPECT_FALSE(find_isomorphism(fsharp, gsharp));
  const auto emb = find_subgraph_isomorphism(fsharp, gsharp);
  ASSERT_TRUE(emb);
  EXPECT_TRUE(verify_subgraph_embedding(fsharp, gsharp, *emb));
}

TEST(IsomorphismTest, SelfAndNonIsomorphicSameDegrees) {
  const auto g = graph_of("harmonic-minor");
  EXPECT_TRUE(find_isomorphism(g, g));
  // C6 and two triangles share a degree sequence but are not isomorphic.
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(find_isomorphism(oracle::cycle_graph(6), two_triangles));
  EXPECT_TRUE(find_isomorphism(Graph(0), Graph(0)));
}

TEST(SubgraphTest, OddCycleDoesNotEmbedInCube) {
  EXPECT_FALSE(find_subgraph_isomorphism(graph_of("major"), graph_of("hexatonic")));
  EXPECT_TRUE(find_subgraph_isomorphism(Graph(0), graph_of("hexatonic")));
  EXPECT_TRUE(find_subgraph_isomorphism(oracle::cycle_graph(6), graph_of("hexatonic")));
}

TEST(IsomorphismProperty, RandomRelabellingsAreFound) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 14;
    const auto g = oracle::random_graph(n, 0.35, rng);
    std::vector<VertexIndex> perm(n);
    std::iota(perm.begin(), perm.end(), VertexIndex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = oracle::permuted(g, perm);
    const auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso);
    ASSERT_TRUE(verify_isomorphism(g, h, *iso));
    ASSERT_TRUE(find_subgraph_isomorphism(g, h));
  }
}

TEST(IsomorphismProperty, DistinctEdgeCountsNeverMatch) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_connected_graph(8, 0.3, rng);
    for (VertexIndex u = 0; u < 8; ++u)
      for (VertexIndex v = u + 1; v < 8; ++v)
        if (!g.has_edge(u, v)) {
          const auto h = g.with_edge(u, v);
          ASSERT_FALSE(find_isomorphism(g, h));
          ASSERT_TRUE(find_subgraph_isomorphism(g, h));
          ASSERT_FALSE(find_subgraph_isomorphism(h, g));
        }
  }
}

TEST(IsomorphismTest, ChromaticAgainstItselfIsFast) {
  const auto g = graph_of("chromatic");
  const auto h = build_graph(preset_scale("chromatic")).graph();
  const auto iso = find_isomorphism(g, h);
  ASSERT_TRUE(iso);
}

TEST(HamiltonianTest, HexatonicCube) {
  const auto r = hamiltonian_circuits(graph_of("hexatonic"));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.directed_count, 12u);
  EXPECT_EQ(r.undirected_count, 6u);
  EXPECT_EQ(r.witnesses.size(), 6u);
  EXPECT_EQ(hamiltonian_circuits(cube()).undirected_count, 6u);
}

TEST(HamiltonianTest, CycleAndSmallGraphs) {
  const auto r = hamiltonian_circuits(graph_of("major"));
  EXPECT_EQ(r.undirected_count, 1u);
  EXPECT_EQ(r.directed_count, 2u);
  EXPECT_EQ(hamiltonian_circuits(Graph(2, {{0, 1}})).directed_count, 0u);
  EXPECT_EQ(hamiltonian_circuits(oracle::complete_graph(3)).undirected_count, 1u);
  // K5: (5-1)!/2 = 12.
  EXPECT_EQ(hamiltonian_circuits(oracle::complete_graph(5)).undirected_count, 12u);
}

TEST(HamiltonianTest, StepBudget) {
  HamiltonianOptions opts;
  opts.max_steps = 100;
  const auto r = hamiltonian_circuits(graph_of("chromatic"), opts);
  EXPECT_FALSE(r.complete);
}

TEST(HamiltonianProperty, WitnessesAndPermutationOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto g = oracle::random_graph(n, 0.6, rng);
    HamiltonianOptions opts;
    opts.max_witnesses = 1000;
    const auto r = hamiltonian_circuits(g, opts);
    ASSERT_EQ(r.directed_count, oracle::hamiltonian_permutation_count(g));
    ASSERT_EQ(r.witnesses.size(), r.undirected_count);
    for (const auto& w : r.witnesses) {
      ASSERT_EQ(w.size(), n);
      auto sorted = w;
      std::sort(sorted.begin(), sorted.end());
      ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t k = 0; k < n; ++k) ASSERT_TRUE(g.has_edge(w[k], w[(k + 1) % n]));
    }
  }
}

void expect_uses_every_edge_once(const Graph& g, const std::vector<VertexIndex>& trail) {
  ASSERT_EQ(trail.size(), g.size() + 1);
  std::map<Edge, int> used;
  for (std::size_t k = 0; k + 1 < trail.size(); ++k) {
    ++used[{std::min(trail[k], trail[k + 1]), std::max(trail[k], trail[k + 1])}];
  }
  ASSERT_EQ(used.size(), g.size());
  for (const auto& e : g.edges()) ASSERT_EQ(used[e], 1);
}

TEST(EulerTest, Classification) {
  EXPECT_EQ(euler_classify(graph_of("octatonic")), EulerClass::Eulerian);
  EXPECT_EQ(euler_classify(graph_of("hexatonic")), EulerClass::Neither);
  EXPECT_EQ(euler_classify(graph_of("whole-tone")), EulerClass::Empty);
  EXPECT_EQ(euler_classify(graph_of("enigmatic-minor")), EulerClass::SemiEulerian);
  // Two disjoint triangles: even degrees, but edges in two components.
  EXPECT_EQ(euler_classify(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})), EulerClass::Neither);
  // An isolated vertex does not matter.
  EXPECT_EQ(euler_classify(Graph(4, {{0, 1}, {1, 2}, {0, 2}})), EulerClass::Eulerian);
}

TEST(EulerTest, DiatonicTrailIsTheCycle) {
  const auto g = graph_of("major");
  const auto trail = find_euler_trail(g);
  ASSERT_EQ(trail.size(), 8u);
  EXPECT_EQ(trail.front(), 0u);
  EXPECT_EQ(trail.back(), 0u);
  expect_uses_every_edge_once(g, trail);
}

TEST(EulerTest, OctatonicClosedTrail) {
  const auto g = graph_of("octatonic");
  const auto trail = find_euler_trail(g);
  EXPECT_EQ(trail.front(), trail.back());
  expect_uses_every_edge_once(g, trail);
}

TEST(EulerTest, SemiEulerianOpenTrail) {
  const auto g = graph_of("enigmatic-minor");
  const auto trail = find_euler_trail(g);
  EXPECT_NE(trail.front(), trail.back());
  expect_uses_every_edge_once(g, trail);
  EXPECT_THROW(find_euler_trail(graph_of("hexatonic")), std::invalid_argument);
  EXPECT_THROW(find_euler_trail(graph_of("whole-tone")), std::invalid_argument);
}

TEST(EulerProperty, RandomGraphs) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_connected_graph(3 + trial % 9, 0.4, rng);
    const auto cls = euler_classify(g);
    if (cls == EulerClass::Eulerian || cls == EulerClass::SemiEulerian) {
      const auto trail = find_euler_trail(g);
      expect_uses_every_edge_once(g, trail);
      ASSERT_EQ(trail.front() == trail.back(), cls == EulerClass::Eulerian);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(DistanceProperty, TriangleInequalityAndEccentricity) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_connected_graph(2 + trial % 12, 0.2, rng);
    const auto d = geodesic_distances(g);
    const std::size_t n = g.order();
    for (VertexIndex u = 0; u < n; ++u) {
      const auto layered = oracle::layer_distances(g, u);
      for (VertexIndex v = 0; v < n; ++v) {
        ASSERT_EQ(static_cast<int>(d(u, v)), layered[v]);
        for (VertexIndex w = 0; w < n; ++w) ASSERT_LE(d(u, w), d(u, v) + d(v, w));
      }
    }
    const auto s = eccentricity_summary(g);
    for (VertexIndex u = 0; u < n; ++u) {
      Distance worst = 0;
      for (VertexIndex v = 0; v < n; ++v) worst = std::max(worst, d(u, v));
      ASSERT_EQ(s.eccentricities[u], worst);
    }
    ASSERT_LE(s.radius, s.diameter);
    ASSERT_LE(s.diameter, 2 * s.radius);
  }
}

}  // namespace
}  // namespace vlgraph
