// Distances, eccentricity, regularity, isomorphism and traversal searches.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "vlgraph/graph.hpp"

namespace vlgraph {

/// Geodesic distance; kUnreachable marks pairs in different components.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

using DistanceMatrix = SquareMatrix<Distance>;

/// All-pairs shortest path lengths, one BFS per source.
DistanceMatrix geodesic_distances(const Graph& g);

/// BFS distances from one source.
std::vector<Distance> bfs_distances(const Graph& g, VertexIndex source);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

enum class SelfCentred { Yes, No, NotApplicable };

/// Eccentricities are kUnreachable (infinite) for every vertex of a
/// disconnected graph; radius/diameter are then kUnreachable as well and
/// self_centred is NotApplicable. The empty graph is also NotApplicable.
struct EccentricitySummary {
  std::vector<Distance> eccentricities;
  Distance radius = kUnreachable;
  Distance diameter = kUnreachable;
  std::vector<VertexIndex> central_vertices;
  std::vector<VertexIndex> peripheral_vertices;
  SelfCentred self_centred = SelfCentred::NotApplicable;

  bool connected() const { return self_centred != SelfCentred::NotApplicable; }
};

EccentricitySummary eccentricity_summary(const Graph& g);

/// Common degree when every vertex has the same degree (0 for the empty graph).
std::optional<std::size_t> regular_degree(const Graph& g);
inline bool is_regular(const Graph& g) { return regular_degree(g).has_value(); }

/// mapping[v] is the image of vertex v of the first graph.
using VertexMap = std::vector<VertexIndex>;

/// Adjacency-preserving bijection from `a` onto `b`, if one exists.
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b);

/// Injective map from `small` into `big` carrying every edge of `small` to an
/// edge of `big` (non-induced subgraph).
std::optional<VertexMap> find_subgraph_isomorphism(const Graph& small, const Graph& big);

bool verify_isomorphism(const Graph& a, const Graph& b, const VertexMap& map);
bool verify_subgraph_embedding(const Graph& small, const Graph& big, const VertexMap& map);

struct HamiltonianOptions {
  std::size_t max_witnesses = 16;
  /// Upper bound on backtracking extensions before giving up.
  std::uint64_t max_steps = 5'000'000;
};

struct HamiltonianResult {
  std::uint64_t undirected_count = 0;
  /// Cycles counted once per traversal direction from the fixed start vertex.
  std::uint64_t directed_count = 0;
  /// Each witness lists the vertices in visiting order, starting at vertex 0;
  /// the return to the start is implicit.
  std::vector<std::vector<VertexIndex>> witnesses;
  /// False when the step budget ran out; counts are then lower bounds.
  bool complete = true;
};

HamiltonianResult hamiltonian_circuits(const Graph& g, const HamiltonianOptions& options = {});

enum class EulerClass { Eulerian, SemiEulerian, Neither, Empty };

std::string_view euler_class_name(EulerClass c);

/// Isolated vertices are ignored; the edges must all lie in one component.
EulerClass euler_classify(const Graph& g);

/// Closed trail for Eulerian graphs, open trail (between the two odd
/// vertices) for semi-Eulerian ones; always follows the lowest-index unused
/// edge. Throws std::invalid_argument for Neither/Empty.
std::vector<VertexIndex> find_euler_trail(const Graph& g);

}  // namespace vlgraph
