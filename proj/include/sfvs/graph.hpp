#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sfvs {

using Vertex = int;
using Weight = std::int64_t;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Vertex-weighted undirected simple graph with a terminal set S.
struct Instance {
  int n = 0;
  std::vector<std::vector<Vertex>> adjacency;  // sorted, symmetric, loop-free
  std::vector<Weight> weight;
  std::vector<char> in_s;

  [[nodiscard]] int num_vertices() const { return n; }
  [[nodiscard]] std::size_t num_edges() const;
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] bool is_terminal(Vertex v) const { return in_s[v] != 0; }
  [[nodiscard]] Weight total_weight() const;
  [[nodiscard]] Weight weight_of(std::span<const Vertex> vertices) const;
  // Edges as (u, v) with u < v, lexicographically sorted.
  [[nodiscard]] std::vector<Edge> edges() const;
};

// A maximum-weight S-forest and its complement.
struct Solution {
  VertexSet kept;
  Weight kept_weight = 0;
  VertexSet removed;
  Weight removed_weight = 0;
};

// Normalizes adjacency (sorted, deduplicated). Throws InvalidInput on an
// out-of-range endpoint, a self-loop, a negative weight, or list-size
// mismatch.
Instance build_instance(int n, std::span<const Edge> edges,
                        std::span<const Weight> weights,
                        std::span<const char> s_flags);

// Convenience for tests and generators: unit weights, S given as a list.
Instance build_instance(int n, std::span<const Edge> edges,
                        std::span<const Vertex> terminals = {});

Solution make_solution(const Instance& inst, VertexSet kept);

// True iff G[kept] has no cycle through a vertex of S. A cycle through v
// exists iff v lies in a biconnected block with at least three vertices,
// so this runs one iterative Tarjan pass over the induced subgraph.
bool is_s_forest(const Instance& inst, std::span<const Vertex> kept);

// True iff G[kept] contains a triangle with a vertex of S. On chordal
// graphs this is equivalent to !is_s_forest.
bool has_s_triangle(const Instance& inst, std::span<const Vertex> kept);

std::vector<VertexSet> connected_components(const Instance& inst);

// Induced subgraph on `vertices` (sorted). Local vertex i corresponds to
// vertices[i].
Instance induced_subgraph(const Instance& inst,
                          std::span<const Vertex> vertices);

// Dense adjacency bit matrix for hot loops.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(const Instance& inst);
  [[nodiscard]] bool operator()(Vertex u, Vertex v) const {
    return bits_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Set helpers on sorted vertex lists.
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a,
                           std::span<const Vertex> b);
bool contains(std::span<const Vertex> sorted, Vertex v);

}  // namespace sfvs
