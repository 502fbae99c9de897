#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// ---- random models ---------------------------------------------------------

struct RandomShape {
  int host_nodes = 0;       // 0: drawn from [max_leaves + 1, n + max_leaves]
  int subtree_growth = 0;   // max growth steps per subtree; 0: host_nodes / 2
};

// Host is a random spider or caterpillar with at most max_leaves leaves
// (a single node when max_leaves < 2), rooted at node 0 which is a non-leaf
// whenever the host has three or more nodes. Each subtree grows downward
// from a random top and keeps at most vertex_leafage rooted leaves, so
// vertex_leafage = 1 gives rooted paths. Throws InvalidInput on n < 0,
// max_leaves < 0, or vertex_leafage outside [1, max(1, max_leaves)].
TreeModel gen_random_model(int n, int max_leaves, int vertex_leafage,
                           std::uint64_t seed, const RandomShape& shape = {});

// Realized graph of `model` with weights uniform in [0, max_weight] and
// each vertex in S with probability s_prob.
Instance gen_random_instance(const TreeModel& model, std::uint64_t seed,
                             Weight max_weight = 10, double s_prob = 0.5);

// ---- multicolored clique ---------------------------------------------------

// Edge between v_i^a and v_j^b; classes and indices are 1-based, i < j.
struct MccEdge {
  int i = 0, a = 0, j = 0, b = 0;
  auto operator<=>(const MccEdge&) const = default;
};

struct MccInstance {
  int k = 0;  // classes
  int p = 0;  // vertices per class
  std::vector<MccEdge> edges;
};

// Throws InvalidInput on k < 2, p < 1, out-of-range or same-class edges,
// or duplicates.
void check_mcc(const MccInstance& mcc);

struct MccGadget {
  MccInstance base;
  Instance inst;      // weights doubled: R p, S_V 2, S_E p*m
  TreeModel model;
  int scale = 2;
  bool equivalence_threshold_met = false;  // k >= 10
  std::vector<Vertex> edge_vertex;         // R, one per base edge
  // s_i^{a,c}: s_vertex[i-1][slot(a)][c-1], slot(a) = a-1 or p-a-1 for a<0
  std::vector<std::vector<std::array<Vertex, 2>>> s_vertex;
  std::vector<std::vector<Vertex>> pair_vertex;  // s_ij at [i-1][j-1], i<j

  [[nodiscard]] Vertex s_of(int i, int a, int c) const;
  // S_i^{a}: every s_i^{a',c} with a - p <= a' <= a, a' != 0.
  [[nodiscard]] VertexSet s_window(int i, int a) const;
};

MccGadget mcc_gadget(const MccInstance& mcc);

// clique[i-1] = a_i. Throws InvalidInput unless every pair of chosen
// vertices is joined by a base edge.
VertexSet mcc_certificate(const MccGadget& gadget, std::span<const int> clique);

// Doubled weight the certificate must have: p(m - k(k-9)/2).
Weight mcc_certificate_weight(int k, int p, int m);

// All multicolored cliques by brute force (tests only need tiny k, p).
std::vector<std::vector<int>> multicolored_cliques(const MccInstance& mcc);

// ---- max cut ---------------------------------------------------------------

struct MaxCutGadget {
  Instance base;
  Instance inst;  // unit weights, S = X + Xbar + Z
  TreeModel model;
  std::vector<std::vector<Vertex>> X, Xbar, Y, Ybar, Z, Zbar;  // per base vertex
  std::vector<std::vector<Vertex>> E, Ebar;  // E(v) = (v,x), Ebar(v) = (x,v)
  std::map<std::pair<Vertex, Vertex>, Vertex> arc;
};

// H_G built from the edge list, and a separate path model of it.
MaxCutGadget maxcut_gadget(const Instance& base);

// X(v) + Ybar(v) for v in A, Xbar(v) + Y(v) otherwise, plus every arc
// except those leaving A.
VertexSet maxcut_certificate(const MaxCutGadget& gadget,
                             std::span<const Vertex> a_side);

int cut_size(const Instance& base, std::span<const Vertex> a_side);

}  // namespace sfvs
