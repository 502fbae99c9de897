#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// Ancestor queries on the host plus the vertex order u <= v iff
// r(u) is a descendant-or-self of r(v).
class OrderIndex {
 public:
  OrderIndex(const Instance& inst, const ExpandedTreeModel& em);

  // x <=_T y: x lies in the subtree rooted at y.
  [[nodiscard]] bool node_le(Node x, Node y) const {
    return tin_[y] <= tin_[x] && tout_[x] <= tout_[y];
  }
  [[nodiscard]] bool node_lt(Node x, Node y) const {
    return x != y && node_le(x, y);
  }
  [[nodiscard]] bool le(Vertex u, Vertex v) const {
    return node_le(em_->root_of[u], em_->root_of[v]);
  }
  [[nodiscard]] bool lt(Vertex u, Vertex v) const { return u != v && le(u, v); }
  [[nodiscard]] bool comparable(Vertex u, Vertex v) const {
    return le(u, v) || le(v, u);
  }

  // ◁u: maximal proper predecessors.
  [[nodiscard]] const std::vector<Vertex>& pred_max(Vertex u) const {
    return children_[u];
  }
  // ◁uw for an edge with u < w: max(V_u \ (N[u] ∩ N(w))).
  [[nodiscard]] const std::vector<Vertex>& pred_edge(Vertex u, Vertex w) const;

  // Parent in the vertex forest (nearest proper successor), -1 at a top.
  [[nodiscard]] Vertex successor(Vertex u) const { return vparent_[u]; }
  [[nodiscard]] const std::vector<Vertex>& tops() const { return tops_; }
  // V_u in vertex-forest preorder; u first.
  [[nodiscard]] std::span<const Vertex> below(Vertex u) const {
    return {preorder_.data() + vtin_[u],
            static_cast<std::size_t>(vtout_[u] - vtin_[u])};
  }
  [[nodiscard]] int depth(Vertex u) const { return vdepth_[u]; }

  [[nodiscard]] const ExpandedTreeModel& model() const { return *em_; }
  [[nodiscard]] const Instance& instance() const { return *inst_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adj_(u, v); }

 private:
  const Instance* inst_;
  const ExpandedTreeModel* em_;
  AdjacencyMatrix adj_;
  std::vector<int> tin_, tout_;
  std::vector<Vertex> vparent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> tops_;
  std::vector<Vertex> preorder_;
  std::vector<int> vtin_, vtout_, vdepth_;
  // pred_edge_[u][i] belongs to the i-th neighbour of u (only those > u).
  std::vector<std::vector<std::vector<Vertex>>> pred_edge_;
};

// min_T over the leaves of U mapped back to owners, applied twice.
VertexSet f_le2(const OrderIndex& oi, std::span<const Vertex> U);

// V<V1|V2|V3> and its two variants on rooted-path models. An absent V1
// drops the lower witness, an absent V2 drops the middle one and keeps
// l(x) < r(x). Throws NotRootedPath otherwise; both absent is invalid.
VertexSet interval_set(const OrderIndex& oi,
                       const std::optional<VertexSet>& v1,
                       const std::optional<VertexSet>& v2,
                       const VertexSet& v3);

// Order machinery specific to rooted-path models: the single leaf l(u) and
// the umbrella u◁v.
class RootedPathIndex {
 public:
  explicit RootedPathIndex(const OrderIndex& oi);

  [[nodiscard]] Node leaf(Vertex u) const { return leaf_[u]; }
  // Highest u' with u <= u' < v and l(u') < r(u) <= r(u'); -1 if none.
  // Requires u < v.
  [[nodiscard]] Vertex umbrella(Vertex u, Vertex v) const;
  [[nodiscard]] const OrderIndex& order() const { return *oi_; }

 private:
  const OrderIndex* oi_;
  std::vector<Node> leaf_;
  // umb_[u][k] answers v = the (k+1)-th vertex-forest ancestor of u.
  std::vector<std::vector<Vertex>> umb_;
};

}  // namespace sfvs
