#pragma once

#include <unordered_map>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/order_index.hpp"
#include "sfvs/solver_common.hpp"
#include "sfvs/solver_leafage.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// Anchor V_u (v == u) or V_{u,v} (u < v, v not in S), conditioned on at
// most one vertex y (-1 for none).
struct RPKey {
  Vertex u = -1;
  Vertex v = -1;
  Vertex y = -1;
  bool operator==(const RPKey&) const = default;
  [[nodiscard]] bool plain() const { return u == v; }
};

struct RPKeyHash {
  std::size_t operator()(const RPKey& k) const noexcept;
};

// One side of a recurrence: the key's own vertex (when included), the
// vertices that join wholesale, and the subproblems.
struct RPBranch {
  Weight own = 0;
  VertexSet bulk;
  std::vector<RPKey> children;
};

class RootedPathDP {
 public:
  RootedPathDP(const RootedPathIndex& rp, SolveOptions opts = {});

  // Key with the anchor pushed down past S vertices: while v != u and v is
  // in S, v becomes u◁v (or u when that does not exist).
  [[nodiscard]] RPKey make_key(Vertex u, Vertex v, Vertex y) const;

  [[nodiscard]] RPBranch branch(const RPKey& key, Branch which) const;
  Weight evaluate(const RPKey& key);
  [[nodiscard]] VertexSet reconstruct(const RPKey& key) const;
  VertexSet solve();

  // V_{u,v}: V_u plus the non-S vertices whose path runs from below r(u)
  // past it up to at most r(v). v == u gives V_u.
  [[nodiscard]] VertexSet anchor_set(Vertex u, Vertex v) const;

  [[nodiscard]] std::size_t table_size() const { return table_.size(); }
  // Recheck every entry against its reconstruction (small inputs only).
  void run_debug_checks() const;

 private:
  void check_key(const RPKey& key) const;
  [[nodiscard]] Vertex raw_umbrella(Vertex u, Vertex v) const;

  const RootedPathIndex& rp_;
  const OrderIndex& oi_;
  const Instance& inst_;
  SolveOptions opts_;
  std::size_t cap_;
  std::unordered_map<RPKey, DPEntry, RPKeyHash> table_;
};

// The TreeModel overload validates, pads the declared root if it is a
// leaf, and expands keeping that root (so subtrees stay rooted paths).
// Throws NotRootedPath if some subtree has more than one leaf.
Solution solve_rooted_path(const Instance& inst, const ExpandedTreeModel& em,
                           const SolveOptions& opts = {},
                           SolveStats* stats = nullptr);
Solution solve_rooted_path(const Instance& inst, const TreeModel& model,
                           const SolveOptions& opts = {},
                           SolveStats* stats = nullptr);

}  // namespace sfvs
