#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/order_index.hpp"
#include "sfvs/solver_common.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// Table key: the set V_u conditioned on the clique y kept alongside it.
struct DPKey {
  Vertex u = -1;
  VertexSet y;
  bool operator==(const DPKey&) const = default;
};

struct DPKeyHash {
  std::size_t operator()(const DPKey& k) const noexcept;
};

enum class Branch : std::uint8_t { kExclude, kInclude };

struct DPEntry {
  Weight weight = 0;
  Branch choice = Branch::kExclude;
};

using DPTable = std::unordered_map<DPKey, DPEntry, DPKeyHash>;

// Memoized recurrence for max-weight S-forests on an expanded model with
// few host leaves. One instance per connected component.
class LeafageDP {
 public:
  LeafageDP(const OrderIndex& oi, SolveOptions opts = {});

  // Optimum weight of A(V_u, y); fills the table for every key it needs.
  Weight evaluate(const DPKey& key);
  // Kept set behind a solved key; throws std::logic_error on a dangling
  // child key.
  [[nodiscard]] VertexSet reconstruct(const DPKey& key) const;
  // Union of the optima at every top of the vertex forest.
  VertexSet solve();

  [[nodiscard]] bool include_allowed(const DPKey& key) const;
  [[nodiscard]] std::vector<DPKey> child_keys(const DPKey& key,
                                              Branch branch) const;
  [[nodiscard]] const DPTable& table() const { return table_; }
  [[nodiscard]] int max_conditioning() const { return 2 * leafage_ + 1; }

  // Debug pass: every entry's reconstruction has the stored weight, is a
  // disjoint union of its children's, and keeps y feasible; replacing a
  // conditioning set by its representatives never changes a child value.
  void run_debug_checks();

 private:
  DPKey make_key(Vertex u, VertexSet y) const;
  void check_key(const DPKey& key) const;

  const OrderIndex& oi_;
  const Instance& inst_;
  SolveOptions opts_;
  int leafage_;
  bool unreduced_ = false;
  DPTable table_;
};

// Entry points. The TreeModel overload validates, pads a trivial host and
// expands with the first non-leaf node as root.
Solution solve_bounded_leafage(const Instance& inst, const ExpandedTreeModel& em,
                               const SolveOptions& opts = {},
                               SolveStats* stats = nullptr);
Solution solve_bounded_leafage(const Instance& inst, const TreeModel& model,
                               const SolveOptions& opts = {},
                               SolveStats* stats = nullptr);

}  // namespace sfvs
