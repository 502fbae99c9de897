#pragma once

#include <cstddef>
#include <functional>

#include "sfvs/graph.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

struct SolveOptions {
  // Memo entries allowed per component before ResourceExceeded.
  std::size_t max_table_entries = 30'000'000;
  // Re-derive every table entry from its reconstruction and cross-check
  // the structural identities the recurrences rely on. Small inputs only.
  bool debug_checks = false;
};

struct SolveStats {
  int leafage = 0;         // host leaves of the expanded model
  int vertex_leafage = 0;  // max leaves of one expanded subtree
  int components = 0;
  std::size_t table_entries = 0;  // summed over components
  double millis = 0;
};

// Validates `model` against `inst`, pads a host of at most two nodes (or a
// leaf root when kKeepDeclared is asked for) with dummy leaves, and
// expands it.
ExpandedTreeModel prepare_model(const Instance& inst, const TreeModel& model,
                                RootPolicy policy);

// Solves each connected component on its own restricted model and maps
// the kept sets back. The callback gets the component graph and model
// with local vertex ids and returns its kept set in local ids.
using ComponentSolver =
    std::function<VertexSet(const Instance&, const ExpandedTreeModel&)>;
Solution solve_by_components(const Instance& inst, const ExpandedTreeModel& em,
                             const ComponentSolver& solve);

}  // namespace sfvs
