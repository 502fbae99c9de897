#pragma once

#include <optional>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs {

// Perfect elimination ordering: every vertex's later neighbours are a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<int> position;  // inverse of order
};

// Maximum cardinality search, then a PEO check. nullopt means not chordal.
std::optional<EliminationOrder> recognize_chordal(const Instance& inst);

bool is_perfect_elimination_order(const Instance& inst,
                                  const EliminationOrder& peo);

// Maximal cliques, each sorted, in order of their lowest PEO vertex.
std::vector<VertexSet> maximal_cliques(const Instance& inst,
                                       const EliminationOrder& peo);

// Clique tree via a maximum-weight spanning tree of the clique
// intersection graph; disconnected graphs are joined by zero-weight links.
// Throws InvalidInput if peo is not a PEO of inst.
TreeModel clique_tree_model(const Instance& inst, const EliminationOrder& peo);

}  // namespace sfvs
