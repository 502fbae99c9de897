#include "sfvs/solver_common.hpp"

#include <algorithm>

namespace sfvs {

ExpandedTreeModel prepare_model(const Instance& inst, const TreeModel& model,
                                RootPolicy policy) {
  require_valid(model, inst);
  bool pad = model.num_nodes <= 2;
  if (policy == RootPolicy::kKeepDeclared) {
    Node root = model.root();
    int deg = 0;
    for (Node x = 0; x < model.num_nodes; ++x)
      if (model.parent[x] == root) ++deg;
    pad = pad || deg < 2;
  }
  if (!pad) return expand_model(model, policy);
  return expand_model(pad_root(model), RootPolicy::kKeepDeclared);
}

Solution solve_by_components(const Instance& inst, const ExpandedTreeModel& em,
                             const ComponentSolver& solve) {
  VertexSet kept;
  for (const auto& comp : connected_components(inst)) {
    Instance sub = induced_subgraph(inst, comp);
    ExpandedTreeModel sub_em = restrict_expanded(em, comp);
    for (Vertex v : solve(sub, sub_em)) kept.push_back(comp[v]);
  }
  return make_solution(inst, std::move(kept));
}

}  // namespace sfvs
