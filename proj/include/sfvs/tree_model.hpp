#pragma once

#include <string>
#include <vector>

#include "sfvs/graph.hpp"

namespace sfvs {

using Node = int;

// Host tree plus one connected node set per graph vertex. parent[root] is
// -1; for unrooted input the -1 node is just an anchor.
struct TreeModel {
  int num_nodes = 0;
  std::vector<Node> parent;
  std::vector<std::vector<Node>> subtree;  // sorted per vertex

  [[nodiscard]] int num_vertices() const {
    return static_cast<int>(subtree.size());
  }
  [[nodiscard]] Node root() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

// Checks the host is one tree, every subtree is non-empty and connected,
// and the intersection graph equals inst's edge set exactly.
ValidationReport validate_model(const TreeModel& model, const Instance& inst);

// Throws InvalidInput carrying the first few violations.
void require_valid(const TreeModel& model, const Instance& inst);

// Edges of the intersection graph, (u, v) with u < v, sorted.
std::vector<Edge> realized_edges(const TreeModel& model);

// Undirected adjacency of the host.
std::vector<std::vector<Node>> host_adjacency(const TreeModel& model);

// Leaves of the host as an undirected tree; a single node has none.
std::vector<Node> host_leaves(const TreeModel& model);

// Leaves of T_v as an undirected tree. A single-node subtree counts as one
// leaf, which is the convention the expansion bounds are stated in.
int subtree_leaf_count(const TreeModel& model, Vertex v);

// Leaves of T_v when the host is rooted at model.root(): nodes of T_v with
// no child in T_v. Vertex leafage of a rooted model is the max of this.
int rooted_leaf_count(const TreeModel& model, Vertex v);
int rooted_vertex_leafage(const TreeModel& model);

// Every subtree is a path that only goes down from its root.
bool is_rooted_path_model(const TreeModel& model);

// Rooted model in which every host node is the root of at most one subtree
// and a leaf of at most one subtree.
struct ExpandedTreeModel {
  TreeModel model;  // parent[root] == -1
  std::vector<std::vector<Node>> children;
  std::vector<Node> root_of;                 // r(u)
  std::vector<std::vector<Node>> leaves_of;  // L(T_u), sorted
  std::vector<Vertex> owner_as_root;         // -1 if none
  std::vector<Vertex> owner_as_leaf;         // -1 if none
  std::vector<Node> provenance;              // node of the input, -1 = padding

  [[nodiscard]] int num_nodes() const { return model.num_nodes; }
  [[nodiscard]] int num_vertices() const { return model.num_vertices(); }
  [[nodiscard]] Node root() const { return root_; }

  Node root_ = 0;
};

enum class RootPolicy {
  kFirstNonLeaf,  // smallest-id node of degree >= 2
  kKeepDeclared,  // the -1 node; must not be a leaf
};

// Splits every node that carries two or more root/leaf roles into a path.
// Leaf roles go below, root roles above, single-node subtrees are nested
// around one middle node. Throws TrivialModel when the host has at most
// two nodes, InvalidInput when the chosen root is a leaf or the model is
// malformed.
ExpandedTreeModel expand_model(const TreeModel& model,
                               RootPolicy policy = RootPolicy::kFirstNonLeaf);

// Hangs dummy leaves under the declared root until it has degree >= 2, so
// expansion with kKeepDeclared is always possible. Subtrees are unchanged.
TreeModel pad_root(const TreeModel& model);

// Derives root_of / leaves_of / owners for a model already rooted at
// model.root(). Throws std::logic_error if a node carries two roots or two
// leaves.
ExpandedTreeModel make_expanded(TreeModel rooted,
                                std::vector<Node> provenance = {});

// Restriction to a vertex subset whose subtrees form a connected union.
// Local vertex i is vertices[i]; nodes are renumbered.
ExpandedTreeModel restrict_expanded(const ExpandedTreeModel& em,
                                    std::span<const Vertex> vertices);

// Childless host nodes, and the max leaf count of one expanded subtree.
int leafage(const ExpandedTreeModel& em);
int vertex_leafage(const ExpandedTreeModel& em);

}  // namespace sfvs
