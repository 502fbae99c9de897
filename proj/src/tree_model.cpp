#include "sfvs/tree_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

std::vector<std::vector<Node>> children_from_parent(
    const std::vector<Node>& parent) {
  std::vector<std::vector<Node>> ch(parent.size());
  for (std::size_t x = 0; x < parent.size(); ++x)
    if (parent[x] >= 0) ch[parent[x]].push_back(static_cast<Node>(x));
  return ch;
}

// Host structure problems, empty when parent links form one tree.
std::vector<std::string> host_problems(const TreeModel& model) {
  std::vector<std::string> out;
  const int N = model.num_nodes;
  if (N <= 0) {
    out.push_back("host tree has no nodes");
    return out;
  }
  if (static_cast<int>(model.parent.size()) != N) {
    out.push_back("parent list size does not match node count");
    return out;
  }
  int roots = 0;
  for (Node x = 0; x < N; ++x) {
    Node p = model.parent[x];
    if (p == -1)
      ++roots;
    else if (p < 0 || p >= N || p == x)
      out.push_back("node " + std::to_string(x) + " has invalid parent " +
                    std::to_string(p));
  }
  if (roots != 1)
    out.push_back("host must have exactly one -1 parent, found " +
                  std::to_string(roots));
  if (!out.empty()) return out;
  // every node must reach the root without revisiting
  std::vector<int> state(N, 0);  // 0 new, 1 on path, 2 done
  for (Node s = 0; s < N; ++s) {
    std::vector<Node> path;
    Node x = s;
    while (x != -1 && state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = model.parent[x];
    }
    if (x != -1 && state[x] == 1) {
      out.push_back("parent links contain a cycle through node " +
                    std::to_string(x));
      return out;
    }
    for (Node y : path) state[y] = 2;
  }
  return out;
}

void check_host(const TreeModel& model) {
  auto problems = host_problems(model);
  if (!problems.empty()) throw InvalidInput(problems.front());
  for (Vertex v = 0; v < model.num_vertices(); ++v)
    for (Node x : model.subtree[v])
      if (x < 0 || x >= model.num_nodes)
        throw InvalidInput("subtree of vertex " + std::to_string(v) +
                           " names unknown node " + std::to_string(x));
}

bool subtree_connected(const std::vector<std::vector<Node>>& hadj,
                       const std::vector<Node>& nodes,
                       std::vector<int>& stamp, int tag) {
  if (nodes.empty()) return false;
  for (Node x : nodes) stamp[x] = tag;
  std::vector<Node> queue{nodes.front()};
  stamp[nodes.front()] = -tag;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Node y : hadj[queue[i]])
      if (stamp[y] == tag) {
        stamp[y] = -tag;
        queue.push_back(y);
      }
  return queue.size() == nodes.size();
}

}  // namespace

Node TreeModel::root() const {
  for (Node x = 0; x < num_nodes; ++x)
    if (parent[x] == -1) return x;
  throw InvalidInput("tree model has no root");
}

std::vector<std::vector<Node>> host_adjacency(const TreeModel& model) {
  std::vector<std::vector<Node>> adj(model.num_nodes);
  for (Node x = 0; x < model.num_nodes; ++x) {
    Node p = model.parent[x];
    if (p >= 0) {
      adj[x].push_back(p);
      adj[p].push_back(x);
    }
  }
  return adj;
}

std::vector<Edge> realized_edges(const TreeModel& model) {
  std::vector<std::vector<Vertex>> at(model.num_nodes);
  for (Vertex v = 0; v < model.num_vertices(); ++v)
    for (Node x : model.subtree[v]) at[x].push_back(v);
  std::vector<Edge> out;
  for (const auto& vs : at)
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        out.emplace_back(std::min(vs[i], vs[j]), std::max(vs[i], vs[j]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport validate_model(const TreeModel& model, const Instance& inst) {
  ValidationReport rep;
  rep.violations = host_problems(model);
  if (!rep.ok()) return rep;
  if (model.num_vertices() != inst.n) {
    rep.violations.push_back("model has " +
                             std::to_string(model.num_vertices()) +
                             " subtrees but graph has " +
                             std::to_string(inst.n) + " vertices");
    return rep;
  }
  auto hadj = host_adjacency(model);
  std::vector<int> stamp(model.num_nodes, 0);
  bool nodes_ok = true;
  for (Vertex v = 0; v < inst.n; ++v) {
    const auto& nodes = model.subtree[v];
    bool in_range = std::all_of(nodes.begin(), nodes.end(), [&](Node x) {
      return x >= 0 && x < model.num_nodes;
    });
    if (!in_range) {
      rep.violations.push_back("subtree " + std::to_string(v) +
                               " names an unknown node");
      nodes_ok = false;
    } else if (nodes.empty()) {
      rep.violations.push_back("empty subtree " + std::to_string(v));
    } else if (!subtree_connected(hadj, nodes, stamp, v + 1)) {
      rep.violations.push_back("disconnected subtree " + std::to_string(v));
    }
  }
  if (!nodes_ok) return rep;
  auto got = realized_edges(model);
  auto want = inst.edges();
  std::vector<Edge> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  for (auto [u, v] : extra)
    rep.violations.push_back("extra edge " + std::to_string(u) + " " +
                             std::to_string(v));
  for (auto [u, v] : missing)
    rep.violations.push_back("missing edge " + std::to_string(u) + " " +
                             std::to_string(v));
  return rep;
}

void require_valid(const TreeModel& model, const Instance& inst) {
  auto rep = validate_model(model, inst);
  if (rep.ok()) return;
  std::string msg = "invalid tree model:";
  std::size_t shown = std::min<std::size_t>(rep.violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) msg += " [" + rep.violations[i] + "]";
  if (rep.violations.size() > shown)
    msg += " (+" + std::to_string(rep.violations.size() - shown) + " more)";
  throw InvalidInput(msg);
}

std::vector<Node> host_leaves(const TreeModel& model) {
  std::vector<Node> out;
  if (model.num_nodes < 2) return out;
  auto adj = host_adjacency(model);
  for (Node x = 0; x < model.num_nodes; ++x)
    if (adj[x].size() == 1) out.push_back(x);
  return out;
}

int subtree_leaf_count(const TreeModel& model, Vertex v) {
  const auto& nodes = model.subtree[v];
  if (nodes.size() <= 1) return static_cast<int>(nodes.size());
  int leaves = 0;
  for (Node x : nodes) {
    int deg = 0;
    Node p = model.parent[x];
    if (p >= 0 && std::binary_search(nodes.begin(), nodes.end(), p)) ++deg;
    for (Node y : nodes)
      if (model.parent[y] == x) ++deg;
    if (deg == 1) ++leaves;
  }
  return leaves;
}

int rooted_leaf_count(const TreeModel& model, Vertex v) {
  const auto& nodes = model.subtree[v];
  int leaves = 0;
  for (Node x : nodes) {
    bool has_child = std::any_of(nodes.begin(), nodes.end(),
                                 [&](Node y) { return model.parent[y] == x; });
    if (!has_child) ++leaves;
  }
  return leaves;
}

int rooted_vertex_leafage(const TreeModel& model) {
  int best = 0;
  for (Vertex v = 0; v < model.num_vertices(); ++v)
    best = std::max(best, rooted_leaf_count(model, v));
  return best;
}

bool is_rooted_path_model(const TreeModel& model) {
  for (Vertex v = 0; v < model.num_vertices(); ++v)
    if (rooted_leaf_count(model, v) != 1) return false;
  return true;
}

TreeModel pad_root(const TreeModel& model) {
  check_host(model);
  TreeModel out = model;
  Node root = model.root();
  int deg = 0;
  for (Node x = 0; x < model.num_nodes; ++x)
    if (model.parent[x] == root) ++deg;
  while (deg < 2) {
    out.parent.push_back(root);
    ++out.num_nodes;
    ++deg;
  }
  return out;
}

ExpandedTreeModel make_expanded(TreeModel rooted, std::vector<Node> provenance) {
  ExpandedTreeModel em;
  const int N = rooted.num_nodes;
  const int n = rooted.num_vertices();
  em.children = children_from_parent(rooted.parent);
  em.root_ = rooted.root();
  em.root_of.assign(n, -1);
  em.leaves_of.assign(n, {});
  em.owner_as_root.assign(N, -1);
  em.owner_as_leaf.assign(N, -1);
  if (provenance.empty()) {
    provenance.resize(N);
    for (Node x = 0; x < N; ++x) provenance[x] = x;
  }
  em.provenance = std::move(provenance);

  std::vector<int> stamp(N, -1);
  for (Vertex v = 0; v < n; ++v) {
    auto& nodes = rooted.subtree[v];
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty())
      throw InvalidInput("empty subtree " + std::to_string(v));
    for (Node x : nodes) stamp[x] = v;
    for (Node x : nodes) {
      Node p = rooted.parent[x];
      if (p < 0 || stamp[p] != v) {
        if (em.root_of[v] != -1)
          throw InvalidInput("disconnected subtree " + std::to_string(v));
        em.root_of[v] = x;
      }
      bool leaf = std::none_of(em.children[x].begin(), em.children[x].end(),
                               [&](Node c) { return stamp[c] == v; });
      if (leaf) em.leaves_of[v].push_back(x);
    }
    Node r = em.root_of[v];
    if (em.owner_as_root[r] != -1)
      throw std::logic_error("node " + std::to_string(r) +
                             " is the root of two subtrees");
    em.owner_as_root[r] = v;
    for (Node x : em.leaves_of[v]) {
      if (em.owner_as_leaf[x] != -1)
        throw std::logic_error("node " + std::to_string(x) +
                               " is a leaf of two subtrees");
      em.owner_as_leaf[x] = v;
    }
  }
  em.model = std::move(rooted);
  return em;
}

ExpandedTreeModel expand_model(const TreeModel& model, RootPolicy policy) {
  check_host(model);
  const int N = model.num_nodes;
  const int n = model.num_vertices();
  if (N <= 2) throw TrivialModel("trivial model: host has at most two nodes");
  auto hadj = host_adjacency(model);

  Node root = -1;
  if (policy == RootPolicy::kKeepDeclared) {
    root = model.root();
    if (hadj[root].size() < 2)
      throw InvalidInput("declared root " + std::to_string(root) +
                         " is a leaf");
  } else {
    for (Node x = 0; x < N && root == -1; ++x)
      if (hadj[x].size() >= 2) root = x;
  }

  // re-root by BFS
  std::vector<Node> parent(N, -2);
  parent[root] = -1;
  std::vector<Node> order{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Node y : hadj[order[i]])
      if (parent[y] == -2) {
        parent[y] = order[i];
        order.push_back(y);
      }
  auto children = children_from_parent(parent);

  // roles per vertex
  std::vector<std::vector<Vertex>> at(N);
  std::vector<Node> top(n, -1);
  std::vector<std::vector<Node>> bottoms(n);
  std::vector<int> stamp(N, -1);
  std::vector<char> single(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto nodes = model.subtree[v];
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty()) throw InvalidInput("empty subtree " + std::to_string(v));
    for (Node x : nodes) stamp[x] = v;
    for (Node x : nodes) {
      at[x].push_back(v);
      if (parent[x] < 0 || stamp[parent[x]] != v) {
        if (top[v] != -1)
          throw InvalidInput("disconnected subtree " + std::to_string(v));
        top[v] = x;
      }
      if (std::none_of(children[x].begin(), children[x].end(),
                       [&](Node c) { return stamp[c] == v; }))
        bottoms[v].push_back(x);
    }
    single[v] = nodes.size() == 1;
  }
  for (auto& vs : at) std::sort(vs.begin(), vs.end());

  // Each original node becomes a path, listed bottom (child side) to top.
  // span[x][i] is the (lo, hi) range of the i-th vertex of at[x].
  std::vector<int> first(N + 1, 0);
  std::vector<std::vector<std::pair<int, int>>> span(N);
  for (Node x = 0; x < N; ++x) {
    std::vector<Vertex> R, L, Sg;
    for (Vertex v : at[x]) {
      bool is_leaf = std::find(bottoms[v].begin(), bottoms[v].end(), x) !=
                     bottoms[v].end();
      if (single[v])
        Sg.push_back(v);
      else if (top[v] == x)
        R.push_back(v);
      else if (is_leaf)
        L.push_back(v);
    }
    auto& sp = span[x];
    sp.assign(at[x].size(), {0, 0});
    auto slot = [&](Vertex v) {
      return static_cast<std::size_t>(
          std::lower_bound(at[x].begin(), at[x].end(), v) - at[x].begin());
    };
    int len = 1;
    if (R.size() + L.size() + Sg.size() >= 2) {
      int idx = 0;
      for (Vertex v : L) sp[slot(v)] = {idx++, -1};
      if (!Sg.empty()) {
        std::vector<int> lo;
        for (std::size_t i = 1; i < Sg.size(); ++i) lo.push_back(idx++);
        int mid = idx++;
        sp[slot(Sg[0])] = {mid, mid};
        for (std::size_t i = Sg.size() - 1; i >= 1; --i)
          sp[slot(Sg[i])] = {lo[i - 1], idx++};
      }
      for (Vertex v : R) sp[slot(v)] = {0, idx++};
      len = idx;
      for (Vertex v : L) sp[slot(v)].second = len - 1;
      for (Vertex v : at[x]) {
        auto& s = sp[slot(v)];
        bool placed = std::find(R.begin(), R.end(), v) != R.end() ||
                      std::find(L.begin(), L.end(), v) != L.end() ||
                      std::find(Sg.begin(), Sg.end(), v) != Sg.end();
        if (!placed) s = {0, len - 1};
      }
    }
    first[x + 1] = first[x] + len;
  }

  TreeModel out;
  out.num_nodes = first[N];
  out.parent.assign(out.num_nodes, -1);
  std::vector<Node> provenance(out.num_nodes);
  for (Node x = 0; x < N; ++x) {
    for (Node y = first[x]; y < first[x + 1]; ++y) {
      provenance[y] = x;
      if (y + 1 < first[x + 1]) out.parent[y] = y + 1;
    }
    if (parent[x] >= 0) out.parent[first[x + 1] - 1] = first[parent[x]];
  }
  out.subtree.assign(n, {});
  for (Node x = 0; x < N; ++x)
    for (std::size_t i = 0; i < at[x].size(); ++i) {
      auto [lo, hi] = span[x][i];
      for (int k = lo; k <= hi; ++k)
        out.subtree[at[x][i]].push_back(first[x] + k);
    }
  return make_expanded(std::move(out), std::move(provenance));
}

ExpandedTreeModel restrict_expanded(const ExpandedTreeModel& em,
                                    std::span<const Vertex> vertices) {
  const auto& m = em.model;
  std::vector<Node> local(m.num_nodes, -1);
  std::vector<Node> kept;
  for (Vertex v : vertices)
    for (Node x : m.subtree[v])
      if (local[x] == -1) {
        local[x] = 0;
        kept.push_back(x);
      }
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i)
    local[kept[i]] = static_cast<Node>(i);

  TreeModel out;
  out.num_nodes = static_cast<int>(kept.size());
  out.parent.assign(out.num_nodes, -1);
  std::vector<Node> provenance(out.num_nodes);
  int tops = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Node p = m.parent[kept[i]];
    if (p >= 0 && local[p] != -1)
      out.parent[i] = local[p];
    else
      ++tops;
    provenance[i] = em.provenance[kept[i]];
  }
  if (tops != 1)
    throw std::logic_error("restricted vertex set has a disconnected host");
  for (Vertex v : vertices) {
    std::vector<Node> nodes;
    for (Node x : m.subtree[v]) nodes.push_back(local[x]);
    out.subtree.push_back(std::move(nodes));
  }
  return make_expanded(std::move(out), std::move(provenance));
}

int leafage(const ExpandedTreeModel& em) {
  // rooted: a root with one child is not a leaf
  if (em.num_nodes() <= 1) return 0;
  return static_cast<int>(std::count_if(em.children.begin(), em.children.end(),
                                        [](const auto& c) { return c.empty(); }));
}

int vertex_leafage(const ExpandedTreeModel& em) {
  std::size_t best = 0;
  for (const auto& ls : em.leaves_of) best = std::max(best, ls.size());
  return static_cast<int>(best);
}

}  // namespace sfvs
