#include "sfvs/order_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

OrderIndex::OrderIndex(const Instance& inst, const ExpandedTreeModel& em)
    : inst_(&inst), em_(&em), adj_(inst) {
  if (inst.n != em.num_vertices())
    throw InvalidInput("order index: model and graph disagree on n");
  const int N = em.num_nodes();
  const int n = inst.n;

  // Euler tour of the host. The walk also carries the nearest vertex root
  // strictly above, which gives the vertex forest directly.
  tin_.assign(N, 0);
  tout_.assign(N, 0);
  vparent_.assign(n, -1);
  int timer = 0;
  struct Frame {
    Node x;
    Vertex above;
    std::size_t next;
  };
  std::vector<Frame> stack{{em.root(), -1, 0}};
  tin_[em.root()] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& ch = em.children[f.x];
    if (f.next < ch.size()) {
      Node c = ch[f.next++];
      Vertex here = em.owner_as_root[f.x] != -1 ? em.owner_as_root[f.x] : f.above;
      tin_[c] = timer++;
      if (em.owner_as_root[c] != -1) vparent_[em.owner_as_root[c]] = here;
      stack.push_back({c, here, 0});
    } else {
      tout_[f.x] = timer++;
      stack.pop_back();
    }
  }

  children_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    if (vparent_[u] == -1)
      tops_.push_back(u);
    else
      children_[vparent_[u]].push_back(u);
  }

  // vertex-forest preorder
  vtin_.assign(n, 0);
  vtout_.assign(n, 0);
  vdepth_.assign(n, 0);
  preorder_.reserve(n);
  for (Vertex t : tops_) {
    std::vector<std::pair<Vertex, std::size_t>> st{{t, 0}};
    vtin_[t] = static_cast<int>(preorder_.size());
    preorder_.push_back(t);
    while (!st.empty()) {
      auto& [u, next] = st.back();
      if (next < children_[u].size()) {
        Vertex c = children_[u][next++];
        vdepth_[c] = vdepth_[u] + 1;
        vtin_[c] = static_cast<int>(preorder_.size());
        preorder_.push_back(c);
        st.push_back({c, 0});
      } else {
        vtout_[u] = static_cast<int>(preorder_.size());
        st.pop_back();
      }
    }
  }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : inst.adjacency[u])
      if (u < v && !comparable(u, v))
        throw std::logic_error("corrupt model: adjacent vertices " +
                               std::to_string(u) + " and " +
                               std::to_string(v) + " are incomparable");

  pred_edge_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    const auto& nb = inst.adjacency[u];
    pred_edge_[u].assign(nb.size(), {});
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (!lt(u, w)) continue;
      auto& out = pred_edge_[u][i];
      std::vector<Vertex> st(children_[u].begin(), children_[u].end());
      while (!st.empty()) {
        Vertex x = st.back();
        st.pop_back();
        if (!(adj_(x, u) && adj_(x, w)))
          out.push_back(x);
        else
          st.insert(st.end(), children_[x].begin(), children_[x].end());
      }
      std::sort(out.begin(), out.end());
    }
  }
}

const std::vector<Vertex>& OrderIndex::pred_edge(Vertex u, Vertex w) const {
  const auto& nb = inst_->adjacency[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), w);
  if (it == nb.end() || *it != w || !lt(u, w))
    throw std::logic_error("pred_edge needs an edge uw with u < w");
  return pred_edge_[u][static_cast<std::size_t>(it - nb.begin())];
}

namespace {

std::vector<Node> minimal_nodes(const OrderIndex& oi,
                                const std::vector<Node>& nodes) {
  std::vector<Node> out;
  for (Node x : nodes) {
    bool minimal = std::none_of(nodes.begin(), nodes.end(),
                                [&](Node y) { return oi.node_lt(y, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

VertexSet min_owners(const OrderIndex& oi, std::span<const Vertex> U) {
  const auto& em = oi.model();
  std::vector<Node> leaves;
  for (Vertex u : U)
    leaves.insert(leaves.end(), em.leaves_of[u].begin(), em.leaves_of[u].end());
  VertexSet out;
  for (Node x : minimal_nodes(oi, leaves)) out.push_back(em.owner_as_leaf[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

VertexSet f_le2(const OrderIndex& oi, std::span<const Vertex> U) {
  VertexSet sorted(U.begin(), U.end());
  std::sort(sorted.begin(), sorted.end());
  VertexSet f1 = min_owners(oi, sorted);
  VertexSet rest = set_difference(sorted, f1);
  VertexSet f2 = min_owners(oi, rest);
  return set_union(f1, f2);
}

VertexSet interval_set(const OrderIndex& oi, const std::optional<VertexSet>& v1,
                       const std::optional<VertexSet>& v2,
                       const VertexSet& v3) {
  if (!v1 && !v2)
    throw std::invalid_argument("interval_set needs V1 or V2");
  const auto& em = oi.model();
  for (const auto& ls : em.leaves_of)
    if (ls.size() != 1)
      throw NotRootedPath("interval_set requires a rooted-path model");
  auto r = [&](Vertex u) { return em.root_of[u]; };
  auto l = [&](Vertex u) { return em.leaves_of[u][0]; };
  VertexSet out;
  for (Vertex x = 0; x < em.num_vertices(); ++x) {
    bool c3 = std::any_of(v3.begin(), v3.end(),
                          [&](Vertex z) { return oi.node_le(r(x), r(z)); });
    if (!c3) continue;
    if (v1) {
      bool c1 = std::any_of(v1->begin(), v1->end(),
                            [&](Vertex z) { return oi.node_lt(r(z), l(x)); });
      if (!c1) continue;
    }
    if (v2) {
      bool c2 = std::any_of(v2->begin(), v2->end(), [&](Vertex z) {
        return oi.node_lt(l(x), r(z)) && oi.node_lt(r(z), r(x));
      });
      if (!c2) continue;
    } else if (!oi.node_lt(l(x), r(x))) {
      continue;
    }
    out.push_back(x);
  }
  return out;
}

RootedPathIndex::RootedPathIndex(const OrderIndex& oi) : oi_(&oi) {
  const auto& em = oi.model();
  const int n = em.num_vertices();
  leaf_.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    if (em.leaves_of[u].size() != 1)
      throw NotRootedPath("subtree of vertex " + std::to_string(u) +
                          " has " + std::to_string(em.leaves_of[u].size()) +
                          " leaves");
    leaf_[u] = em.leaves_of[u][0];
  }
  // Walk each vertex's ancestor chain once. Every u' with r(u) <= r(u')
  // lies on this chain, so the umbrella below the k-th ancestor is the
  // last qualifying chain member seen before it.
  umb_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    Node ru = em.root_of[u];
    Vertex best = oi.node_lt(leaf_[u], ru) ? u : -1;
    for (Vertex a = oi.successor(u); a != -1; a = oi.successor(a)) {
      umb_[u].push_back(best);
      if (oi.node_lt(leaf_[a], ru)) best = a;
    }
  }
}

Vertex RootedPathIndex::umbrella(Vertex u, Vertex v) const {
  int k = oi_->depth(u) - oi_->depth(v) - 1;
  if (k < 0 || k >= static_cast<int>(umb_[u].size()) || !oi_->lt(u, v))
    throw std::logic_error("umbrella needs u < v");
  return umb_[u][k];
}

}  // namespace sfvs
