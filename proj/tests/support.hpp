#pragma once

// Shared by the unit tests and the acceptance runner: seeded case
// generation and brute-force checks of the structural facts both solvers
// lean on.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sfvs/graph.hpp"
#include "sfvs/order_index.hpp"
#include "sfvs/reductions.hpp"
#include "sfvs/solver_common.hpp"
#include "sfvs/tree_model.hpp"

namespace sfvs::testing {

struct Case {
  TreeModel model;
  Instance inst;
  int n = 0, leaves = 0, vl = 0;
  std::uint64_t seed = 0;
};

// n in [1, max_n], leaves in [0, max_leaves], vl in [1, max(1, leaves)];
// rooted_path forces vl = 1.
inline Case random_case(std::uint64_t seed, int max_n, int max_leaves,
                        bool rooted_path = false, int min_n = 1,
                        int min_leaves = 0) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  Case c;
  c.seed = seed;
  c.n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
  c.leaves = min_leaves + static_cast<int>(rng() % (max_leaves - min_leaves + 1));
  c.vl = rooted_path ? 1 : 1 + static_cast<int>(rng() % std::max(1, c.leaves));
  c.model = gen_random_model(c.n, c.leaves, c.vl, seed);
  c.inst = gen_random_instance(c.model, seed);
  return c;
}

inline std::string describe(const Case& c) {
  return "seed=" + std::to_string(c.seed) + " n=" + std::to_string(c.n) +
         " leaves=" + std::to_string(c.leaves) + " vl=" + std::to_string(c.vl);
}

// ---- expansion bounds ------------------------------------------------------

struct ExpansionCheck {
  bool same_edges = true;
  bool same_leafage = true;
  bool leaf_counts = true;
  bool size_bound = true;
  int single_node_subtrees = 0;  // logged separately, see README
  [[nodiscard]] bool ok() const {
    return same_edges && same_leafage && leaf_counts && size_bound;
  }
};

// `model` must be rooted at a non-leaf (gen_random_model guarantees it
// once the host has three nodes).
inline ExpansionCheck check_expansion(const TreeModel& model) {
  ExpansionCheck r;
  ExpandedTreeModel em = expand_model(model);
  r.same_edges = realized_edges(em.model) == realized_edges(model);
  r.same_leafage =
      leafage(em) == static_cast<int>(host_leaves(model).size());
  const int n = model.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    int before = subtree_leaf_count(model, v);
    int after = static_cast<int>(em.leaves_of[v].size());
    if (after < before - 1 || after > before) r.leaf_counts = false;
    if (model.subtree[v].size() == 1) ++r.single_node_subtrees;
  }
  long long bound = model.num_nodes +
                    static_cast<long long>(1 + rooted_vertex_leafage(model)) *
                        std::max(0, n - 1);
  r.size_bound = em.num_nodes() <= bound;
  return r;
}

// ---- order facts ------------------------------------------------------------

// Every edge joins comparable vertices.
inline bool check_edges_comparable(const OrderIndex& oi) {
  for (auto [u, v] : oi.instance().edges())
    if (!oi.comparable(u, v)) return false;
  return true;
}

// u < v < w and uw an edge imply vw an edge.
inline bool check_chain_closure(const OrderIndex& oi) {
  const Instance& g = oi.instance();
  for (Vertex w = 0; w < g.n; ++w)
    for (Vertex u : g.adjacency[w]) {
      if (!oi.lt(u, w)) continue;
      for (Vertex v = 0; v < g.n; ++v)
        if (oi.lt(u, v) && oi.lt(v, w) && !oi.adjacent(v, w)) return false;
    }
  return true;
}

// N(V_u) \ V_u is inside N(u).
inline bool check_neighbourhood_of_below(const OrderIndex& oi) {
  const Instance& g = oi.instance();
  for (Vertex u = 0; u < g.n; ++u) {
    auto below = oi.below(u);
    VertexSet vu(below.begin(), below.end());
    std::sort(vu.begin(), vu.end());
    for (Vertex x : vu)
      for (Vertex y : g.adjacency[x])
        if (!contains(vu, y) && !oi.adjacent(u, y)) return false;
  }
  return true;
}

inline VertexSet below_set(const OrderIndex& oi, Vertex u) {
  auto b = oi.below(u);
  VertexSet s(b.begin(), b.end());
  std::sort(s.begin(), s.end());
  return s;
}

// The classes are pairwise disjoint, have no edges between them, and
// cover exactly `target`.
inline bool is_disconnected_partition(const Instance& g,
                                      const std::vector<VertexSet>& classes,
                                      const VertexSet& target) {
  std::vector<int> label(g.n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex x : classes[i]) {
      if (label[x] != -1) return false;
      label[x] = static_cast<int>(i);
    }
  VertexSet all;
  for (const auto& c : classes) all = set_union(all, c);
  if (all != target) return false;
  for (Vertex x : all)
    for (Vertex y : g.adjacency[x])
      if (label[y] != -1 && label[y] != label[x]) return false;
  return true;
}

// {V_u' : u' in pred_max(u)} partitions V_u - u, and for each edge u < w
// {V_u' : u' in pred_edge(u, w)} partitions V_u - (N[u] & N(w)); both
// without edges between classes.
inline bool check_predecessor_partitions(const OrderIndex& oi) {
  const Instance& g = oi.instance();
  for (Vertex u = 0; u < g.n; ++u) {
    VertexSet vu = below_set(oi, u);
    std::vector<VertexSet> classes;
    for (Vertex c : oi.pred_max(u)) classes.push_back(below_set(oi, c));
    if (!is_disconnected_partition(g, classes, set_difference(vu, VertexSet{u})))
      return false;
    for (Vertex w : g.adjacency[u]) {
      if (!oi.lt(u, w)) continue;
      VertexSet closed = set_union(g.adjacency[u], VertexSet{u});
      VertexSet common = set_intersection(closed, g.adjacency[w]);
      classes.clear();
      for (Vertex c : oi.pred_edge(u, w)) classes.push_back(below_set(oi, c));
      if (!is_disconnected_partition(g, classes, set_difference(vu, common)))
        return false;
    }
  }
  return true;
}

// ---- rooted-path split -------------------------------------------------------

struct SplitCheck {
  int pairs = 0;            // (u, w) pairs examined
  int literal_failures = 0;  // literal collection is not a partition of X
  int corrected_failures = 0;
  std::string first_literal_failure;
};

inline VertexSet drop_terminals(const Instance& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex x : s)
    if (!g.is_terminal(x)) out.push_back(x);
  return out;
}

// For u, w outside S with u < w adjacent, and X = V_u - ({u} + (N(u) &
// N(w) & S)):
//  literal:   {V<pred_edge||pred_max> - S} + {V_u' + (V<|u'|u' umbrella u> - S)}
//             partitions X;
//  corrected: the V_{u', u' umbrella u} classes are disjoint inside X, what
//             is left of X has no terminal and contains the literal bulk,
//             and no S-triangle of G[X + {u, w}] meets two parts.
inline SplitCheck check_rooted_path_split(const RootedPathIndex& rp) {
  const OrderIndex& oi = rp.order();
  const Instance& g = oi.instance();
  SplitCheck r;
  for (Vertex u = 0; u < g.n; ++u) {
    if (g.is_terminal(u)) continue;
    for (Vertex w : g.adjacency[u]) {
      if (g.is_terminal(w) || !oi.lt(u, w)) continue;
      ++r.pairs;
      VertexSet common = set_intersection(g.adjacency[u], g.adjacency[w]);
      VertexSet vu = below_set(oi, u);
      VertexSet common_s = set_difference(common, drop_terminals(g, common));
      VertexSet X = set_difference(vu, set_union(VertexSet{u}, common_s));
      const auto& pe = oi.pred_edge(u, w);
      VertexSet pe_set(pe.begin(), pe.end());
      std::sort(pe_set.begin(), pe_set.end());
      VertexSet pm_set(oi.pred_max(u).begin(), oi.pred_max(u).end());
      std::sort(pm_set.begin(), pm_set.end());

      std::vector<VertexSet> classes;
      if (!pe_set.empty() && !pm_set.empty())
        classes.push_back(
            drop_terminals(g, interval_set(oi, pe_set, std::nullopt, pm_set)));
      else
        classes.push_back({});
      for (Vertex c : pe_set) {
        VertexSet cls = below_set(oi, c);
        Vertex top = rp.umbrella(c, u);
        if (top >= 0)
          cls = set_union(cls, drop_terminals(g, interval_set(oi, std::nullopt,
                                                              VertexSet{c},
                                                              VertexSet{top})));
        classes.push_back(std::move(cls));
      }

      // literal
      {
        std::vector<int> seen(g.n, 0);
        bool ok = true;
        VertexSet all;
        for (const auto& cls : classes) {
          for (Vertex x : cls)
            if (seen[x]++) ok = false;
          all = set_union(all, cls);
        }
        if (all != X) ok = false;
        if (!ok) {
          if (r.literal_failures == 0) {
            VertexSet missing = set_difference(X, all);
            r.first_literal_failure = "u=" + std::to_string(u) + " w=" + std::to_string(w) +
                                      " |X|=" + std::to_string(X.size()) +
                                      " uncovered=" + std::to_string(missing.size());
          }
          ++r.literal_failures;
        }
      }

      // corrected
      {
        bool ok = true;
        std::vector<int> label(g.n, -1);
        for (std::size_t i = 1; i < classes.size(); ++i)
          for (Vertex x : classes[i]) {
            if (label[x] != -1 || !contains(X, x)) ok = false;
            label[x] = static_cast<int>(i);
          }
        for (Vertex x : X)
          if (label[x] == -1) {
            if (g.is_terminal(x)) ok = false;
            label[x] = 0;
          }
        for (Vertex x : classes[0])
          if (label[x] != 0) ok = false;
        // S-triangles of G[X + {u, w}] touching two parts
        VertexSet Z = set_union(X, VertexSet{u, w});
        for (std::size_t i = 0; ok && i < Z.size(); ++i)
          for (std::size_t j = i + 1; ok && j < Z.size(); ++j) {
            Vertex a = Z[i], b = Z[j];
            if (!oi.adjacent(a, b)) continue;
            for (std::size_t k = j + 1; k < Z.size(); ++k) {
              Vertex c = Z[k];
              if (!oi.adjacent(a, c) || !oi.adjacent(b, c)) continue;
              if (!g.is_terminal(a) && !g.is_terminal(b) && !g.is_terminal(c)) continue;
              int la = -1;
              for (Vertex x : {a, b, c}) {
                if (x == u || x == w) continue;
                if (la == -1)
                  la = label[x];
                else if (label[x] != la)
                  ok = false;
              }
            }
          }
        if (!ok) ++r.corrected_failures;
      }
    }
  }
  return r;
}

}  // namespace sfvs::testing
