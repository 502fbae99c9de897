#include "sfvs/chordal.hpp"

#include <algorithm>
#include <limits>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

std::vector<Vertex> later_neighbours(const Instance& inst,
                                     const EliminationOrder& peo, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : inst.adjacency[v])
    if (peo.position[u] > peo.position[v]) out.push_back(u);
  return out;
}

}  // namespace

std::optional<EliminationOrder> recognize_chordal(const Instance& inst) {
  const int n = inst.n;
  // MCS numbers vertices n-1 down to 0; the visit order reversed is the
  // candidate PEO. Buckets keep it O(n + m).
  std::vector<int> label(n, 0);
  std::vector<char> done(n, 0);
  std::vector<std::vector<Vertex>> bucket(n + 1);
  for (Vertex v = n - 1; v >= 0; --v) bucket[0].push_back(v);
  int top = 0;
  EliminationOrder peo;
  peo.order.assign(n, -1);
  peo.position.assign(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    Vertex pick = -1;
    while (pick == -1) {
      while (bucket[top].empty()) --top;
      Vertex v = bucket[top].back();
      bucket[top].pop_back();
      if (!done[v] && label[v] == top) pick = v;
    }
    done[pick] = 1;
    peo.order[i] = pick;
    peo.position[pick] = i;
    for (Vertex u : inst.adjacency[pick])
      if (!done[u]) {
        bucket[++label[u]].push_back(u);
        top = std::max(top, label[u]);
      }
  }
  if (!is_perfect_elimination_order(inst, peo)) return std::nullopt;
  return peo;
}

bool is_perfect_elimination_order(const Instance& inst,
                                  const EliminationOrder& peo) {
  if (static_cast<int>(peo.order.size()) != inst.n ||
      static_cast<int>(peo.position.size()) != inst.n)
    return false;
  for (Vertex v = 0; v < inst.n; ++v) {
    auto later = later_neighbours(inst, peo, v);
    if (later.empty()) continue;
    Vertex parent = *std::min_element(
        later.begin(), later.end(),
        [&](Vertex a, Vertex b) { return peo.position[a] < peo.position[b]; });
    for (Vertex u : later)
      if (u != parent && !inst.adjacent(parent, u)) return false;
  }
  return true;
}

std::vector<VertexSet> maximal_cliques(const Instance& inst,
                                       const EliminationOrder& peo) {
  // C(v) = {v} + later neighbours. C(v) is not maximal exactly when some
  // earlier u has v as its PEO parent and |later(u)| = |later(v)| + 1.
  const int n = inst.n;
  std::vector<int> later_count(n, 0);
  std::vector<Vertex> parent(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    auto later = later_neighbours(inst, peo, v);
    later_count[v] = static_cast<int>(later.size());
    if (!later.empty())
      parent[v] = *std::min_element(
          later.begin(), later.end(), [&](Vertex a, Vertex b) {
            return peo.position[a] < peo.position[b];
          });
  }
  std::vector<char> absorbed(n, 0);
  for (Vertex u = 0; u < n; ++u)
    if (parent[u] != -1 && later_count[u] == later_count[parent[u]] + 1)
      absorbed[parent[u]] = 1;
  std::vector<VertexSet> out;
  for (Vertex v : peo.order) {
    if (absorbed[v]) continue;
    VertexSet c = later_neighbours(inst, peo, v);
    c.push_back(v);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

TreeModel clique_tree_model(const Instance& inst, const EliminationOrder& peo) {
  if (!is_perfect_elimination_order(inst, peo))
    throw InvalidInput("clique tree: ordering is not a perfect elimination order");
  auto cliques = maximal_cliques(inst, peo);
  const int K = static_cast<int>(cliques.size());
  TreeModel model;
  model.subtree.assign(inst.n, {});
  if (K == 0) return model;
  model.num_nodes = K;
  model.parent.assign(K, -1);

  // Prim, maximum intersection weight.
  std::vector<int> best(K, -1);
  std::vector<Node> via(K, -1);
  std::vector<char> in_tree(K, 0);
  int cur = 0;
  in_tree[0] = 1;
  for (int step = 1; step < K; ++step) {
    for (int j = 0; j < K; ++j) {
      if (in_tree[j]) continue;
      int w = static_cast<int>(set_intersection(cliques[cur], cliques[j]).size());
      if (w > best[j]) {
        best[j] = w;
        via[j] = cur;
      }
    }
    int next = -1;
    for (int j = 0; j < K; ++j)
      if (!in_tree[j] && (next == -1 || best[j] > best[next])) next = j;
    in_tree[next] = 1;
    model.parent[next] = via[next];
    cur = next;
  }
  for (int c = 0; c < K; ++c)
    for (Vertex v : cliques[c]) model.subtree[v].push_back(c);
  return model;
}

}  // namespace sfvs
