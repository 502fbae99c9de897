#include "sfvs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

std::size_t Instance::num_edges() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

bool Instance::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Weight Instance::total_weight() const {
  return std::accumulate(weight.begin(), weight.end(), Weight{0});
}

Weight Instance::weight_of(std::span<const Vertex> vertices) const {
  Weight total = 0;
  for (Vertex v : vertices) total += weight[v];
  return total;
}

std::vector<Edge> Instance::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Instance build_instance(int n, std::span<const Edge> edges,
                        std::span<const Weight> weights,
                        std::span<const char> s_flags) {
  if (n < 0) throw InvalidInput("negative vertex count");
  if (weights.size() != static_cast<std::size_t>(n) ||
      s_flags.size() != static_cast<std::size_t>(n))
    throw InvalidInput("weight/terminal list size does not match n=" +
                       std::to_string(n));
  Instance inst;
  inst.n = n;
  inst.adjacency.assign(n, {});
  inst.weight.assign(weights.begin(), weights.end());
  inst.in_s.assign(s_flags.begin(), s_flags.end());
  for (Vertex v = 0; v < n; ++v) {
    if (inst.weight[v] < 0)
      throw InvalidInput("negative weight on vertex " + std::to_string(v));
    inst.in_s[v] = inst.in_s[v] ? 1 : 0;
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(u) +
                         " " + std::to_string(v));
    if (u == v) throw InvalidInput("self-loop on vertex " + std::to_string(u));
    inst.adjacency[u].push_back(v);
    inst.adjacency[v].push_back(u);
  }
  for (auto& nb : inst.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return inst;
}

Instance build_instance(int n, std::span<const Edge> edges,
                        std::span<const Vertex> terminals) {
  std::vector<Weight> w(std::max(n, 0), 1);
  std::vector<char> s(std::max(n, 0), 0);
  for (Vertex t : terminals) {
    if (t < 0 || t >= n)
      throw InvalidInput("terminal out of range: " + std::to_string(t));
    s[t] = 1;
  }
  return build_instance(n, edges, w, s);
}

Solution make_solution(const Instance& inst, VertexSet kept) {
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  Solution sol;
  sol.kept = std::move(kept);
  std::vector<char> mark(inst.n, 0);
  for (Vertex v : sol.kept) mark[v] = 1;
  for (Vertex v = 0; v < inst.n; ++v) {
    if (mark[v])
      sol.kept_weight += inst.weight[v];
    else {
      sol.removed.push_back(v);
      sol.removed_weight += inst.weight[v];
    }
  }
  return sol;
}

bool is_s_forest(const Instance& inst, std::span<const Vertex> kept) {
  const int n = inst.n;
  std::vector<char> alive(n, 0);
  for (Vertex v : kept) alive[v] = 1;

  // Iterative Tarjan biconnected components. Edges are pushed on a stack;
  // each time an articulation condition fires the block is popped and
  // checked for size >= 3 and an S member.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> it(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<Edge> estack;
  std::vector<Vertex> call;
  std::vector<int> seen(n, -1);
  int timer = 0;
  int block_id = 0;

  auto block_bad = [&](Vertex u, Vertex v) {
    // pop edges up to and including (u, v)
    std::vector<Vertex> members;
    ++block_id;
    while (true) {
      Edge e = estack.back();
      estack.pop_back();
      for (Vertex x : {e.first, e.second})
        if (seen[x] != block_id) {
          seen[x] = block_id;
          members.push_back(x);
        }
      if (e.first == u && e.second == v) break;
    }
    if (members.size() < 3) return false;
    return std::any_of(members.begin(), members.end(),
                       [&](Vertex x) { return inst.in_s[x] != 0; });
  };

  for (Vertex root : kept) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    call.push_back(root);
    while (!call.empty()) {
      Vertex u = call.back();
      const auto& nb = inst.adjacency[u];
      if (it[u] < nb.size()) {
        Vertex v = nb[it[u]++];
        if (!alive[v]) continue;
        if (disc[v] == -1) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          estack.emplace_back(u, v);
          call.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          low[u] = std::min(low[u], disc[v]);
          estack.emplace_back(u, v);
        }
      } else {
        call.pop_back();
        Vertex p = parent[u];
        if (p != -1) {
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p] && block_bad(p, u)) return false;
        }
      }
    }
  }
  return true;
}

bool has_s_triangle(const Instance& inst, std::span<const Vertex> kept) {
  std::vector<char> alive(inst.n, 0);
  for (Vertex v : kept) alive[v] = 1;
  for (Vertex u : kept) {
    const auto& nu = inst.adjacency[u];
    for (Vertex v : nu) {
      if (v <= u || !alive[v]) continue;
      for (Vertex w : inst.adjacency[v]) {
        if (w <= v || !alive[w]) continue;
        if (!std::binary_search(nu.begin(), nu.end(), w)) continue;
        if (inst.in_s[u] || inst.in_s[v] || inst.in_s[w]) return true;
      }
    }
  }
  return false;
}

std::vector<VertexSet> connected_components(const Instance& inst) {
  std::vector<int> comp(inst.n, -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < inst.n; ++s) {
    if (comp[s] != -1) continue;
    VertexSet c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (Vertex v : inst.adjacency[c[i]])
        if (comp[v] == -1) {
          comp[v] = comp[s];
          c.push_back(v);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

Instance induced_subgraph(const Instance& inst,
                          std::span<const Vertex> vertices) {
  std::vector<int> local(inst.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    local[vertices[i]] = static_cast<int>(i);
  Instance sub;
  sub.n = static_cast<int>(vertices.size());
  sub.adjacency.resize(sub.n);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex g = vertices[i];
    sub.weight.push_back(inst.weight[g]);
    sub.in_s.push_back(inst.in_s[g]);
    for (Vertex v : inst.adjacency[g])
      if (local[v] != -1) sub.adjacency[i].push_back(local[v]);
    std::sort(sub.adjacency[i].begin(), sub.adjacency[i].end());
  }
  return sub;
}

AdjacencyMatrix::AdjacencyMatrix(const Instance& inst)
    : n_(static_cast<std::size_t>(inst.n)), bits_(n_ * n_, 0) {
  for (Vertex u = 0; u < inst.n; ++u)
    for (Vertex v : inst.adjacency[u]) bits_[u * n_ + v] = 1;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a,
                         std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a,
                           std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace sfvs
