#include "sfvs/reductions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Relabels an undirected tree so that `root` is node 0 and ids follow BFS
// order; returns the parent array.
std::vector<Node> bfs_parents(const std::vector<std::vector<Node>>& adj,
                              Node root) {
  const int N = static_cast<int>(adj.size());
  std::vector<Node> id(N, -1), order{root};
  id[root] = 0;
  std::vector<Node> parent(N, -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Node y : adj[order[i]])
      if (id[y] == -1) {
        id[y] = static_cast<Node>(order.size());
        parent[id[y]] = id[order[i]];
        order.push_back(y);
      }
  return parent;
}

std::vector<Node> random_host(int N, int leaves, Rng& rng) {
  if (N == 1) return {-1};
  std::vector<std::vector<Node>> adj(N);
  auto link = [&](Node a, Node b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  std::vector<Node> interior;
  if (leaves <= 2 || rng() % 2 == 0) {
    // spider: centre 0, `legs` paths sharing the remaining nodes
    int legs = std::min(std::max(leaves, 1), N - 1);
    if (leaves <= 2) legs = std::min(2, N - 1);
    std::vector<int> len(legs, 1);
    for (int extra = N - 1 - legs; extra > 0; --extra) ++len[uniform(rng, 0, legs - 1)];
    Node next = 1;
    for (int l : len) {
      Node prev = 0;
      for (int s = 0; s < l; ++s) {
        link(prev, next);
        prev = next++;
      }
    }
    for (Node x = 0; x < N; ++x)
      if (adj[x].size() >= 2) interior.push_back(x);
  } else {
    // caterpillar: spine plus pendants on interior spine nodes
    int pendants = std::min(leaves - 2, N - 3);
    int spine = N - pendants;
    for (Node x = 1; x < spine; ++x) link(x - 1, x);
    for (int q = 0; q < pendants; ++q) link(uniform(rng, 1, spine - 2), spine + q);
    for (Node x = 1; x + 1 < spine; ++x) interior.push_back(x);
  }
  Node root = interior.empty() ? 0 : interior[uniform(rng, 0, static_cast<int>(interior.size()) - 1)];
  return bfs_parents(adj, root);
}

}  // namespace

TreeModel gen_random_model(int n, int max_leaves, int vertex_leafage,
                           std::uint64_t seed, const RandomShape& shape) {
  if (n < 0 || max_leaves < 0)
    throw InvalidInput("gen_random_model: negative size or leaf bound");
  if (vertex_leafage < 1 || vertex_leafage > std::max(1, max_leaves))
    throw InvalidInput("gen_random_model: vertex leafage " +
                       std::to_string(vertex_leafage) +
                       " not in [1, max(1, leafage)]");
  Rng rng(seed);
  int N = 1;
  if (max_leaves >= 2)
    N = shape.host_nodes > 0
            ? std::max(shape.host_nodes, 3)
            : uniform(rng, max_leaves + 1, std::max(max_leaves + 1, n + max_leaves));
  TreeModel model;
  model.num_nodes = N;
  model.parent = random_host(N, max_leaves, rng);
  std::vector<std::vector<Node>> children(N);
  for (Node x = 1; x < N; ++x) children[model.parent[x]].push_back(x);

  int growth = shape.subtree_growth > 0 ? shape.subtree_growth : std::max(1, N / 2);
  std::vector<char> in(N, 0);
  std::vector<int> child_count(N, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Node> nodes{static_cast<Node>(uniform(rng, 0, N - 1))};
    in[nodes[0]] = 1;
    int leaves = 1;
    int steps = uniform(rng, 0, growth);
    for (int s = 0, tries = 0; s < steps && tries < 4 * steps + 8; ++tries) {
      Node y = nodes[uniform(rng, 0, static_cast<int>(nodes.size()) - 1)];
      std::vector<Node> free;
      for (Node c : children[y])
        if (!in[c]) free.push_back(c);
      if (free.empty()) continue;
      int after = leaves + (child_count[y] == 0 ? 0 : 1);
      if (after > vertex_leafage) continue;
      Node c = free[uniform(rng, 0, static_cast<int>(free.size()) - 1)];
      in[c] = 1;
      ++child_count[y];
      leaves = after;
      nodes.push_back(c);
      ++s;
    }
    for (Node x : nodes) {
      in[x] = 0;
      child_count[x] = 0;
    }
    std::sort(nodes.begin(), nodes.end());
    model.subtree.push_back(std::move(nodes));
  }
  return model;
}

Instance gen_random_instance(const TreeModel& model, std::uint64_t seed,
                             Weight max_weight, double s_prob) {
  Rng rng(seed ^ 0x5f5f5f5f5f5f5f5fULL);
  const int n = model.num_vertices();
  std::vector<Weight> w(n);
  std::vector<char> s(n);
  for (Vertex v = 0; v < n; ++v) {
    w[v] = std::uniform_int_distribution<Weight>(0, max_weight)(rng);
    s[v] = std::uniform_real_distribution<double>(0, 1)(rng) < s_prob;
  }
  auto edges = realized_edges(model);
  return build_instance(n, edges, w, s);
}

// ---- multicolored clique ---------------------------------------------------

void check_mcc(const MccInstance& mcc) {
  if (mcc.k < 2) throw InvalidInput("MCC needs k >= 2");
  if (mcc.p < 1) throw InvalidInput("MCC needs p >= 1");
  auto edges = mcc.edges;
  for (const auto& e : edges) {
    if (e.i < 1 || e.j > mcc.k || e.i >= e.j)
      throw InvalidInput("MCC edge classes must satisfy 1 <= i < j <= k");
    if (e.a < 1 || e.a > mcc.p || e.b < 1 || e.b > mcc.p)
      throw InvalidInput("MCC edge index outside class of size p");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidInput("duplicate MCC edge");
}

Vertex MccGadget::s_of(int i, int a, int c) const {
  int p = base.p;
  int slot = a > 0 ? a - 1 : p + (-a) - 1;
  return s_vertex[i - 1][slot][c - 1];
}

VertexSet MccGadget::s_window(int i, int a) const {
  VertexSet out;
  for (int a2 = a - base.p; a2 <= a; ++a2) {
    if (a2 == 0) continue;
    out.push_back(s_of(i, a2, 1));
    out.push_back(s_of(i, a2, 2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight mcc_certificate_weight(int k, int p, int m) {
  return Weight{p} * m - Weight{p} * k * (k - 9) / 2;
}

MccGadget mcc_gadget(const MccInstance& mcc) {
  check_mcc(mcc);
  const int k = mcc.k, p = mcc.p;
  const int m = static_cast<int>(mcc.edges.size());
  MccGadget g;
  g.base = mcc;
  g.equivalence_threshold_met = k >= 10;

  // host: root 0, arms x_i^{1..p} and x_i^{-1..-p}, leaves y_ij
  auto x_node = [&](int i, int a) -> Node {
    if (a == 0) return 0;
    int base = 1 + (i - 1) * 2 * p;
    return a > 0 ? base + a - 1 : base + p + (-a) - 1;
  };
  std::vector<std::vector<Node>> y_node(k, std::vector<Node>(k, -1));
  Node next = 1 + 2 * k * p;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) y_node[i - 1][j - 1] = next++;
  TreeModel& model = g.model;
  model.num_nodes = next;
  model.parent.assign(next, 0);
  model.parent[0] = -1;
  for (int i = 1; i <= k; ++i)
    for (int a = 2; a <= p; ++a) {
      model.parent[x_node(i, a)] = x_node(i, a - 1);
      model.parent[x_node(i, -a)] = x_node(i, -(a - 1));
    }

  // arm nodes x_i^{a'} for a - p <= a' <= a, which includes the root
  auto arm = [&](int i, int a, std::vector<Node>& out) {
    for (int a2 = a - p; a2 <= a; ++a2) out.push_back(x_node(i, a2));
  };

  std::vector<Weight> w;
  std::vector<char> s;
  for (const auto& e : mcc.edges) {
    std::vector<Node> nodes{y_node[e.i - 1][e.j - 1]};
    arm(e.i, e.a, nodes);
    arm(e.j, e.b, nodes);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.edge_vertex.push_back(static_cast<Vertex>(model.subtree.size()));
    model.subtree.push_back(std::move(nodes));
    w.push_back(p);
    s.push_back(0);
  }
  g.s_vertex.assign(k, std::vector<std::array<Vertex, 2>>(2 * p));
  for (int i = 1; i <= k; ++i)
    for (int a : [&] {
           std::vector<int> as;
           for (int t = 1; t <= p; ++t) as.push_back(t);
           for (int t = 1; t <= p; ++t) as.push_back(-t);
           return as;
         }())
      for (int c = 1; c <= 2; ++c) {
        int slot = a > 0 ? a - 1 : p + (-a) - 1;
        g.s_vertex[i - 1][slot][c - 1] = static_cast<Vertex>(model.subtree.size());
        model.subtree.push_back({x_node(i, a)});
        w.push_back(2);
        s.push_back(1);
      }
  g.pair_vertex.assign(k, std::vector<Vertex>(k, -1));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      g.pair_vertex[i - 1][j - 1] = static_cast<Vertex>(model.subtree.size());
      model.subtree.push_back({y_node[i - 1][j - 1]});
      w.push_back(Weight{p} * m);
      s.push_back(1);
    }

  auto edges = realized_edges(model);
  g.inst = build_instance(static_cast<int>(w.size()), edges, w, s);

  // N(e) meets S_i exactly in S_i^{a}, and N(s_ij) is R_ij
  for (std::size_t t = 0; t < mcc.edges.size(); ++t) {
    const auto& e = mcc.edges[t];
    Vertex ev = g.edge_vertex[t];
    for (auto [cls, idx] : {std::pair{e.i, e.a}, std::pair{e.j, e.b}}) {
      VertexSet seen;
      for (Vertex x : g.inst.adjacency[ev])
        for (int a2 = -p; a2 <= p; ++a2)
          if (a2 != 0 && (x == g.s_of(cls, a2, 1) || x == g.s_of(cls, a2, 2)))
            seen.push_back(x);
      std::sort(seen.begin(), seen.end());
      if (seen != g.s_window(cls, idx))
        throw std::logic_error("MCC gadget: N(e) does not meet S_i in S_i^a");
    }
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      VertexSet want;
      for (std::size_t t = 0; t < mcc.edges.size(); ++t)
        if (mcc.edges[t].i == i && mcc.edges[t].j == j) want.push_back(g.edge_vertex[t]);
      if (g.inst.adjacency[g.pair_vertex[i - 1][j - 1]] != want)
        throw std::logic_error("MCC gadget: N(s_ij) differs from R_ij");
    }
  return g;
}

VertexSet mcc_certificate(const MccGadget& g, std::span<const int> clique) {
  const auto& mcc = g.base;
  if (static_cast<int>(clique.size()) != mcc.k)
    throw InvalidInput("clique must pick one vertex per class");
  for (int a : clique)
    if (a < 1 || a > mcc.p) throw InvalidInput("clique index outside [1, p]");
  std::vector<char> in_clique(mcc.edges.size(), 0);
  for (int i = 1; i <= mcc.k; ++i)
    for (int j = i + 1; j <= mcc.k; ++j) {
      MccEdge want{i, clique[i - 1], j, clique[j - 1]};
      auto it = std::find(mcc.edges.begin(), mcc.edges.end(), want);
      if (it == mcc.edges.end())
        throw InvalidInput("not a multicolored clique: classes " +
                           std::to_string(i) + " and " + std::to_string(j) +
                           " are not joined");
      in_clique[it - mcc.edges.begin()] = 1;
    }
  VertexSet U;
  for (std::size_t t = 0; t < mcc.edges.size(); ++t)
    if (!in_clique[t]) U.push_back(g.edge_vertex[t]);
  for (int i = 1; i <= mcc.k; ++i) {
    auto win = g.s_window(i, clique[i - 1]);
    U.insert(U.end(), win.begin(), win.end());
  }
  std::sort(U.begin(), U.end());
  return U;
}

std::vector<std::vector<int>> multicolored_cliques(const MccInstance& mcc) {
  check_mcc(mcc);
  std::vector<std::vector<int>> out;
  std::vector<MccEdge> edges = mcc.edges;
  std::sort(edges.begin(), edges.end());
  std::vector<int> pick(mcc.k, 1);
  while (true) {
    bool ok = true;
    for (int i = 1; i <= mcc.k && ok; ++i)
      for (int j = i + 1; j <= mcc.k && ok; ++j)
        ok = std::binary_search(edges.begin(), edges.end(),
                                MccEdge{i, pick[i - 1], j, pick[j - 1]});
    if (ok) out.push_back(pick);
    int pos = 0;
    while (pos < mcc.k && pick[pos] == mcc.p) pick[pos++] = 1;
    if (pos == mcc.k) break;
    ++pick[pos];
  }
  return out;
}

// ---- max cut ---------------------------------------------------------------

MaxCutGadget maxcut_gadget(const Instance& base) {
  const int n = base.n;
  MaxCutGadget g;
  g.base = base;
  for (auto* sets : {&g.X, &g.Xbar, &g.Y, &g.Ybar, &g.Z, &g.Zbar, &g.E, &g.Ebar})
    sets->assign(n, {});
  Vertex next = 0;
  std::vector<char> s;
  auto take = [&](std::vector<Vertex>& into, int count, bool terminal) {
    for (int t = 0; t < count; ++t) {
      into.push_back(next++);
      s.push_back(terminal ? 1 : 0);
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    take(g.X[v], 2 * n, true);
    take(g.Xbar[v], 2 * n, true);
    take(g.Y[v], 2 * n + 1, false);
    take(g.Ybar[v], 2 * n + 1, false);
    take(g.Z[v], 2 * n + 1, true);
    take(g.Zbar[v], 2 * n + 1, true);
  }
  for (auto [u, v] : base.edges())
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      g.arc[{a, b}] = next;
      g.E[a].push_back(next);
      g.Ebar[b].push_back(next);
      ++next;
      s.push_back(0);
    }
  const int N = next;

  // edges straight from the construction
  std::vector<Edge> edges;
  VertexSet clique;
  for (Vertex v = 0; v < n; ++v) {
    clique.insert(clique.end(), g.Y[v].begin(), g.Y[v].end());
    clique.insert(clique.end(), g.Ybar[v].begin(), g.Ybar[v].end());
    clique.insert(clique.end(), g.E[v].begin(), g.E[v].end());
  }
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  auto complete = [&](const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    for (Vertex a : A)
      for (Vertex b : B) edges.emplace_back(a, b);
  };
  for (Vertex v = 0; v < n; ++v) {
    complete(g.X[v], g.Y[v]);
    complete(g.Xbar[v], g.Ybar[v]);
    complete(g.X[v], g.E[v]);
    complete(g.Xbar[v], g.Ebar[v]);
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(g.X[v][i], g.X[v][n + i]);
      edges.emplace_back(g.Xbar[v][i], g.Xbar[v][n + i]);
    }
    for (int j = 0; j < 2 * n + 1; ++j) {
      edges.emplace_back(g.Y[v][j], g.Z[v][j]);
      edges.emplace_back(g.Y[v][j], g.Zbar[v][j]);
      edges.emplace_back(g.Ybar[v][j], g.Z[v][j]);
      edges.emplace_back(g.Ybar[v][j], g.Zbar[v][j]);
    }
  }
  std::vector<Weight> w(N, 1);
  g.inst = build_instance(N, edges, w, s);

  // path model: root 0, P_X(v), P_Xbar(v), P_Z(v, j)
  TreeModel& model = g.model;
  model.parent.push_back(-1);
  auto path = [&](int len) {
    std::vector<Node> nodes;
    Node prev = 0;
    for (int t = 0; t < len; ++t) {
      Node x = static_cast<Node>(model.parent.size());
      model.parent.push_back(prev);
      nodes.push_back(x);
      prev = x;
    }
    return nodes;
  };
  std::vector<std::vector<Node>> px(n), pxb(n);
  std::vector<std::vector<std::vector<Node>>> pz(n);
  for (Vertex v = 0; v < n; ++v) {
    px[v] = path(n);
    pxb[v] = path(n);
    for (int j = 0; j < 2 * n + 1; ++j) pz[v].push_back(path(2));
  }
  model.num_nodes = static_cast<int>(model.parent.size());
  model.subtree.assign(N, {});
  auto with_root = [](std::vector<Node> a, const std::vector<Node>& b) {
    a.push_back(0);
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < n; ++i) {
      model.subtree[g.X[v][i]] = model.subtree[g.X[v][n + i]] = {px[v][i]};
      model.subtree[g.Xbar[v][i]] = model.subtree[g.Xbar[v][n + i]] = {pxb[v][i]};
    }
    for (int j = 0; j < 2 * n + 1; ++j) {
      model.subtree[g.Z[v][j]] = {pz[v][j][0]};
      model.subtree[g.Zbar[v][j]] = {pz[v][j][1]};
      model.subtree[g.Y[v][j]] = with_root(px[v], pz[v][j]);
      model.subtree[g.Ybar[v][j]] = with_root(pxb[v], pz[v][j]);
    }
  }
  for (const auto& [uv, x] : g.arc) model.subtree[x] = with_root(px[uv.first], pxb[uv.second]);
  return g;
}

int cut_size(const Instance& base, std::span<const Vertex> a_side) {
  std::vector<char> in_a(base.n, 0);
  for (Vertex v : a_side) in_a[v] = 1;
  int k = 0;
  for (auto [u, v] : base.edges())
    if (in_a[u] != in_a[v]) ++k;
  return k;
}

VertexSet maxcut_certificate(const MaxCutGadget& g, std::span<const Vertex> a_side) {
  const int n = g.base.n;
  std::vector<char> in_a(n, 0);
  for (Vertex v : a_side) {
    if (v < 0 || v >= n) throw InvalidInput("A-side vertex out of range");
    in_a[v] = 1;
  }
  VertexSet U;
  auto add = [&](const std::vector<Vertex>& part) { U.insert(U.end(), part.begin(), part.end()); };
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) {
      add(g.X[v]);
      add(g.Ybar[v]);
    } else {
      add(g.Xbar[v]);
      add(g.Y[v]);
    }
  }
  for (const auto& [uv, x] : g.arc)
    if (!(in_a[uv.first] && !in_a[uv.second])) U.push_back(x);
  std::sort(U.begin(), U.end());
  return U;
}

}  // namespace sfvs
