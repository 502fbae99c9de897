#include "sfvs/solver_rooted_path.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

std::size_t RPKeyHash::operator()(const RPKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.u) * 0x9e3779b97f4a7c15ULL;
  h ^= static_cast<std::size_t>(k.v + 1) * 0xc2b2ae3d27d4eb4fULL + (h << 6);
  h ^= static_cast<std::size_t>(k.y + 2) * 0x165667b19e3779f9ULL + (h >> 3);
  return h;
}

RootedPathDP::RootedPathDP(const RootedPathIndex& rp, SolveOptions opts)
    : rp_(rp), oi_(rp.order()), inst_(rp.order().instance()), opts_(opts) {
  // keys: n plain, m plain-with-y, m pairs, at most m*n pairs-with-y
  const std::size_t n = inst_.n, m = inst_.num_edges();
  cap_ = 2 * n * (n + m) + n + 1;
}

Vertex RootedPathDP::raw_umbrella(Vertex u, Vertex v) const {
  Vertex t = rp_.umbrella(u, v);
  return t == -1 ? u : t;
}

RPKey RootedPathDP::make_key(Vertex u, Vertex v, Vertex y) const {
  while (v != u && inst_.is_terminal(v)) v = raw_umbrella(u, v);
  RPKey key{u, v, y};
  check_key(key);
  return key;
}

void RootedPathDP::check_key(const RPKey& key) const {
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("rooted-path key invariant: ") + what +
                           " at (" + std::to_string(key.u) + "," +
                           std::to_string(key.v) + "," + std::to_string(key.y) +
                           ")");
  };
  if (!key.plain()) {
    if (!oi_.lt(key.u, key.v)) fail("anchor pair not ordered");
    if (inst_.is_terminal(key.v)) fail("anchor top in S");
    if (!oi_.adjacent(key.u, key.v)) fail("anchor pair not adjacent");
  }
  if (key.y != -1) {
    if (!oi_.lt(key.v, key.y)) fail("y not above the anchor");
    if (!oi_.adjacent(key.v, key.y) || !oi_.adjacent(key.u, key.y))
      fail("anchor and y not a clique");
    if (!key.plain() && inst_.is_terminal(key.y)) fail("y in S on a pair anchor");
  }
  if (table_.size() > cap_) fail("table exceeds c*n*(n+m)");
}

VertexSet RootedPathDP::anchor_set(Vertex u, Vertex v) const {
  auto below = oi_.below(u);
  VertexSet out(below.begin(), below.end());
  if (v != u) {
    const auto& em = oi_.model();
    Node ru = em.root_of[u];
    for (Vertex x = oi_.successor(u); x != -1; x = oi_.successor(x)) {
      if (!inst_.is_terminal(x) && oi_.node_lt(rp_.leaf(x), ru)) out.push_back(x);
      if (x == v) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RPBranch RootedPathDP::branch(const RPKey& key, Branch which) const {
  const auto& em = oi_.model();
  const Vertex u = key.u, v = key.v, y = key.y;
  RPBranch out;
  // the one of {a, b} adjacent to c, or -1
  auto pick = [&](Vertex c, Vertex a, Vertex b) {
    bool ja = oi_.adjacent(c, a), jb = oi_.adjacent(c, b);
    if (ja && jb) throw std::logic_error("child adjacent to both conditioning vertices");
    return ja ? a : (jb ? b : -1);
  };
  auto passes = [&](Vertex x, Vertex a) {  // l(x) < r(a) < r(x)
    Node ra = em.root_of[a];
    return oi_.node_lt(rp_.leaf(x), ra) && oi_.node_lt(ra, em.root_of[x]);
  };

  if (key.plain()) {
    const auto& pred = oi_.pred_max(u);
    if (which == Branch::kExclude) {
      for (Vertex c : pred)
        out.children.push_back(make_key(c, c, y != -1 && oi_.adjacent(c, y) ? y : -1));
      return out;
    }
    out.own = inst_.weight[u];
    if (y == -1) {
      for (Vertex c : pred) out.children.push_back(make_key(c, c, oi_.adjacent(c, u) ? u : -1));
      return out;
    }
    const Vertex w = y;
    const auto& A = oi_.pred_edge(u, w);
    if (inst_.is_terminal(u) || inst_.is_terminal(w)) {
      for (Vertex a : A) out.children.push_back(make_key(a, a, pick(a, u, w)));
      return out;
    }
    for (Vertex a : A) out.children.push_back(make_key(a, raw_umbrella(a, u), pick(a, u, w)));
    // non-S common neighbours below u that no child anchor reaches
    for (Vertex x : oi_.below(u).subspan(1)) {
      if (inst_.is_terminal(x) || !oi_.adjacent(x, u) || !oi_.adjacent(x, w)) continue;
      if (std::none_of(A.begin(), A.end(), [&](Vertex a) { return passes(x, a); }))
        out.bulk.push_back(x);
    }
    std::sort(out.bulk.begin(), out.bulk.end());
    for (Vertex x : out.bulk) out.own += inst_.weight[x];
    return out;
  }

  const Vertex t = raw_umbrella(u, v);
  if (which == Branch::kExclude) {
    out.children.push_back(make_key(u, t, y));
    return out;
  }
  out.own = inst_.weight[v];
  if (y == -1) {
    out.children.push_back(make_key(u, t, v));
    return out;
  }
  const Vertex w = y;
  std::vector<Vertex> A;
  for (Vertex a : oi_.pred_edge(v, w))
    if (oi_.le(a, u)) A.push_back(a);
  std::vector<Vertex> tops;
  for (Vertex a : A) {
    Vertex ta = raw_umbrella(a, v);
    out.children.push_back(make_key(a, ta, pick(a, v, w)));
    tops.push_back(ta);
  }
  // non-S part of V_{u,t} outside every child anchor V_{a, a◁v}
  for (Vertex x : anchor_set(u, t)) {
    if (inst_.is_terminal(x)) continue;
    bool covered = false;
    for (std::size_t i = 0; i < A.size() && !covered; ++i) {
      Vertex a = A[i];
      if (oi_.le(x, a)) covered = true;
      else if (tops[i] != a && passes(x, a) &&
               oi_.node_le(em.root_of[x], em.root_of[tops[i]]))
        covered = true;
    }
    if (!covered) out.bulk.push_back(x);
  }
  for (Vertex x : out.bulk) out.own += inst_.weight[x];
  return out;
}

Weight RootedPathDP::evaluate(const RPKey& root) {
  if (auto it = table_.find(root); it != table_.end()) return it->second.weight;
  std::vector<RPKey> work{root};
  while (!work.empty()) {
    RPKey key = work.back();
    if (table_.count(key)) {
      work.pop_back();
      continue;
    }
    RPBranch ex = branch(key, Branch::kExclude);
    RPBranch in = branch(key, Branch::kInclude);
    bool ready = true;
    for (const auto* b : {&ex, &in})
      for (const auto& c : b->children)
        if (!table_.count(c)) {
          work.push_back(c);
          ready = false;
        }
    if (!ready) continue;
    Weight wex = ex.own, win = in.own;
    for (const auto& c : ex.children) wex += table_.at(c).weight;
    for (const auto& c : in.children) win += table_.at(c).weight;
    DPEntry entry{wex, Branch::kExclude};
    if (win >= wex) entry = {win, Branch::kInclude};
    table_.emplace(key, entry);
    work.pop_back();
    if (table_.size() > opts_.max_table_entries)
      throw ResourceExceeded("rooted-path table exceeded " +
                             std::to_string(opts_.max_table_entries) + " entries");
  }
  return table_.at(root).weight;
}

VertexSet RootedPathDP::reconstruct(const RPKey& root) const {
  VertexSet out;
  std::vector<RPKey> work{root};
  while (!work.empty()) {
    RPKey key = work.back();
    work.pop_back();
    auto it = table_.find(key);
    if (it == table_.end())
      throw std::logic_error("reconstruct: dangling rooted-path key");
    RPBranch b = branch(key, it->second.choice);
    if (it->second.choice == Branch::kInclude) out.push_back(key.v);
    out.insert(out.end(), b.bulk.begin(), b.bulk.end());
    work.insert(work.end(), b.children.begin(), b.children.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet RootedPathDP::solve() {
  VertexSet kept;
  for (Vertex t : oi_.tops()) {
    RPKey key = make_key(t, t, -1);
    evaluate(key);
    auto part = reconstruct(key);
    kept.insert(kept.end(), part.begin(), part.end());
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void RootedPathDP::run_debug_checks() const {
  for (const auto& [key, entry] : table_) {
    VertexSet got = reconstruct(key);
    if (std::adjacent_find(got.begin(), got.end()) != got.end())
      throw std::logic_error("debug: rooted-path reconstruction repeats a vertex");
    if (inst_.weight_of(got) != entry.weight)
      throw std::logic_error("debug: rooted-path reconstructed weight differs");
    VertexSet domain = anchor_set(key.u, key.v);
    if (!std::includes(domain.begin(), domain.end(), got.begin(), got.end()))
      throw std::logic_error("debug: rooted-path reconstruction leaves V_{u,v}");
    VertexSet with_y = got;
    if (key.y != -1) with_y = set_union(got, VertexSet{key.y});
    if (!is_s_forest(inst_, with_y))
      throw std::logic_error("debug: rooted-path entry infeasible");
  }
}

Solution solve_rooted_path(const Instance& inst, const ExpandedTreeModel& em,
                           const SolveOptions& opts, SolveStats* stats) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& ls : em.leaves_of)
    if (ls.size() != 1) throw NotRootedPath("model is not a rooted-path model");
  SolveStats local;
  local.leafage = leafage(em);
  local.vertex_leafage = vertex_leafage(em);
  auto sol = solve_by_components(
      inst, em, [&](const Instance& sub, const ExpandedTreeModel& sub_em) {
        OrderIndex oi(sub, sub_em);
        RootedPathIndex rp(oi);
        RootedPathDP dp(rp, opts);
        VertexSet kept = dp.solve();
        if (opts.debug_checks) dp.run_debug_checks();
        ++local.components;
        local.table_entries += dp.table_size();
        return kept;
      });
  if (!is_s_forest(inst, sol.kept))
    throw std::logic_error("rooted-path solver returned an infeasible set");
  local.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (stats) *stats = local;
  return sol;
}

Solution solve_rooted_path(const Instance& inst, const TreeModel& model,
                           const SolveOptions& opts, SolveStats* stats) {
  require_valid(model, inst);
  if (!is_rooted_path_model(model))
    throw NotRootedPath("every subtree must be a downward path from its root");
  auto em = prepare_model(inst, model, RootPolicy::kKeepDeclared);
  return solve_rooted_path(inst, em, opts, stats);
}

}  // namespace sfvs
