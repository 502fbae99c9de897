#include "sfvs/solver_leafage.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "sfvs/errors.hpp"

namespace sfvs {

std::size_t DPKeyHash::operator()(const DPKey& k) const noexcept {
  std::size_t h = std::hash<int>{}(k.u);
  for (Vertex v : k.y) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

LeafageDP::LeafageDP(const OrderIndex& oi, SolveOptions opts)
    : oi_(oi),
      inst_(oi.instance()),
      opts_(opts),
      leafage_(std::max(1, sfvs::leafage(oi.model()))) {}

DPKey LeafageDP::make_key(Vertex u, VertexSet y) const {
  DPKey key{u, std::move(y)};
  check_key(key);
  return key;
}

void LeafageDP::check_key(const DPKey& key) const {
  const auto& y = key.y;
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("leafage DP key invariant: ") + what +
                           " at u=" + std::to_string(key.u));
  };
  if (!unreduced_ && static_cast<int>(y.size()) > max_conditioning())
    fail("conditioning set larger than 2l+1");
  bool has_s = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (oi_.le(y[i], key.u)) fail("y meets V_u");
    if (!oi_.adjacent(key.u, y[i])) fail("u + y is not a clique");
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (!oi_.adjacent(y[i], y[j])) fail("y is not a clique");
    has_s = has_s || inst_.is_terminal(y[i]);
  }
  if (y.size() >= 3 && has_s) fail("y is not an S-forest");
}

bool LeafageDP::include_allowed(const DPKey& key) const {
  if (key.y.size() < 2) return true;
  if (inst_.is_terminal(key.u)) return false;
  return std::none_of(key.y.begin(), key.y.end(),
                      [&](Vertex w) { return inst_.is_terminal(w); });
}

std::vector<DPKey> LeafageDP::child_keys(const DPKey& key,
                                         Branch branch) const {
  const Vertex u = key.u;
  const auto& W = key.y;
  std::vector<DPKey> out;
  auto restrict_to = [&](Vertex c, std::span<const Vertex> set) {
    VertexSet r;
    for (Vertex x : set)
      if (oi_.adjacent(c, x)) r.push_back(x);
    std::sort(r.begin(), r.end());
    return r;
  };

  if (branch == Branch::kExclude) {
    for (Vertex c : oi_.pred_max(u)) out.push_back(make_key(c, restrict_to(c, W)));
    return out;
  }
  if (!include_allowed(key))
    throw std::logic_error("include branch requested where u must go");

  if (W.empty()) {
    for (Vertex c : oi_.pred_max(u)) {
      Vertex self[] = {u};
      out.push_back(make_key(c, restrict_to(c, self)));
    }
    return out;
  }
  bool touches_s = inst_.is_terminal(u) ||
                   std::any_of(W.begin(), W.end(),
                               [&](Vertex w) { return inst_.is_terminal(w); });
  if (touches_s) {
    // |W| = 1 here; include_allowed ruled out the rest.
    Vertex w = W.front();
    Vertex pair[] = {u, w};
    for (Vertex c : oi_.pred_edge(u, w)) out.push_back(make_key(c, restrict_to(c, pair)));
    return out;
  }
  VertexSet uw = W;
  uw.push_back(u);
  for (Vertex c : oi_.pred_max(u))
    out.push_back(make_key(c, f_le2(oi_, restrict_to(c, uw))));
  return out;
}

Weight LeafageDP::evaluate(const DPKey& root) {
  if (auto it = table_.find(root); it != table_.end()) return it->second.weight;
  std::vector<DPKey> work{root};
  while (!work.empty()) {
    DPKey key = work.back();
    if (table_.count(key)) {
      work.pop_back();
      continue;
    }
    auto excl = child_keys(key, Branch::kExclude);
    std::vector<DPKey> incl;
    bool can_include = include_allowed(key);
    if (can_include) incl = child_keys(key, Branch::kInclude);
    bool ready = true;
    for (const auto* list : {&excl, &incl})
      for (const auto& c : *list)
        if (!table_.count(c)) {
          work.push_back(c);
          ready = false;
        }
    if (!ready) continue;

    Weight ex = 0;
    for (const auto& c : excl) ex += table_.at(c).weight;
    DPEntry entry{ex, Branch::kExclude};
    if (can_include) {
      Weight in = inst_.weight[key.u];
      for (const auto& c : incl) in += table_.at(c).weight;
      if (in >= ex) entry = {in, Branch::kInclude};
    }
    table_.emplace(std::move(key), entry);
    work.pop_back();
    if (table_.size() > opts_.max_table_entries)
      throw ResourceExceeded("leafage table exceeded " +
                             std::to_string(opts_.max_table_entries) +
                             " entries (leafage " + std::to_string(leafage_) +
                             ")");
  }
  return table_.at(root).weight;
}

VertexSet LeafageDP::reconstruct(const DPKey& root) const {
  VertexSet out;
  std::vector<DPKey> work{root};
  while (!work.empty()) {
    DPKey key = std::move(work.back());
    work.pop_back();
    auto it = table_.find(key);
    if (it == table_.end())
      throw std::logic_error("reconstruct: dangling key at u=" +
                             std::to_string(key.u));
    if (it->second.choice == Branch::kInclude) out.push_back(key.u);
    for (auto& c : child_keys(key, it->second.choice)) work.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet LeafageDP::solve() {
  VertexSet kept;
  for (Vertex t : oi_.tops()) {
    DPKey key{t, {}};
    evaluate(key);
    auto part = reconstruct(key);
    kept.insert(kept.end(), part.begin(), part.end());
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void LeafageDP::run_debug_checks() {
  std::vector<DPKey> keys;
  keys.reserve(table_.size());
  for (const auto& [k, e] : table_) keys.push_back(k);
  for (const auto& key : keys) {
    const DPEntry entry = table_.at(key);
    VertexSet got = reconstruct(key);
    if (inst_.weight_of(got) != entry.weight)
      throw std::logic_error("debug: reconstructed weight differs at u=" +
                             std::to_string(key.u));
    for (Vertex x : got)
      if (!oi_.le(x, key.u))
        throw std::logic_error("debug: reconstruction leaves V_u");
    // children partition: their sets are disjoint and sum up
    std::size_t parts = entry.choice == Branch::kInclude ? 1 : 0;
    for (const auto& c : child_keys(key, entry.choice)) parts += reconstruct(c).size();
    if (parts != got.size())
      throw std::logic_error("debug: child optima overlap at u=" +
                             std::to_string(key.u));
    VertexSet with_y = set_union(got, key.y);
    if (!is_s_forest(inst_, with_y))
      throw std::logic_error("debug: infeasible entry at u=" +
                             std::to_string(key.u));
    // representatives stand in for the full conditioning set
    if (include_allowed(key) && !key.y.empty()) {
      bool touches_s = inst_.is_terminal(key.u) ||
                       std::any_of(key.y.begin(), key.y.end(), [&](Vertex w) {
                         return inst_.is_terminal(w);
                       });
      if (touches_s) continue;
      for (Vertex c : oi_.pred_max(key.u)) {
        VertexSet full;
        for (Vertex x : set_union(key.y, VertexSet{key.u}))
          if (oi_.adjacent(c, x)) full.push_back(x);
        DPKey direct{c, full};
        DPKey reduced{c, f_le2(oi_, full)};
        // unreduced keys may legitimately exceed the 2l+1 bound
        unreduced_ = true;
        Weight a = evaluate(direct);
        unreduced_ = false;
        if (a != evaluate(reduced))
          throw std::logic_error("debug: representatives change the optimum at u=" +
                                 std::to_string(c));
      }
    }
  }
}

Solution solve_bounded_leafage(const Instance& inst, const ExpandedTreeModel& em,
                               const SolveOptions& opts, SolveStats* stats) {
  auto start = std::chrono::steady_clock::now();
  SolveStats local;
  local.leafage = leafage(em);
  local.vertex_leafage = vertex_leafage(em);
  auto sol = solve_by_components(
      inst, em, [&](const Instance& sub, const ExpandedTreeModel& sub_em) {
        OrderIndex oi(sub, sub_em);
        LeafageDP dp(oi, opts);
        VertexSet kept = dp.solve();
        if (opts.debug_checks) dp.run_debug_checks();
        ++local.components;
        local.table_entries += dp.table().size();
        return kept;
      });
  if (!is_s_forest(inst, sol.kept))
    throw std::logic_error("leafage solver returned an infeasible set");
  local.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (stats) *stats = local;
  return sol;
}

Solution solve_bounded_leafage(const Instance& inst, const TreeModel& model,
                               const SolveOptions& opts, SolveStats* stats) {
  auto em = prepare_model(inst, model, RootPolicy::kFirstNonLeaf);
  return solve_bounded_leafage(inst, em, opts, stats);
}

}  // namespace sfvs
