#include "sfvs/oracle.hpp"

#include <algorithm>
#include <string>

#include "sfvs/chordal.hpp"
#include "sfvs/errors.hpp"

namespace sfvs {

namespace {

class Search {
 public:
  Search(const Instance& inst, std::uint64_t budget)
      : inst_(inst), budget_(budget), kept_(inst.n, 0) {
    auto peo = recognize_chordal(inst);
    chordal_ = peo.has_value();
    if (chordal_) {
      order_ = peo->order;
    } else {
      order_.resize(inst.n);
      for (Vertex v = 0; v < inst.n; ++v) order_[v] = v;
    }
    suffix_.assign(inst.n + 1, 0);
    for (int i = inst.n - 1; i >= 0; --i)
      suffix_[i] = suffix_[i + 1] + inst.weight[order_[i]];
  }

  OracleResult run() {
    dfs(0, 0);
    OracleResult res;
    res.timed_out = timed_out_;
    res.explored = explored_;
    res.solution = make_solution(inst_, best_set_);
    return res;
  }

 private:
  bool can_add(Vertex v) {
    if (chordal_) {
      const auto& nb = inst_.adjacency[v];
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex a = nb[i];
        if (!kept_[a]) continue;
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          Vertex b = nb[j];
          if (!kept_[b] || !inst_.adjacent(a, b)) continue;
          if (inst_.in_s[v] || inst_.in_s[a] || inst_.in_s[b]) return false;
        }
      }
      return true;
    }
    current_.push_back(v);
    bool ok = is_s_forest(inst_, current_);
    current_.pop_back();
    return ok;
  }

  void dfs(int i, Weight weight) {
    if (timed_out_) return;
    if (++explored_ > budget_) {
      timed_out_ = true;
      return;
    }
    if (weight + suffix_[i] <= best_ && best_ >= 0) return;
    if (i == inst_.n) {
      best_ = weight;
      best_set_ = current_;
      return;
    }
    Vertex v = order_[i];
    if (can_add(v)) {
      kept_[v] = 1;
      current_.push_back(v);
      dfs(i + 1, weight + inst_.weight[v]);
      current_.pop_back();
      kept_[v] = 0;
    }
    dfs(i + 1, weight);
  }

  const Instance& inst_;
  std::uint64_t budget_;
  bool chordal_ = false;
  std::vector<Vertex> order_;
  std::vector<Weight> suffix_;
  std::vector<char> kept_;
  std::vector<Vertex> current_;
  Weight best_ = -1;
  std::vector<Vertex> best_set_;
  std::uint64_t explored_ = 0;
  bool timed_out_ = false;
};

}  // namespace

OracleResult brute_force_sfvs(const Instance& inst, std::uint64_t budget) {
  return Search(inst, budget).run();
}

Verification verify_sfvs(const Instance& inst, std::span<const Vertex> removed) {
  std::vector<char> gone(inst.n, 0);
  Verification out;
  for (Vertex v : removed) {
    if (v < 0 || v >= inst.n)
      throw InvalidInput("removed vertex out of range: " + std::to_string(v));
    if (!gone[v]) out.removed_weight += inst.weight[v];
    gone[v] = 1;
  }
  VertexSet kept;
  for (Vertex v = 0; v < inst.n; ++v)
    if (!gone[v]) kept.push_back(v);
  out.feasible = is_s_forest(inst, kept);
  return out;
}

}  // namespace sfvs
