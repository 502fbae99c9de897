#include <doctest.h>

#include <random>

#include "sfvs/errors.hpp"
#include "sfvs/oracle.hpp"
#include "sfvs/reductions.hpp"
#include "sfvs/solver_rooted_path.hpp"

using namespace sfvs;

namespace {

Instance triangle() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return build_instance(3, e);
}

int max_subtree_leaves(const TreeModel& m) {
  int best = 0;
  for (Vertex v = 0; v < m.num_vertices(); ++v) best = std::max(best, subtree_leaf_count(m, v));
  return best;
}

}  // namespace

TEST_CASE("gen_random_model is deterministic") {
  auto a = gen_random_model(15, 3, 2, 7);
  auto b = gen_random_model(15, 3, 2, 7);
  CHECK(a.parent == b.parent);
  CHECK(a.subtree == b.subtree);
  auto c = gen_random_model(15, 3, 2, 8);
  CHECK((a.parent != c.parent || a.subtree != c.subtree));
  auto ia = gen_random_instance(a, 7), ib = gen_random_instance(a, 7);
  CHECK(ia.weight == ib.weight);
  CHECK(ia.in_s == ib.in_s);
}

TEST_CASE("gen_random_model shapes") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto path = gen_random_model(12, 2, 2, seed);
    CHECK(host_leaves(path).size() <= 2);
    auto rp = gen_random_model(12, 4, 1, seed);
    CHECK(is_rooted_path_model(rp));
    auto any = gen_random_model(12, 4, 3, seed);
    CHECK(host_leaves(any).size() <= 4);
    CHECK(rooted_vertex_leafage(any) <= 3);
    auto g = gen_random_instance(any, seed);
    CHECK(validate_model(any, g).ok());
    for (Weight w : g.weight) CHECK((w >= 0 && w <= 10));
  }
  auto sized = gen_random_model(50, 8, 1, 3, RandomShape{100, 20});
  CHECK(sized.num_nodes == 100);
  CHECK_THROWS_AS(gen_random_model(5, 2, 3, 1), InvalidInput);
  CHECK_THROWS_AS(gen_random_model(5, 2, 0, 1), InvalidInput);
  CHECK_THROWS_AS(gen_random_model(-1, 2, 1, 1), InvalidInput);
}

TEST_CASE("max-cut gadget of a triangle") {
  auto g = maxcut_gadget(triangle());
  CHECK(g.inst.n == 126);
  CHECK(validate_model(g.model, g.inst).ok());
  CHECK(max_subtree_leaves(g.model) <= 2);
  for (const auto& zs : g.Z)
    for (Vertex z : zs) CHECK(g.inst.adjacency[z].size() == 2);

  std::vector<Vertex> a{0};
  auto U = maxcut_certificate(g, a);
  CHECK(cut_size(g.base, a) == 2);
  CHECK(U.size() == 43);
  CHECK(verify_sfvs(g.inst, U).feasible);

  auto U0 = maxcut_certificate(g, std::vector<Vertex>{});
  CHECK(U0.size() == 45);
  CHECK(verify_sfvs(g.inst, U0).feasible);
}

TEST_CASE("max-cut certificates shrink as the cut grows") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) e.push_back({i, j});
    auto base = build_instance(n, e);
    auto g = maxcut_gadget(base);
    int m = static_cast<int>(e.size());
    CHECK(g.inst.n == 12 * n * n + 4 * n + 2 * m);
    std::map<int, std::size_t> best;  // cut size -> smallest |U|
    for (int mask = 0; mask < (1 << n); ++mask) {
      VertexSet a;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) a.push_back(v);
      auto U = maxcut_certificate(g, a);
      int k = cut_size(base, a);
      CHECK(static_cast<int>(U.size()) == 4 * n * n + n + 2 * m - k);
      auto [it, fresh] = best.emplace(k, U.size());
      if (!fresh) it->second = std::min(it->second, U.size());
    }
    std::size_t prev = SIZE_MAX;
    for (auto [k, size] : best) {
      CHECK(size < prev);
      prev = size;
    }
  }
}

TEST_CASE("mcc gadget, k = 2, p = 2, one edge") {
  MccInstance mcc{2, 2, {{1, 1, 2, 2}}};
  auto g = mcc_gadget(mcc);
  CHECK(g.scale == 2);
  CHECK_FALSE(g.equivalence_threshold_met);
  CHECK(validate_model(g.model, g.inst).ok());
  CHECK(host_leaves(g.model).size() == 5);
  auto cliques = multicolored_cliques(mcc);
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0] == std::vector<int>{1, 2});
  auto U = mcc_certificate(g, cliques[0]);
  CHECK(verify_sfvs(g.inst, U).feasible);
  CHECK(g.inst.weight_of(U) == 16);
  CHECK(mcc_certificate_weight(2, 2, 1) == 16);
  CHECK_THROWS_AS(mcc_certificate(g, std::vector<int>{1, 1}), InvalidInput);
}

TEST_CASE("mcc input checks") {
  CHECK_THROWS_AS(mcc_gadget(MccInstance{1, 2, {}}), InvalidInput);
  CHECK_THROWS_AS(mcc_gadget(MccInstance{2, 2, {{1, 1, 1, 2}}}), InvalidInput);
  CHECK_THROWS_AS(mcc_gadget(MccInstance{2, 2, {{1, 3, 2, 1}}}), InvalidInput);
  CHECK_THROWS_AS(mcc_gadget(MccInstance{2, 2, {{1, 1, 2, 1}, {1, 1, 2, 1}}}), InvalidInput);
}

TEST_CASE("mcc gadgets with k = 3") {
  std::mt19937_64 rng(4);
  int tried = 0;
  while (tried < 10) {
    MccInstance mcc{3, 2 + static_cast<int>(rng() % 2), {}};
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        for (int a = 1; a <= mcc.p; ++a)
          for (int b = 1; b <= mcc.p; ++b)
            if (rng() % 100 < 60) mcc.edges.push_back({i, a, j, b});
    auto cl = multicolored_cliques(mcc);
    if (cl.empty()) continue;
    ++tried;
    auto g = mcc_gadget(mcc);
    CHECK(validate_model(g.model, g.inst).ok());
    CHECK(2 * host_leaves(g.model).size() <= static_cast<std::size_t>(3 * 6));
    auto U = mcc_certificate(g, cl[0]);
    CHECK(verify_sfvs(g.inst, U).feasible);
    CHECK(g.inst.weight_of(U) ==
          mcc_certificate_weight(3, mcc.p, static_cast<int>(mcc.edges.size())));
  }
}
