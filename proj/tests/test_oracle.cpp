#include <doctest.h>

#include <random>

#include "sfvs/errors.hpp"
#include "sfvs/oracle.hpp"
#include "support.hpp"

using namespace sfvs;

namespace {

Instance k4_one_terminal() {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return build_instance(4, e, std::vector<Vertex>{0});
}

Instance all_s_triangle() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return build_instance(3, e, std::vector<Vertex>{0, 1, 2});
}

// Every subset, no pruning.
Weight exhaustive(const Instance& g) {
  Weight best = -1;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    VertexSet kept;
    for (Vertex v = 0; v < g.n; ++v)
      if (mask >> v & 1) kept.push_back(v);
    if (is_s_forest(g, kept)) best = std::max(best, g.weight_of(kept));
  }
  return best;
}

}  // namespace

TEST_CASE("oracle on the small examples") {
  auto r = brute_force_sfvs(k4_one_terminal());
  CHECK_FALSE(r.timed_out);
  CHECK(r.solution.kept_weight == 3);
  CHECK(r.solution.kept == VertexSet{1, 2, 3});
  CHECK(brute_force_sfvs(all_s_triangle()).solution.kept_weight == 2);

  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  auto free = build_instance(4, e);
  CHECK(brute_force_sfvs(free).solution.kept == VertexSet{0, 1, 2, 3});
  CHECK(brute_force_sfvs(build_instance(0, std::vector<Edge>{})).solution.kept.empty());
  // zero weights with S empty: still everything
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto m = gen_random_model(12, 4, 2, seed);
    CHECK(brute_force_sfvs(gen_random_instance(m, seed, 10, 0.0)).solution.removed.empty());
  }
}

TEST_CASE("oracle matches exhaustive enumeration") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng() % 9);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 100 < 50) e.push_back({i, j});
    std::vector<Weight> w(n);
    std::vector<char> s(n);
    for (int v = 0; v < n; ++v) {
      w[v] = static_cast<Weight>(rng() % 11);
      s[v] = rng() % 2;
    }
    auto g = build_instance(n, e, w, s);  // not necessarily chordal
    auto r = brute_force_sfvs(g);
    CHECK(r.solution.kept_weight == exhaustive(g));
    CHECK(is_s_forest(g, r.solution.kept));
  }
}

TEST_CASE("oracle on chordal instances matches exhaustive enumeration") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto c = testing::random_case(seed, 11, 4);
    CHECK(brute_force_sfvs(c.inst).solution.kept_weight == exhaustive(c.inst));
  }
}

TEST_CASE("oracle budget") {
  auto c = testing::random_case(9, 14, 4, false, 14);
  auto r = brute_force_sfvs(c.inst, 3);
  CHECK(r.timed_out);
  CHECK(r.explored <= 4);
}

TEST_CASE("verify_sfvs") {
  auto t = all_s_triangle();
  auto ok = verify_sfvs(t, VertexSet{0});
  CHECK(ok.feasible);
  CHECK(ok.removed_weight == 1);
  CHECK_FALSE(verify_sfvs(t, VertexSet{}).feasible);
  CHECK_THROWS_AS(verify_sfvs(t, VertexSet{7}), InvalidInput);
}
