#include <doctest.h>

#include "sfvs/errors.hpp"
#include "sfvs/graph.hpp"

using namespace sfvs;

namespace {

Instance triangle(std::vector<Vertex> s = {}) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  return build_instance(3, e, s);
}

}  // namespace

TEST_CASE("build_instance normalizes") {
  auto t = triangle({0});
  CHECK(t.n == 3);
  CHECK(t.num_edges() == 3);
  CHECK(t.is_terminal(0));
  CHECK_FALSE(t.is_terminal(1));
  CHECK(t.total_weight() == 3);

  auto one = build_instance(1, std::vector<Edge>{});
  CHECK(one.n == 1);
  CHECK(one.num_edges() == 0);

  std::vector<Edge> dup{{0, 1}, {0, 1}, {1, 0}};
  auto d = build_instance(4, dup);
  CHECK(d.num_edges() == 1);
  CHECK(d.adjacent(1, 0));
}

TEST_CASE("build_instance rejects junk") {
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(build_instance(2, loop), InvalidInput);
  std::vector<Edge> far{{0, 5}};
  CHECK_THROWS_AS(build_instance(2, far), InvalidInput);
  std::vector<Edge> none;
  std::vector<Weight> w{1, -1};
  std::vector<char> s{0, 0};
  CHECK_THROWS_AS(build_instance(2, none, w, s), InvalidInput);
  std::vector<Weight> short_w{1};
  CHECK_THROWS_AS(build_instance(2, none, short_w, s), InvalidInput);
}

TEST_CASE("is_s_forest on triangles") {
  std::vector<Vertex> all{0, 1, 2};
  CHECK_FALSE(is_s_forest(triangle({0}), all));
  CHECK(is_s_forest(triangle(), all));
  CHECK(is_s_forest(triangle({0}), std::vector<Vertex>{0, 1}));
}

TEST_CASE("bowtie around an S vertex") {
  // triangles 0-1-2 and 2-3-4 share vertex 2
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
  auto g = build_instance(5, e, std::vector<Vertex>{2});
  CHECK_FALSE(is_s_forest(g, std::vector<Vertex>{0, 1, 2, 3, 4}));
  CHECK(is_s_forest(g, std::vector<Vertex>{0, 2, 3}));
  CHECK(has_s_triangle(g, std::vector<Vertex>{0, 1, 2, 3}));
  CHECK_FALSE(has_s_triangle(g, std::vector<Vertex>{0, 2, 3}));
}

TEST_CASE("S-cycle longer than a triangle") {
  // C4 with one terminal; not chordal, so only the block test sees it
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  auto g = build_instance(4, e, std::vector<Vertex>{0});
  std::vector<Vertex> all{0, 1, 2, 3};
  CHECK_FALSE(is_s_forest(g, all));
  CHECK_FALSE(has_s_triangle(g, all));
  auto h = build_instance(4, e, std::vector<Vertex>{});
  CHECK(is_s_forest(h, all));
}

TEST_CASE("connected_components") {
  auto c = connected_components(triangle());
  REQUIRE(c.size() == 1);
  CHECK(c[0] == VertexSet{0, 1, 2});

  auto iso = connected_components(build_instance(3, std::vector<Edge>{}));
  CHECK(iso.size() == 3);

  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}};
  auto two = connected_components(build_instance(5, e));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == VertexSet{0, 1, 2});
  CHECK(two[1] == VertexSet{3, 4});
}

TEST_CASE("induced_subgraph keeps weights and S") {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  std::vector<Weight> w{5, 6, 7, 8};
  std::vector<char> s{0, 1, 0, 1};
  auto g = build_instance(4, e, w, s);
  auto h = induced_subgraph(g, std::vector<Vertex>{1, 2, 3});
  CHECK(h.n == 3);
  CHECK(h.weight == std::vector<Weight>{6, 7, 8});
  CHECK(h.is_terminal(0));
  CHECK(h.is_terminal(2));
  CHECK(h.num_edges() == 2);
}

TEST_CASE("make_solution splits the weight") {
  std::vector<Edge> e{{0, 1}};
  std::vector<Weight> w{3, 4};
  std::vector<char> s{0, 0};
  auto g = build_instance(2, e, w, s);
  auto sol = make_solution(g, {1});
  CHECK(sol.kept_weight == 4);
  CHECK(sol.removed == VertexSet{0});
  CHECK(sol.removed_weight == 3);
}

TEST_CASE("set helpers") {
  VertexSet a{1, 3, 5}, b{3, 4};
  CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
  CHECK(set_difference(a, b) == VertexSet{1, 5});
  CHECK(set_intersection(a, b) == VertexSet{3});
  CHECK(contains(a, 5));
  CHECK_FALSE(contains(a, 4));
}
