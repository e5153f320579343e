#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "errors.hpp"
#include "graph.hpp"

using namespace modcg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph random_gnp(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("parse basic path") {
  Graph g = parse_edge_list("0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse collapses duplicates and skips comments") {
  Graph g = parse_edge_list("1 2\n2 1\n# comment line\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(0) == "1");
  CHECK(g.label(1) == "2");
}

TEST_CASE("parse keeps first-seen order for ids") {
  Graph g = parse_edge_list("c a\nb c\n");
  CHECK(g.label(0) == "c");
  CHECK(g.label(1) == "a");
  CHECK(g.label(2) == "b");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_edge_list("0 1\n3 3\n"), parse_error);
  try {
    parse_edge_list("0 1\n3 3\n");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_edge_list("0 1\n", true), parse_error);   // 0-indexed token
  CHECK_NOTHROW(parse_edge_list("1 2\n", true));
  CHECK_THROWS_AS(parse_edge_list("a b\n", true), parse_error);
}

TEST_CASE("isolated vertex declarations") {
  Graph g = parse_edge_list("0\n1\n2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 0);
  Graph h = parse_edge_list("0 1\n7\n");
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.degree(2) == 0);
}

TEST_CASE("empty input parses to empty graph") {
  Graph g = parse_edge_list("");
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), argument_error);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), argument_error);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), argument_error);
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("karate fixture loads with expected size") {
  Graph g = parse_edge_list(read_file(std::string(MODCG_FIXTURE_DIR) + "/karate.txt"),
                            /*one_indexed=*/true);
  CHECK(g.vertex_count() == 34);
  CHECK(g.edge_count() == 78);
  CHECK(g.label(0) == "1");
  // Degree of the instructor (label "1") and the officer (label "34").
  CHECK(g.degree(0) == 16);
  int officer = -1;
  for (int v = 0; v < 34; ++v)
    if (g.label(v) == "34") officer = v;
  REQUIRE(officer >= 0);
  CHECK(g.degree(officer) == 17);
}

TEST_CASE("induced edges and cut size on K4 subsets") {
  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(induced_edge_count(k4, VertexSet({0, 1, 2})) == 3);
  CHECK(induced_edge_count(k4, VertexSet({0, 1})) == 1);
  CHECK(induced_edge_count(k4, VertexSet({2})) == 0);
  CHECK(cut_size(k4, VertexSet({0, 1})) == 4);
  CHECK(cut_size(k4, VertexSet::full(4)) == 0);
  CHECK_THROWS_AS(induced_edge_count(k4, VertexSet({0, 9})), argument_error);
}

TEST_CASE("cut identity holds on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_gnp(8, 0.4, rng);
    std::uniform_int_distribution<uint32_t> mask_dist(1, (1u << 8) - 1);
    uint32_t mask = mask_dist(rng);
    std::vector<int> members;
    for (int v = 0; v < 8; ++v)
      if (mask & (1u << v)) members.push_back(v);
    VertexSet s(members);
    long long degree_sum = 0;
    for (int v : s) degree_sum += g.degree(v);
    CHECK(cut_size(g, s) == degree_sum - 2 * induced_edge_count(g, s));
  }
}

TEST_CASE("complement properties") {
  Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  Graph k3c = complement(k3);
  CHECK(k3c.edge_count() == 0);

  // C5 is self-complementary.
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Graph c5c = complement(c5);
  CHECK(c5c.edge_count() == 5);
  CHECK(regular_degree(c5c) == 2);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_gnp(9, 0.5, rng);
    Graph gcc = complement(complement(g));
    CHECK(gcc.edges() == g.edges());
    CHECK(g.edge_count() + complement(g).edge_count() == 9LL * 8 / 2);
  }
}

TEST_CASE("regular degree detection") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(regular_degree(c4) == 2);
  Graph p3 = parse_edge_list("0 1\n1 2\n");
  CHECK(!regular_degree(p3).has_value());
  CHECK(regular_degree(Graph::from_edges(0, {})) == 0);
}

TEST_CASE("edge list round trip") {
  Graph g = parse_edge_list("0 1\n0 3\n2 3\n");
  std::string text = write_edge_list(g);
  Graph h = parse_edge_list(text);
  CHECK(h.edges() == g.edges());
  CHECK(h.vertex_count() == g.vertex_count());
}

TEST_CASE("vertex set canonicalization") {
  VertexSet s({3, 1, 3, 2});
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<int>{1, 2, 3});
  CHECK(s.contains(2));
  CHECK(!s.contains(0));
  CHECK_THROWS_AS(VertexSet({-1}), argument_error);
}
