#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crosskit/inserter.hpp"
#include "crosskit/json_io.hpp"
#include "crosskit/solver.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

using namespace crosskit;

namespace {

PolylineDrawing straight(const std::vector<std::pair<std::string, Pt>>& vs,
                         const std::vector<std::pair<std::string, std::string>>& es) {
  PolylineDrawing d;
  for (auto& [id, p] : vs) d.set_vertex(d.host.add_vertex(id), p);
  for (auto& [u, v] : es) d.add_straight_edge(u, v);
  return d;
}

Pt P(int x, int y) { return Pt{Rat(x), Rat(y)}; }

Graph graph_of(int n, const std::vector<std::pair<int, int>>& es) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (auto& [u, v] : es) g.add_edge(u, v);
  return g;
}

PartiallyPredrawnGraph bare(const Graph& g) {
  PartiallyPredrawnGraph ppg;
  ppg.graph = g;
  return ppg;
}

long enumeration_count(const Graph& g, int check_first = 3) {
  long count = 0;
  enumerate_ppd_extensions(bare(g), {}, [&](const CombinatorialDrawing& cd) {
    if (count < check_first) {
      auto rep = check_drawing_invariants(cd);
      CHECK_MESSAGE(rep.ok(), rep.to_string());
    }
    ++count;
    return false;
  });
  return count;
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return graph_of(n, es);
}

}  // namespace

TEST_CASE("small graphs have the hand-counted number of plane drawings") {
  CHECK(enumeration_count(graph_of(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);  // triangle
  CHECK(enumeration_count(graph_of(3, {{0, 1}, {1, 2}})) == 1);          // path
  CHECK(enumeration_count(graph_of(4, {{0, 1}, {0, 2}, {0, 3}})) == 2);  // star
  CHECK(enumeration_count(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 2);
  CHECK(enumeration_count(complete(4)) == 8);
  CHECK(enumeration_count(complete(5)) == 0);
  Graph k33 = graph_of(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(enumeration_count(k33) == 0);
}

TEST_CASE("enumeration count matches the rotation-system oracle") {
  std::vector<Graph> samples;
  samples.push_back(graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));  // K4 minus an edge
  samples.push_back(graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}}));  // triangle with a tail
  samples.push_back(graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
  samples.push_back(graph_of(4, {{0, 1}, {1, 2}, {2, 3}}));
  samples.push_back(complete(4));
  for (const Graph& g : samples) CHECK(enumeration_count(g) == testsup::count_plane_drawings(g));
}

TEST_CASE("enumeration count matches the oracle on random connected graphs") {
  std::mt19937 rng(20260816);
  int done = 0;
  for (int round = 0; round < 60 && done < 25; ++round) {
    int n = 3 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.push_back({static_cast<int>(rng() % v), v});
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 100 < 35) es.push_back({u, v});
        if (es.size() >= 9) break;
      }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Graph g = graph_of(n, es);
    long expect;
    try {
      expect = testsup::count_plane_drawings(g);
    } catch (const CrosskitError&) {
      continue;
    }
    std::string note = "n=" + std::to_string(n) + " m=" + std::to_string(g.m());
    CHECK_MESSAGE(enumeration_count(g, 1) == expect, note);
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("two disjoint triangles collapse to three distinct drawings") {
  Graph g = graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  std::vector<CombinatorialDrawing> reps;
  long leaves = 0;
  enumerate_ppd_extensions(bare(g), {}, [&](const CombinatorialDrawing& cd) {
    ++leaves;
    auto rep = check_drawing_invariants(cd);
    CHECK_MESSAGE(rep.ok(), rep.to_string());
    for (const auto& r : reps)
      if (equivalent(r, cd)) return false;
    reps.push_back(cd);
    return false;
  });
  CHECK(leaves >= 3);
  CHECK(reps.size() == 3);
}

TEST_CASE("extension of a predrawn triangle inside a K4") {
  PartiallyPredrawnGraph ppg;
  ppg.graph = complete(4);
  // the predrawn subgraph uses the same vertex ids as the full graph
  ppg.geometric = straight({{"v0", P(0, 0)}, {"v1", P(4, 0)}, {"v2", P(2, 3)}},
                           {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}});
  auto got = ppd_planar(ppg);
  REQUIRE(got.has_value());
  auto rep = check_drawing_invariants(*got);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  CHECK(got->crossing_count() == 0);

  CombinatorialDrawing gamma = planarize_geometric(*ppg.geometric);
  CHECK(equivalent(restrict_to_gamma(*got), gamma));

  long count = 0;
  enumerate_ppd_extensions(ppg, {}, [&](const CombinatorialDrawing& cd) {
    CHECK(equivalent(restrict_to_gamma(cd), gamma));
    ++count;
    return false;
  });
  // v3 inside the fixed triangle, or outside with any of the three new faces
  // left unbounded
  CHECK(count == 4);
}

TEST_CASE("a predrawn isolated vertex can make the extension impossible") {
  auto predrawn = [](Pt z) {
    return straight({{"a", P(0, 0)},
                     {"b", P(4, 0)},
                     {"c", P(2, 4)},
                     {"d", P(2, 1)},
                     {"z", z}},
                    {{"a", "b"},
                     {"b", "c"},
                     {"c", "a"},
                     {"a", "d"},
                     {"b", "d"},
                     {"c", "d"}});
  };
  auto instance = [&](Pt z, const std::string& zedge_to) {
    PartiallyPredrawnGraph ppg;
    ppg.geometric = predrawn(z);
    ppg.graph = ppg.geometric->host;
    ppg.graph.add_edge("z", zedge_to);
    return ppg;
  };
  // z sits in the face bounded by a, b, d; an edge to c cannot leave it
  CHECK(!ppd_planar(instance(Pt{Rat(2), Rat(1) / 2}, "c")).has_value());
  CHECK(ppd_planar(instance(Pt{Rat(2), Rat(1) / 2}, "a")).has_value());
  // from the unbounded face c is reachable
  CHECK(ppd_planar(instance(P(10, 10), "c")).has_value());
}

TEST_CASE("predrawn crossings survive into the extension") {
  PartiallyPredrawnGraph ppg;
  ppg.geometric = straight(
      {{"a", P(0, 0)}, {"b", P(2, 2)}, {"c", P(0, 2)}, {"d", P(2, 0)}}, {{"a", "b"}, {"c", "d"}});
  ppg.graph = ppg.geometric->host;
  ppg.graph.add_edge("a", "c");
  auto got = ppd_planar(ppg);
  REQUIRE(got.has_value());
  CHECK(got->crossing_count() == 1);
  auto rep = check_drawing_invariants(*got);
  CHECK_MESSAGE(rep.ok(), rep.to_string());
  CHECK(equivalent(restrict_to_gamma(*got), planarize_geometric(*ppg.geometric)));

  long count = 0;
  enumerate_ppd_extensions(ppg, {}, [&](const CombinatorialDrawing& cd) {
    CHECK(equivalent(restrict_to_gamma(cd), planarize_geometric(*ppg.geometric)));
    ++count;
    return false;
  });
  // the new edge splits the single face; either side may stay unbounded
  CHECK(count == 2);
}

TEST_CASE("pair alternation constraints filter rotations") {
  Graph g = graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  InsertTask task;
  task.pg = g;
  task.edge_seeded.assign(g.m(), 0);
  task.vertex_seeded.assign(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) task.insert_order.push_back(e);

  long plain = 0;
  enumerate_plane_extensions(task, [&](const EmbeddingView&) {
    ++plain;
    return false;
  });
  CHECK(plain == 6);

  std::set<int> p1 = {*g.edge_index(0, 1), *g.edge_index(0, 2)};
  std::set<int> p2 = {*g.edge_index(0, 3), *g.edge_index(0, 4)};
  task.cross_pairs[0] = {*p1.begin(), *p1.rbegin(), *p2.begin(), *p2.rbegin()};
  long constrained = 0;
  enumerate_plane_extensions(task, [&](const EmbeddingView& view) {
    ++constrained;
    // the two edges of one pair sit opposite each other
    const auto& r = view.rot[0];
    REQUIRE(r.size() == 4);
    std::set<int> even = {dart_edge(r[0]), dart_edge(r[2])};
    std::set<int> odd = {dart_edge(r[1]), dart_edge(r[3])};
    CHECK(((even == p1 && odd == p2) || (even == p2 && odd == p1)));
    return false;
  });
  CHECK(constrained == 2);
}

TEST_CASE("search budget is enforced") {
  PartiallyPredrawnGraph ppg = bare(complete(5));
  ExtendOptions opt;
  opt.budget = 50;
  CHECK_THROWS_AS(enumerate_ppd_extensions(ppg, opt, [](const CombinatorialDrawing&) {
    return false;
  }),
                  CrosskitError);
}

TEST_CASE("witness drawings are deterministic") {
  PartiallyPredrawnGraph ppg;
  ppg.graph = complete(4);
  ppg.geometric = straight({{"v0", P(0, 0)}, {"v1", P(4, 0)}, {"v2", P(2, 3)}},
                           {{"v0", "v1"}, {"v1", "v2"}, {"v2", "v0"}});
  auto a = ppd_planar(ppg);
  auto b = ppd_planar(ppg);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(dump_json(drawing_to_json(*a)) == dump_json(drawing_to_json(*b)));
}
