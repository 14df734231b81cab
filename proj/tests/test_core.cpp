#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crosskit/drawing.hpp"
#include "crosskit/json_io.hpp"
#include "support/oracles.hpp"

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

}  // namespace

TEST_CASE("angular order walks counterclockwise from +x") {
  std::vector<Pt> dirs = {P(1, 0),  P(2, 1),  P(0, 1),  P(-1, 1),
                          P(-2, 0), P(-1, -1), P(0, -3), P(1, -1)};
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = 0; j < dirs.size(); ++j) {
      int c = angle_cmp(dirs[i], dirs[j]);
      if (i == j) CHECK(c == 0);
      if (i < j) CHECK(c < 0);
      if (i > j) CHECK(c > 0);
    }
  CHECK(angle_cmp(P(2, 2), P(5, 5)) == 0);
}

TEST_CASE("segment intersection basics") {
  auto r = intersect_segments(P(0, 0), P(2, 2), P(0, 2), P(2, 0));
  REQUIRE(r.rel == SegRel::Point);
  CHECK(r.point == P(1, 1));
  CHECK(r.proper);

  r = intersect_segments(P(0, 0), P(2, 0), P(1, 0), P(3, 0));
  CHECK(r.rel == SegRel::Overlap);

  r = intersect_segments(P(0, 0), P(2, 0), P(2, 0), P(3, 5));
  REQUIRE(r.rel == SegRel::Point);
  CHECK(r.point == P(2, 0));
  CHECK(!r.proper);

  r = intersect_segments(P(0, 0), P(1, 0), P(0, 1), P(1, 1));
  CHECK(r.rel == SegRel::Disjoint);

  r = intersect_segments(P(0, 0), P(4, 0), P(2, 0), P(2, 3));
  REQUIRE(r.rel == SegRel::Point);
  CHECK(r.point == P(2, 0));
  CHECK(!r.proper);
}

TEST_CASE("winding and area") {
  std::vector<Pt> sq = {P(0, 0), P(4, 0), P(4, 4), P(0, 4)};
  CHECK(static_cast<bool>(signed_area2(sq) == 32));
  CHECK(point_in_polygon(sq, P(1, 1)));
  CHECK(!point_in_polygon(sq, P(5, 1)));
  std::reverse(sq.begin(), sq.end());
  CHECK(static_cast<bool>(signed_area2(sq) == -32));
  CHECK(point_in_polygon(sq, P(1, 1)));
}

TEST_CASE("validator accepts disjoint segments") {
  auto d = straight({{"a", P(0, 0)}, {"b", P(1, 0)}, {"c", P(0, 1)}, {"d", P(1, 1)}},
                    {{"a", "b"}, {"c", "d"}});
  CHECK(validate_drawing(d).ok());
}

TEST_CASE("validator flags overlap, triple point, tangency") {
  auto d1 = straight({{"a", P(0, 0)}, {"b", P(2, 0)}, {"c", P(1, 0)}, {"d", P(3, 0)}},
                     {{"a", "b"}, {"c", "d"}});
  CHECK(validate_drawing(d1).has("SharedSegment"));

  auto d2 = straight({{"a", P(0, 0)}, {"b", P(2, 2)}, {"c", P(0, 2)}, {"d", P(2, 0)},
                      {"e", P(0, 1)}, {"f", P(2, 1)}},
                     {{"a", "b"}, {"c", "d"}, {"e", "f"}});
  auto rep2 = validate_drawing(d2);
  CHECK(rep2.has("TriplePoint"));
  bool found = false;
  for (auto& i : rep2.issues)
    if (i.code == "TriplePoint" && i.where && *i.where == P(1, 1)) found = true;
  CHECK(found);

  PolylineDrawing d3;
  d3.set_vertex(d3.host.add_vertex("a"), P(0, 0));
  d3.set_vertex(d3.host.add_vertex("b"), P(2, 0));
  d3.set_vertex(d3.host.add_vertex("c"), P(0, 1));
  d3.set_vertex(d3.host.add_vertex("d"), P(2, 1));
  int e = d3.host.add_edge("a", "b");
  d3.polylines.resize(1);
  d3.polylines[e] = {P(0, 0), P(1, 1), P(2, 0)};
  d3.add_straight_edge("c", "d");
  auto rep3 = validate_drawing(d3);
  CHECK(rep3.has("TangentialCrossing"));
  CHECK(!rep3.has("TriplePoint"));
}

TEST_CASE("validator flags vertex issues and repeated intersections") {
  auto d1 = straight({{"a", P(0, 0)}, {"b", P(2, 0)}, {"v", P(1, 0)}}, {{"a", "b"}});
  CHECK(validate_drawing(d1).has("VertexOnEdgeInterior"));

  auto d2 = straight({{"a", P(0, 0)}, {"b", P(0, 0)}}, {});
  CHECK(validate_drawing(d2).has("DuplicateVertexPoint"));

  // adjacent edges sharing their endpoint and also crossing
  PolylineDrawing d3;
  d3.set_vertex(d3.host.add_vertex("a"), P(0, 0));
  d3.set_vertex(d3.host.add_vertex("b"), P(2, 0));
  d3.set_vertex(d3.host.add_vertex("c"), P(2, 1));
  d3.add_straight_edge("a", "b");
  int e = d3.host.add_edge("a", "c");
  d3.polylines.resize(2);
  d3.polylines[e] = {P(0, 0), P(1, -1), P(2, 1)};
  auto rep3 = validate_drawing(d3);
  CHECK(rep3.has("RepeatedIntersection"));
}

TEST_CASE("planarize the symmetric X") {
  auto d = straight({{"a", P(0, 0)}, {"b", P(2, 2)}, {"c", P(0, 2)}, {"d", P(2, 0)}},
                    {{"a", "b"}, {"c", "d"}});
  auto cd = planarize_geometric(d);
  CHECK(cd.crossing_count() == 1);
  REQUIRE(cd.pg.n() == 5);
  int xv = -1;
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Crossing) xv = v;
  REQUIRE(xv >= 0);
  CHECK(cd.pg.degree(xv) == 4);
  CHECK(cd.pos[xv] == P(1, 1));
  CHECK(check_drawing_invariants(cd).ok());
}

TEST_CASE("planarize plane K4") {
  auto d = straight({{"a", P(0, 0)}, {"b", P(6, 0)}, {"c", P(3, 6)}, {"m", P(3, 2)}},
                    {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "m"}, {"b", "m"}, {"c", "m"}});
  auto cd = planarize_geometric(d);
  CHECK(cd.crossing_count() == 0);
  CHECK(cd.faces.size() == 4);
  CHECK(check_drawing_invariants(cd).ok());
  // outer face has exactly the three corner vertices
  std::set<int> outer_vs;
  for (auto& w : cd.faces[cd.outer].walks)
    for (int dd : w) outer_vs.insert(dart_tail(cd.pg, dd));
  CHECK(outer_vs == std::set<int>{cd.pg.index_of("a"), cd.pg.index_of("b"), cd.pg.index_of("c")});
}

TEST_CASE("planarize straight-line K5 matches the brute-force crossings") {
  std::vector<std::pair<std::string, Pt>> vs = {
      {"v0", P(0, 0)}, {"v1", P(4, 0)}, {"v2", P(4, 4)}, {"v3", P(0, 4)}, {"v4", P(2, 1)}};
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      es.push_back({"v" + std::to_string(i), "v" + std::to_string(j)});
  auto d = straight(vs, es);
  auto cd = planarize_geometric(d);
  auto brute = testsup::brute_crossings(d);
  CHECK(cd.crossing_count() == static_cast<int>(brute.size()));
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Crossing) CHECK(brute.count(cd.pos[v]) == 1);
  CHECK(check_drawing_invariants(cd).ok());
}

TEST_CASE("face tracing on the triangle") {
  Graph g;
  for (auto id : {"a", "b", "c"}) g.add_vertex(id);
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("a", "c");
  std::vector<std::vector<int>> rot(3);
  for (int v = 0; v < 3; ++v)
    for (int e : g.incident(v)) rot[v].push_back(dart_from(g, e, v));
  auto faces = trace_faces(g, rot);
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].size() == 3);
  CHECK(faces[1].size() == 3);
}

TEST_CASE("face tracing on the cube via a drawing") {
  std::vector<std::pair<std::string, Pt>> vs = {
      {"o0", P(0, 0)}, {"o1", P(6, 0)}, {"o2", P(6, 6)}, {"o3", P(0, 6)},
      {"i0", P(2, 2)}, {"i1", P(4, 2)}, {"i2", P(4, 4)}, {"i3", P(2, 4)}};
  std::vector<std::pair<std::string, std::string>> es = {
      {"o0", "o1"}, {"o1", "o2"}, {"o2", "o3"}, {"o3", "o0"},
      {"i0", "i1"}, {"i1", "i2"}, {"i2", "i3"}, {"i3", "i0"},
      {"o0", "i0"}, {"o1", "i1"}, {"o2", "i2"}, {"o3", "i3"}};
  auto cd = planarize_geometric(straight(vs, es));
  CHECK(cd.crossing_count() == 0);
  REQUIRE(cd.faces.size() == 6);
  for (auto& f : cd.faces) {
    REQUIRE(f.walks.size() == 1);
    CHECK(f.walks[0].size() == 4);
  }
}

TEST_CASE("exactly two of the sixteen K4 rotation systems are planar") {
  Graph g;
  for (auto id : {"a", "b", "c", "d"}) g.add_vertex(id);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  int planar = 0, total = 0;
  std::vector<std::vector<int>> rot(4);
  std::function<void(int)> rec = [&](int v) {
    if (v == 4) {
      ++total;
      auto faces = trace_faces(g, rot);
      if (static_cast<int>(faces.size()) == 2 - g.n() + g.m()) ++planar;
      return;
    }
    std::vector<int> ds;
    for (int e : g.incident(v)) ds.push_back(dart_from(g, e, v));
    std::sort(ds.begin() + 1, ds.end());
    std::vector<int> tail(ds.begin() + 1, ds.end());
    do {
      rot[v] = {ds[0]};
      for (int t : tail) rot[v].push_back(t);
      rec(v + 1);
    } while (std::next_permutation(tail.begin(), tail.end()));
  };
  rec(0);
  CHECK(total == 16);
  CHECK(planar == 2);
}

TEST_CASE("equivalence: reflexive, mirror-sensitive, face-sensitive") {
  auto mk = [&](bool swap_inner) {
    std::vector<std::pair<std::string, Pt>> vs;
    if (!swap_inner)
      vs = {{"a", P(0, 0)}, {"b", P(6, 0)}, {"c", P(3, 6)}, {"m", P(3, 2)}};
    else
      vs = {{"a", P(0, 0)}, {"b", P(6, 0)}, {"m", P(3, 6)}, {"c", P(3, 2)}};
    return planarize_geometric(
        straight(vs, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "m"}, {"b", "m"}, {"c", "m"}}));
  };
  auto d1 = mk(false);
  CHECK(equivalent(d1, d1));
  auto d2 = mk(true);
  CHECK(!equivalent(d1, d2));

  // mirrored copy
  auto dm = straight({{"a", P(0, 0)}, {"b", P(-6, 0)}, {"c", P(-3, 6)}, {"m", P(-3, 2)}},
                     {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "m"}, {"b", "m"}, {"c", "m"}});
  auto d3 = planarize_geometric(dm);
  CHECK(equivalent(d1, d3));
  EquivOptions strict;
  strict.reflection_agnostic = false;
  CHECK(!equivalent(d1, d3, strict));

  Graph other;
  other.add_vertex("z");
  CombinatorialDrawing cd_other;
  cd_other.orig = other;
  CHECK_THROWS_AS((void)equivalent(d1, cd_other), CrosskitError);
}

TEST_CASE("composite faces with nesting and isolated vertices") {
  std::vector<std::pair<std::string, Pt>> vs = {
      {"A", P(0, 0)}, {"B", P(8, 0)}, {"C", P(0, 8)},
      {"p", P(1, 1)}, {"q", P(3, 1)}, {"r", P(1, 3)},
      {"in", Pt{Rat(3) / 2, Rat(3) / 2}}, {"out", P(9, 9)}};
  std::vector<std::pair<std::string, std::string>> es = {
      {"A", "B"}, {"B", "C"}, {"A", "C"}, {"p", "q"}, {"q", "r"}, {"p", "r"}};
  // "in" falls strictly inside the small triangle, "out" outside everything
  auto cd = planarize_geometric(straight(vs, es));
  REQUIRE(cd.faces.size() == 3);
  CHECK(cd.pg.n() - cd.pg.m() + static_cast<int>(cd.faces.size()) == 1 + 4);
  // the outer face holds the isolated vertex "out"
  bool ok_out = false;
  for (int v : cd.faces[cd.outer].isolated)
    if (cd.pg.id_of(v) == "out") ok_out = true;
  CHECK(ok_out);
  // the face between the triangles holds two walks
  int between = -1;
  for (size_t f = 0; f < cd.faces.size(); ++f)
    if (static_cast<int>(f) != cd.outer && cd.faces[f].walks.size() == 2)
      between = static_cast<int>(f);
  CHECK(between >= 0);
  // small triangle interior holds "in"
  int small_face = -1;
  for (size_t f = 0; f < cd.faces.size(); ++f)
    for (int v : cd.faces[f].isolated)
      if (cd.pg.id_of(v) == "in") small_face = static_cast<int>(f);
  REQUIRE(small_face >= 0);
  CHECK(small_face != cd.outer);
  CHECK(small_face != between);
}

TEST_CASE("side partition across a cycle") {
  std::vector<std::pair<std::string, Pt>> vs = {
      {"a", P(0, 0)}, {"b", P(4, 0)}, {"c", P(4, 4)}, {"d", P(0, 4)},
      {"in", P(2, 2)}, {"out", P(9, 2)}};
  std::vector<std::pair<std::string, std::string>> es = {
      {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}};
  auto cd = planarize_geometric(straight(vs, es));
  std::vector<char> walk(cd.pg.m(), 1);
  auto col = side_partition(cd, walk);
  int f_in = -1, f_out = -1;
  for (size_t f = 0; f < cd.faces.size(); ++f)
    for (int v : cd.faces[f].isolated) {
      if (cd.pg.id_of(v) == "in") f_in = static_cast<int>(f);
      if (cd.pg.id_of(v) == "out") f_out = static_cast<int>(f);
    }
  REQUIRE(f_in >= 0);
  REQUIRE(f_out >= 0);
  CHECK(f_out == cd.outer);
  CHECK(col[f_in] != col[f_out]);
}

TEST_CASE("restriction to the predrawn part merges faces") {
  // square with both diagonals; only the square boundary is predrawn
  std::vector<std::pair<std::string, Pt>> vs = {
      {"a", P(0, 0)}, {"b", P(4, 0)}, {"c", P(4, 4)}, {"d", P(0, 4)}};
  auto full = straight(vs, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"},
                            {"a", "c"}, {"b", "d"}});
  auto cd = planarize_geometric(full);
  CHECK(cd.crossing_count() == 1);
  for (int pe = 0; pe < cd.pg.m(); ++pe) {
    const std::string iu = cd.orig.id_of(cd.orig.edge(cd.pedge_orig[pe]).first);
    const std::string iv = cd.orig.id_of(cd.orig.edge(cd.pedge_orig[pe]).second);
    bool diagonal = (iu == "a" && iv == "c") || (iu == "b" && iv == "d");
    cd.gamma_e[pe] = diagonal ? 0 : 1;
  }
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Crossing) cd.gamma_v[v] = 0;
  auto restricted = restrict_to_gamma(cd);
  auto expected = planarize_geometric(
      straight(vs, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
  CHECK(equivalent(restricted, expected));
  CHECK(restricted.faces.size() == 2);
}

TEST_CASE("ppg json round trip") {
  std::string text = R"({
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a","b"],["b","c"],["c","d"],["a","c"]],
    "colors": {"a": "blue"},
    "predrawn": {
      "vertices": {"a": ["0","0"], "b": ["2","0"], "c": ["1","3/2"]},
      "edges": [{"ends":["a","b"],"bends":[]},
                {"ends":["b","c"],"bends":[["3/2","1"]]}]
    }
  })";
  auto ppg = load_ppg_text(text);
  CHECK(ppg.graph.n() == 4);
  CHECK(ppg.graph.m() == 4);
  REQUIRE(ppg.geometric.has_value());
  CHECK(ppg.geometric->host.n() == 3);
  CHECK(ppg.geometric->host.m() == 2);
  auto j = save_ppg(ppg);
  auto ppg2 = load_ppg(j);
  CHECK(save_ppg(ppg2) == j);
  auto cd = ensure_predrawing(ppg);
  CHECK(cd.crossing_count() == 0);
  CHECK(cd.pg.n() == 3);
}

TEST_CASE("planarization invariants hold on random drawings") {
  int valid = 0;
  unsigned seed = 1;
  int symmetric_checks = 0;
  CombinatorialDrawing prev;
  bool have_prev = false;
  while (valid < 100 && seed < 4000) {
    auto d = testsup::random_straight_drawing(seed++, 8, 12);
    auto rep = validate_drawing(d);
    if (!rep.ok()) continue;
    ++valid;
    auto cd = planarize_geometric(d);
    auto inv = check_drawing_invariants(cd);
    INFO(inv.to_string());
    CHECK(inv.ok());
    CHECK(cd.crossing_count() == static_cast<int>(testsup::brute_crossings(d).size()));
    CHECK(equivalent(cd, cd));
    if (have_prev) {
      // symmetry of the relation on arbitrary pairs over the same graph
      try {
        bool ab = equivalent(prev, cd);
        bool ba = equivalent(cd, prev);
        CHECK(ab == ba);
        ++symmetric_checks;
      } catch (const CrosskitError&) {
      }
    }
    prev = cd;
    have_prev = true;
  }
  CHECK(valid == 100);
}
