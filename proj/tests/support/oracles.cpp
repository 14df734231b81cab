#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace crosskit::testsup {

std::map<Pt, std::set<int>, PtLess> brute_crossings(const PolylineDrawing& d) {
  std::map<Pt, std::set<int>, PtLess> out;
  const Graph& g = d.host;
  for (int e = 0; e < g.m(); ++e)
    for (int f = e + 1; f < g.m(); ++f) {
      for (size_t i = 0; i + 1 < d.polylines[e].size(); ++i)
        for (size_t j = 0; j + 1 < d.polylines[f].size(); ++j) {
          auto r = intersect_segments(d.polylines[e][i], d.polylines[e][i + 1],
                                      d.polylines[f][j], d.polylines[f][j + 1]);
          if (r.rel != SegRel::Point) continue;
          bool vertex_point = false;
          for (int v = 0; v < g.n(); ++v)
            if (d.pos[v] == r.point) vertex_point = true;
          if (vertex_point) continue;
          out[r.point].insert(e);
          out[r.point].insert(f);
        }
    }
  return out;
}

namespace {

// planarity by exhaustive rotation systems: some rotation has V-E+F = 2c
bool planar_rot(const Graph& g) {
  long budget = 1;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    for (int i = 2; i < d; ++i) {
      budget *= i;
      if (budget > 20'000'000L) throw CrosskitError("OracleBudget", "rotation space too large");
    }
  }
  int target = 0;
  {
    int nc = static_cast<int>(g.components().size());
    target = 2 * nc - g.n() + g.m();
  }
  if (g.m() == 0) return true;

  std::vector<std::vector<int>> rot(g.n());
  std::vector<std::vector<int>> darts(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (int e : g.incident(v)) darts[v].push_back(dart_from(g, e, v));

  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == g.n()) {
      auto orbits = trace_faces(g, rot);
      return static_cast<int>(orbits.size()) == target;
    }
    auto& ds = darts[v];
    std::sort(ds.begin() + std::min<size_t>(1, ds.size()), ds.end());
    std::vector<int> tail(ds.begin() + std::min<size_t>(1, ds.size()), ds.end());
    std::sort(tail.begin(), tail.end());
    do {
      rot[v].clear();
      if (!ds.empty()) rot[v].push_back(ds[0]);
      for (int t : tail) rot[v].push_back(t);
      if (rec(v + 1)) return true;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return false;
  };
  return rec(0);
}

}  // namespace

bool planar_slow(const Graph& g) { return planar_rot(g); }

long count_plane_drawings(const Graph& g) {
  if (g.components().size() != 1)
    throw CrosskitError("OracleBudget", "count_plane_drawings needs a connected graph");
  long budget = 1;
  for (int v = 0; v < g.n(); ++v)
    for (int i = 2; i < g.degree(v); ++i) {
      budget *= i;
      if (budget > 20'000'000L) throw CrosskitError("OracleBudget", "rotation space too large");
    }
  int target = 2 - g.n() + g.m();
  if (g.m() == 0) return 1;

  std::vector<std::vector<int>> rot(g.n());
  std::vector<std::vector<int>> darts(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (int e : g.incident(v)) darts[v].push_back(dart_from(g, e, v));

  long total = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      auto orbits = trace_faces(g, rot);
      if (static_cast<int>(orbits.size()) == target) total += target;
      return;
    }
    auto& ds = darts[v];
    std::sort(ds.begin(), ds.end());
    std::vector<int> tail(ds.begin() + std::min<size_t>(1, ds.size()), ds.end());
    do {
      rot[v].clear();
      if (!ds.empty()) rot[v].push_back(ds[0]);
      for (int t : tail) rot[v].push_back(t);
      rec(v + 1);
    } while (std::next_permutation(tail.begin(), tail.end()));
  };
  rec(0);
  return total;
}

bool cr_at_most(const Graph& g, int k) {
  // candidate crossings: unordered pairs of vertex-disjoint edges
  std::vector<std::pair<int, int>> cand;
  for (int e = 0; e < g.m(); ++e)
    for (int f = e + 1; f < g.m(); ++f) {
      auto [a, b] = g.edge(e);
      auto [c, d] = g.edge(f);
      if (a == c || a == d || b == c || b == d) continue;
      cand.push_back({e, f});
    }

  std::vector<int> chosen;

  auto build_and_test = [&]() -> bool {
    // order the crossings along each edge in all ways
    std::map<int, std::vector<int>> per_edge;  // edge -> chosen indices on it
    for (int ci : chosen) {
      per_edge[cand[ci].first].push_back(ci);
      per_edge[cand[ci].second].push_back(ci);
    }
    std::vector<std::pair<int, std::vector<int>>> lists(per_edge.begin(), per_edge.end());
    std::function<bool(size_t)> rec = [&](size_t li) -> bool {
      if (li == lists.size()) {
        Graph h;
        for (int v = 0; v < g.n(); ++v) h.add_vertex(g.id_of(v));
        for (int ci : chosen) h.add_vertex("X" + std::to_string(ci));
        std::set<int> crossed;
        for (auto& [e, cs] : lists) crossed.insert(e);
        for (int e = 0; e < g.m(); ++e) {
          auto [u, v] = g.edge(e);
          if (!crossed.count(e)) {
            h.add_edge(u, v);
            continue;
          }
          int cur = u;
          for (int ci : per_edge[e]) {
            int xv = h.index_of("X" + std::to_string(ci));
            h.add_edge(cur, xv);
            cur = xv;
          }
          h.add_edge(cur, v);
        }
        return planar_rot(h);
      }
      auto& cs = lists[li].second;
      std::sort(cs.begin(), cs.end());
      do {
        per_edge[lists[li].first] = cs;
        if (rec(li + 1)) return true;
      } while (std::next_permutation(cs.begin(), cs.end()));
      return false;
    };
    return rec(0);
  };

  std::function<bool(int, int)> pick = [&](int from, int left) -> bool {
    if (build_and_test()) return true;
    if (left == 0) return false;
    for (int i = from; i < static_cast<int>(cand.size()); ++i) {
      chosen.push_back(i);
      if (pick(i + 1, left - 1)) {
        chosen.pop_back();
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  return pick(0, k);
}

PolylineDrawing random_straight_drawing(unsigned seed, int max_n, int grid) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nd(3, max_n);
  int n = nd(rng);
  PolylineDrawing d;
  std::set<std::pair<int, int>> used;
  std::uniform_int_distribution<int> cd(0, grid);
  for (int i = 0; i < n; ++i) {
    int x, y;
    do {
      x = cd(rng);
      y = cd(rng);
    } while (used.count({x, y}));
    used.insert({x, y});
    int v = d.host.add_vertex("v" + std::to_string(i));
    d.set_vertex(v, Pt{Rat(x), Rat(y)});
  }
  std::uniform_real_distribution<double> pr(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pr(rng) < 0.45) d.add_straight_edge(d.host.id_of(u), d.host.id_of(v));
  return d;
}

}  // namespace crosskit::testsup
