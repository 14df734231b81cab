#include "crosskit/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crosskit {

namespace {

struct SegRef {
  int edge;
  int seg;
  Pt a, b;
};

struct PtLess {
  bool operator()(const Pt& p, const Pt& q) const { return lex_less(p, q); }
};

// local outgoing directions of an edge's polyline at a point on it
std::vector<Pt> branches_at(const std::vector<Pt>& poly, const Pt& p) {
  std::vector<Pt> out;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[i + 1];
    if (!on_segment(a, b, p)) continue;
    if (p != a) out.push_back(Pt{a.x - p.x, a.y - p.y});
    if (p != b) out.push_back(Pt{b.x - p.x, b.y - p.y});
  }
  // joints produce each side twice; dedupe by direction
  std::vector<Pt> ded;
  for (const auto& v : out) {
    bool dup = false;
    for (const auto& w : ded)
      if (angle_cmp(v, w) == 0 && sgn(v.x * w.y - v.y * w.x) == 0 &&
          sgn(v.x * w.x + v.y * w.y) > 0)
        dup = true;
    if (!dup) ded.push_back(v);
  }
  return ded;
}

}  // namespace

ValidationReport validate_drawing(const PolylineDrawing& d) {
  ValidationReport rep;
  auto issue = [&](std::string code, std::string detail, std::optional<Pt> w = {}) {
    rep.issues.push_back({std::move(code), std::move(detail), std::move(w)});
  };
  const Graph& g = d.host;
  if (static_cast<int>(d.pos.size()) != g.n() ||
      static_cast<int>(d.polylines.size()) != g.m()) {
    issue("MalformedDrawing", "placement sizes do not match the graph");
    return rep;
  }

  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (d.pos[u] == d.pos[v])
        issue("DuplicateVertexPoint", g.id_of(u) + "," + g.id_of(v), d.pos[u]);

  std::vector<SegRef> segs;
  for (int e = 0; e < g.m(); ++e) {
    const auto& poly = d.polylines[e];
    auto [ea, eb] = g.edge(e);
    if (poly.size() < 2 || poly.front() != d.pos[ea] || poly.back() != d.pos[eb]) {
      issue("MalformedDrawing", "edge polyline endpoints differ from placements: " +
                                    g.id_of(ea) + "-" + g.id_of(eb));
      continue;
    }
    for (size_t i = 0; i + 1 < poly.size(); ++i) {
      if (poly[i] == poly[i + 1]) {
        issue("NonSimpleEdge", "zero-length segment on " + g.id_of(ea) + "-" + g.id_of(eb));
        continue;
      }
      segs.push_back({e, static_cast<int>(i), poly[i], poly[i + 1]});
    }
    // self-intersection of one polyline
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      for (size_t j = i + 1; j + 1 < poly.size(); ++j) {
        auto r = intersect_segments(poly[i], poly[i + 1], poly[j], poly[j + 1]);
        if (r.rel == SegRel::Disjoint) continue;
        if (j == i + 1) {
          if (r.rel == SegRel::Overlap)
            issue("NonSimpleEdge", "folded bend on " + g.id_of(ea) + "-" + g.id_of(eb));
          else if (r.point != poly[j])
            issue("NonSimpleEdge", "self-touch on " + g.id_of(ea) + "-" + g.id_of(eb),
                  r.point);
        } else {
          issue("NonSimpleEdge", "self-intersection on " + g.id_of(ea) + "-" + g.id_of(eb),
                r.rel == SegRel::Point ? std::optional<Pt>(r.point) : std::nullopt);
        }
      }
  }

  // vertex against all edges it does not belong to
  for (int v = 0; v < g.n(); ++v)
    for (const auto& s : segs) {
      auto [ea, eb] = g.edge(s.edge);
      if (ea == v || eb == v) continue;
      if (on_segment(s.a, s.b, d.pos[v]))
        issue("VertexOnEdgeInterior", g.id_of(v) + " on " + g.id_of(ea) + "-" + g.id_of(eb),
              d.pos[v]);
    }

  // pairwise edge intersections via an interval sweep over x
  std::map<std::pair<int, int>, std::set<Pt, PtLess>> pair_points;
  std::set<std::pair<int, int>> pair_overlap;
  {
    std::vector<int> order(segs.size());
    for (size_t i = 0; i < segs.size(); ++i) order[i] = static_cast<int>(i);
    auto xmin = [&](int i) { return std::min(segs[i].a.x, segs[i].b.x); };
    auto xmax = [&](int i) { return std::max(segs[i].a.x, segs[i].b.x); };
    std::sort(order.begin(), order.end(), [&](int i, int j) { return xmin(i) < xmin(j); });
    std::vector<int> active;
    for (int oi : order) {
      std::vector<int> still;
      for (int aj : active) {
        if (xmax(aj) < xmin(oi)) continue;
        still.push_back(aj);
        const SegRef& s = segs[oi];
        const SegRef& t = segs[aj];
        if (s.edge == t.edge) continue;
        auto r = intersect_segments(s.a, s.b, t.a, t.b);
        if (r.rel == SegRel::Disjoint) continue;
        int e1 = std::min(s.edge, t.edge), e2 = std::max(s.edge, t.edge);
        if (r.rel == SegRel::Overlap) {
          pair_overlap.insert({e1, e2});
          auto [ua, ub] = g.edge(e1);
          auto [va, vb] = g.edge(e2);
          issue("SharedSegment", g.id_of(ua) + "-" + g.id_of(ub) + " with " + g.id_of(va) +
                                     "-" + g.id_of(vb));
        } else {
          pair_points[{e1, e2}].insert(r.point);
        }
      }
      still.push_back(oi);
      active = std::move(still);
    }
  }

  // classify per-pair shared points
  std::map<Pt, std::set<int>, PtLess> interior_point_edges;
  for (auto& [pr, pts] : pair_points) {
    auto [e1, e2] = pr;
    if (pair_overlap.count(pr)) continue;
    auto [a1, b1] = g.edge(e1);
    auto [a2, b2] = g.edge(e2);
    std::set<int> shared_vs;
    for (int v : {a1, b1})
      if (v == a2 || v == b2) shared_vs.insert(v);
    auto name_pair = [&]() {
      return g.id_of(a1) + "-" + g.id_of(b1) + " with " + g.id_of(a2) + "-" + g.id_of(b2);
    };
    std::vector<Pt> nonvertex;
    for (const Pt& p : pts) {
      bool at_shared_v = false;
      for (int v : shared_vs)
        if (d.pos[v] == p) at_shared_v = true;
      if (at_shared_v) continue;
      bool at_endpoint = (p == d.pos[a1] || p == d.pos[b1] || p == d.pos[a2] || p == d.pos[b2]);
      if (at_endpoint) continue;  // reported as VertexOnEdgeInterior
      nonvertex.push_back(p);
    }
    if (pts.size() > 1) issue("RepeatedIntersection", name_pair(), *pts.begin());
    for (const Pt& p : nonvertex) {
      interior_point_edges[p].insert(e1);
      interior_point_edges[p].insert(e2);
      auto br1 = branches_at(d.polylines[e1], p);
      auto br2 = branches_at(d.polylines[e2], p);
      bool tangent = (br1.size() != 2 || br2.size() != 2);
      if (!tangent) {
        // proper crossing: the four branches alternate around p
        std::vector<std::pair<Pt, int>> all;
        for (auto& v : br1) all.push_back({v, 1});
        for (auto& v : br2) all.push_back({v, 2});
        std::sort(all.begin(), all.end(),
                  [](const auto& x, const auto& y) { return angle_cmp(x.first, y.first) < 0; });
        for (int i = 0; i < 4; ++i)
          if (all[i].second == all[(i + 1) % 4].second) tangent = true;
      }
      if (tangent) issue("TangentialCrossing", name_pair(), p);
    }
  }
  for (auto& [p, es] : interior_point_edges)
    if (es.size() >= 3)
      issue("TriplePoint", std::to_string(es.size()) + " edges", p);

  return rep;
}

}  // namespace crosskit
