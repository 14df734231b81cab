#include "crosskit/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crosskit {

namespace {

struct PtLess {
  bool operator()(const Pt& p, const Pt& q) const { return lex_less(p, q); }
};

// proper interior crossing points; valid input has exactly two edges per point
std::map<Pt, std::pair<int, int>, PtLess> gather_crossings(const PolylineDrawing& d) {
  std::map<Pt, std::pair<int, int>, PtLess> out;
  const Graph& g = d.host;
  struct SegRef {
    int edge;
    Pt a, b;
  };
  std::vector<SegRef> segs;
  for (int e = 0; e < g.m(); ++e)
    for (size_t i = 0; i + 1 < d.polylines[e].size(); ++i)
      segs.push_back({e, d.polylines[e][i], d.polylines[e][i + 1]});
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
      if (r.rel != SegRel::Point) continue;
      const Pt& p = r.point;
      // skip endpoint touches at graph vertices
      bool at_vertex = false;
      for (int v = 0; v < g.n(); ++v)
        if (d.pos[v] == p) at_vertex = true;
      if (at_vertex) continue;
      int e1 = std::min(s.edge, t.edge), e2 = std::max(s.edge, t.edge);
      out[p] = {e1, e2};
    }
    still.push_back(oi);
    active = std::move(still);
  }
  return out;
}

}  // namespace

CombinatorialDrawing planarize_geometric(const PolylineDrawing& d) {
  auto rep = validate_drawing(d);
  if (!rep.ok()) throw CrosskitError("NonSimpleDrawing", rep.to_string());

  const Graph& g = d.host;
  CombinatorialDrawing cd;
  cd.orig = g;

  auto crossings = gather_crossings(d);

  std::string prefix = "x";
  {
    auto taken = [&](const std::string& pre) {
      for (const auto& id : g.ids())
        if (id.rfind(pre, 0) == 0 &&
            id.find_first_not_of("0123456789", pre.size()) == std::string::npos &&
            id.size() > pre.size())
          return true;
      return false;
    };
    while (taken(prefix)) prefix += "x";
  }

  for (int v = 0; v < g.n(); ++v) {
    cd.pg.add_vertex(g.id_of(v));
    cd.kind.push_back(VKind::Real);
    cd.vmap.push_back(v);
    cd.pos.push_back(d.pos[v]);
    auto it = g.vertex_colors.find(v);
    if (it != g.vertex_colors.end()) cd.vcolor[v] = it->second;
  }
  std::map<Pt, int, PtLess> xvertex;
  {
    int i = 0;
    for (auto& [p, pr] : crossings) {
      int xv = cd.pg.add_vertex(prefix + std::to_string(i++));
      cd.kind.push_back(VKind::Crossing);
      cd.vmap.push_back(-1);
      cd.pos.push_back(p);
      xvertex[p] = xv;
    }
  }

  cd.backmap.assign(g.m(), {});
  for (int e = 0; e < g.m(); ++e) {
    const auto& poly = d.polylines[e];
    auto [ea, eb] = g.edge(e);
    // split params along the polyline: integer part = segment index
    struct Split {
      Rat param;
      Pt point;
      int vertex;
    };
    std::vector<Split> splits;
    for (auto& [p, pr] : crossings) {
      if (pr.first != e && pr.second != e) continue;
      for (size_t i = 0; i + 1 < poly.size(); ++i)
        if (on_segment(poly[i], poly[i + 1], p)) {
          Rat t = segment_param(poly[i], poly[i + 1], p);
          splits.push_back({Rat(static_cast<int>(i)) + t, p, xvertex[p]});
          break;
        }
    }
    std::sort(splits.begin(), splits.end(),
              [](const Split& a, const Split& b) { return a.param < b.param; });
    splits.push_back({Rat(static_cast<int>(poly.size()) - 1), poly.back(), eb});

    int prev_vertex = ea;
    Pt cursor = poly.front();
    Rat cursor_param = 0;
    for (const auto& sp : splits) {
      std::vector<Pt> piece{cursor};
      for (size_t j = 1; j + 1 < poly.size(); ++j) {
        Rat jp = Rat(static_cast<int>(j));
        if (jp > cursor_param && jp < sp.param) piece.push_back(poly[j]);
      }
      if (piece.back() != sp.point) piece.push_back(sp.point);
      int pe = cd.pg.add_edge(prev_vertex, sp.vertex);
      cd.pedge_orig.push_back(e);
      cd.backmap[e].push_back(pe);
      // pg edge geometry oriented from the smaller pg index
      auto [pa, pb] = cd.pg.edge(pe);
      if (pa != prev_vertex) std::reverse(piece.begin(), piece.end());
      (void)pb;
      cd.pgeom.push_back(std::move(piece));
      prev_vertex = sp.vertex;
      cursor = sp.point;
      cursor_param = sp.param;
    }
  }

  cd.rot.assign(cd.pg.n(), {});
  for (int v = 0; v < cd.pg.n(); ++v) {
    std::vector<std::pair<Pt, int>> darts;
    for (int pe : cd.pg.incident(v)) {
      int dd = dart_from(cd.pg, pe, v);
      std::vector<Pt> pts = cd.pgeom[pe];
      if (dd & 1) std::reverse(pts.begin(), pts.end());
      darts.push_back({Pt{pts[1].x - pts[0].x, pts[1].y - pts[0].y}, dd});
    }
    std::sort(darts.begin(), darts.end(),
              [](const auto& a, const auto& b) { return angle_cmp(a.first, b.first) < 0; });
    for (auto& [dir, dd] : darts) cd.rot[v].push_back(dd);
  }

  cd.gamma_v.assign(cd.pg.n(), 1);
  cd.gamma_e.assign(cd.pg.m(), 1);
  cd.has_geometry = true;
  assemble_faces_geometric(cd);
  return cd;
}

}  // namespace crosskit
