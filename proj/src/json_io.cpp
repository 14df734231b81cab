#include "crosskit/json_io.hpp"

#include <fstream>
#include <sstream>

namespace crosskit {

namespace {

Pt parse_point(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw CrosskitError("BadInput", "point must be a 2-list");
  return {parse_rat(j[0].get<std::string>()), parse_rat(j[1].get<std::string>())};
}

Json point_json(const Pt& p) { return Json::array({format_rat(p.x), format_rat(p.y)}); }

}  // namespace

PartiallyPredrawnGraph load_ppg(const Json& j) {
  PartiallyPredrawnGraph out;
  for (const auto& v : j.at("vertices")) out.graph.add_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges"))
    out.graph.add_edge(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  if (j.contains("colors"))
    for (auto& [k, v] : j.at("colors").items())
      out.graph.vertex_colors[out.graph.index_of(k)] = v.get<std::string>();
  if (j.contains("predrawn")) {
    const Json& p = j.at("predrawn");
    PolylineDrawing d;
    std::vector<std::pair<std::string, Pt>> placed;
    for (auto& [k, v] : p.at("vertices").items()) placed.push_back({k, parse_point(v)});
    for (auto& [k, pt] : placed) {
      if (!out.graph.has_vertex(k))
        throw CrosskitError("BadInput", "predrawn vertex not in graph: " + k);
      int v = d.host.add_vertex(k);
      d.set_vertex(v, pt);
    }
    if (p.contains("edges"))
      for (const auto& pe : p.at("edges")) {
        std::string u = pe.at("ends").at(0).get<std::string>();
        std::string v = pe.at("ends").at(1).get<std::string>();
        if (!out.graph.has_edge(out.graph.index_of(u), out.graph.index_of(v)))
          throw CrosskitError("BadInput", "predrawn edge not in graph: " + u + "-" + v);
        int e = d.host.add_edge(u, v);
        auto [a, b] = d.host.edge(e);
        std::vector<Pt> poly{d.pos[d.host.index_of(u)]};
        if (pe.contains("bends"))
          for (const auto& bp : pe.at("bends")) poly.push_back(parse_point(bp));
        poly.push_back(d.pos[d.host.index_of(v)]);
        // polylines stored oriented from edge.first
        if (a != d.host.index_of(u)) std::reverse(poly.begin(), poly.end());
        (void)b;
        d.polylines.resize(d.host.m());
        d.polylines[e] = std::move(poly);
      }
    d.polylines.resize(d.host.m());
    out.geometric = std::move(d);
  }
  return out;
}

PartiallyPredrawnGraph load_ppg_text(const std::string& text) {
  return load_ppg(Json::parse(text));
}

PartiallyPredrawnGraph load_ppg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CrosskitError("BadInput", "cannot open " + path);
  Json j;
  in >> j;
  return load_ppg(j);
}

Json save_ppg(const PartiallyPredrawnGraph& ppg) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& id : ppg.graph.ids()) j["vertices"].push_back(id);
  j["edges"] = Json::array();
  for (int e = 0; e < ppg.graph.m(); ++e) {
    auto [u, v] = ppg.graph.edge(e);
    j["edges"].push_back(Json::array({ppg.graph.id_of(u), ppg.graph.id_of(v)}));
  }
  if (!ppg.graph.vertex_colors.empty()) {
    Json c = Json::object();
    for (auto& [v, col] : ppg.graph.vertex_colors) c[ppg.graph.id_of(v)] = col;
    j["colors"] = c;
  }
  if (ppg.geometric) {
    const PolylineDrawing& d = *ppg.geometric;
    Json p;
    p["vertices"] = Json::object();
    for (int v = 0; v < d.host.n(); ++v)
      p["vertices"][d.host.id_of(v)] = point_json(d.pos[v]);
    p["edges"] = Json::array();
    for (int e = 0; e < d.host.m(); ++e) {
      auto [u, v] = d.host.edge(e);
      Json pe;
      pe["ends"] = Json::array({d.host.id_of(u), d.host.id_of(v)});
      Json bends = Json::array();
      for (size_t i = 1; i + 1 < d.polylines[e].size(); ++i)
        bends.push_back(point_json(d.polylines[e][i]));
      pe["bends"] = bends;
      p["edges"].push_back(pe);
    }
    j["predrawn"] = p;
  }
  return j;
}

CombinatorialDrawing empty_predrawing(const Graph& g) {
  CombinatorialDrawing cd;
  cd.orig = Graph{};
  cd.outer = 0;
  cd.faces.push_back({});
  (void)g;
  return cd;
}

CombinatorialDrawing ensure_predrawing(const PartiallyPredrawnGraph& ppg) {
  if (ppg.predrawing) return *ppg.predrawing;
  if (ppg.geometric) {
    PolylineDrawing d = *ppg.geometric;
    // vertex colors travel with the subgraph for downstream checks
    for (int v = 0; v < d.host.n(); ++v) {
      auto gi = ppg.graph.index_of(d.host.id_of(v));
      auto it = ppg.graph.vertex_colors.find(gi);
      if (it != ppg.graph.vertex_colors.end()) d.host.vertex_colors[v] = it->second;
    }
    return planarize_geometric(d);
  }
  return empty_predrawing(ppg.graph);
}

Json drawing_to_json(const CombinatorialDrawing& cd) {
  Json j;
  j["crossings"] = cd.crossing_count();
  Json vs = Json::array();
  for (int v = 0; v < cd.pg.n(); ++v) {
    Json jv;
    jv["id"] = cd.pg.id_of(v);
    jv["kind"] = cd.kind[v] == VKind::Crossing ? "crossing" : "real";
    if (cd.vcolor.count(v)) jv["color"] = cd.vcolor.at(v);
    if (cd.has_geometry) jv["at"] = point_json(cd.pos[v]);
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  Json rot = Json::object();
  for (int v = 0; v < cd.pg.n(); ++v) {
    Json r = Json::array();
    for (int d : cd.rot[v]) r.push_back(cd.pg.id_of(dart_head(cd.pg, d)));
    rot[cd.pg.id_of(v)] = r;
  }
  j["rotation"] = rot;
  Json fs = Json::array();
  for (const auto& f : cd.faces) {
    Json jf;
    Json walks = Json::array();
    for (const auto& w : f.walks) {
      Json jw = Json::array();
      for (int d : w) jw.push_back(cd.pg.id_of(dart_tail(cd.pg, d)));
      walks.push_back(jw);
    }
    jf["walks"] = walks;
    Json iso = Json::array();
    for (int v : f.isolated) iso.push_back(cd.pg.id_of(v));
    jf["isolated"] = iso;
    fs.push_back(jf);
  }
  j["faces"] = fs;
  j["outer_face"] = cd.outer;
  Json bm = Json::array();
  for (int e = 0; e < cd.orig.m(); ++e) {
    auto [u, v] = cd.orig.edge(e);
    Json je;
    je["ends"] = Json::array({cd.orig.id_of(u), cd.orig.id_of(v)});
    Json path = Json::array();
    // vertex id sequence along the edge
    std::vector<int> pgv;
    int cur = -1;
    for (int w = 0; w < cd.pg.n(); ++w)
      if (cd.kind[w] == VKind::Real && cd.vmap[w] == u) cur = w;
    path.push_back(cd.pg.id_of(cur));
    for (int pe : cd.backmap[e]) {
      cur = cd.pg.other_end(pe, cur);
      path.push_back(cd.pg.id_of(cur));
    }
    je["path"] = path;
    bm.push_back(je);
  }
  j["edge_paths"] = bm;
  if (!cd.gamma_e.empty()) {
    Json ge = Json::array();
    for (int pe = 0; pe < cd.pg.m(); ++pe)
      if (cd.gamma_e[pe]) {
        auto [a, b] = cd.pg.edge(pe);
        ge.push_back(Json::array({cd.pg.id_of(a), cd.pg.id_of(b)}));
      }
    j["predrawn_edges"] = ge;
  }
  return j;
}

Json report_to_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  Json is = Json::array();
  for (const auto& i : rep.issues) {
    Json ji;
    ji["code"] = i.code;
    ji["detail"] = i.detail;
    if (i.where) ji["at"] = point_json(*i.where);
    is.push_back(ji);
  }
  j["issues"] = is;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crosskit
