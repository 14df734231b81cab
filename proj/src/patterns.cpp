#include "crosskit/patterns.hpp"

#include "crosskit/solver.hpp"
#include "patterns_internal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace crosskit {

namespace detail {

void finish_pi(CombinatorialDrawing& pi) {
  pi.orig = pi.pg;
  pi.vmap.resize(pi.pg.n());
  for (int v = 0; v < pi.pg.n(); ++v) pi.vmap[v] = v;
  pi.backmap.assign(pi.pg.m(), {});
  pi.pedge_orig.resize(pi.pg.m());
  for (int e = 0; e < pi.pg.m(); ++e) {
    pi.backmap[e] = {e};
    pi.pedge_orig[e] = e;
  }
  pi.gamma_v.assign(pi.pg.n(), 1);
  pi.gamma_e.assign(pi.pg.m(), 1);
}

CombinatorialDrawing empty_pi() {
  CombinatorialDrawing pi;
  pi.faces.push_back(FaceRec{});
  pi.outer = 0;
  finish_pi(pi);
  return pi;
}

}  // namespace detail

int TopologicalCrossingPattern::pi_degree(int v) const {
  const std::string& id = pattern_graph.id_of(v);
  if (!pi.pg.has_vertex(id)) return -1;
  return pi.pg.degree(pi.pg.index_of(id));
}

bool TopologicalCrossingPattern::pi_has_vertex(int v) const {
  return pi.pg.has_vertex(pattern_graph.id_of(v));
}

std::optional<int> TopologicalCrossingPattern::pi_edge(int e) const {
  auto [u, v] = pattern_graph.edge(e);
  const std::string& su = pattern_graph.id_of(u);
  const std::string& sv = pattern_graph.id_of(v);
  if (!pi.pg.has_vertex(su) || !pi.pg.has_vertex(sv)) return std::nullopt;
  return pi.pg.edge_index(pi.pg.index_of(su), pi.pg.index_of(sv));
}

namespace {

// declared faces must partition the rotation orbits of pi, one face per
// merged region is not required here (pi may group several orbits)
void check_pi(const TopologicalCrossingPattern& p, ValidationReport& rep) {
  auto issue = [&](const std::string& d) {
    rep.issues.push_back({"PiInconsistent", d, std::nullopt});
  };
  const CombinatorialDrawing& pi = p.pi;
  for (const auto& id : pi.pg.ids())
    if (!p.pattern_graph.has_vertex(id)) {
      issue("pi vertex " + id + " not in the pattern");
      return;
    }
  for (int e = 0; e < pi.pg.m(); ++e) {
    auto [u, v] = pi.pg.edge(e);
    int pu = p.pattern_graph.index_of(pi.pg.id_of(u));
    int pv = p.pattern_graph.index_of(pi.pg.id_of(v));
    if (!p.pattern_graph.has_edge(pu, pv)) {
      issue("pi edge not in the pattern");
      return;
    }
  }
  if (static_cast<int>(pi.rot.size()) != pi.pg.n()) {
    issue("rotation size");
    return;
  }
  std::vector<std::vector<int>> orbits;
  try {
    if (pi.pg.m())
      orbits = trace_faces(pi.pg, pi.rot);
  } catch (const CrosskitError& e) {
    issue(e.what());
    return;
  }
  std::map<int, int> orbit_of;
  for (size_t i = 0; i < orbits.size(); ++i)
    for (int d : orbits[i]) orbit_of[d] = static_cast<int>(i);
  auto comps = pi.pg.components();
  std::vector<int> comp_of(pi.pg.n(), -1);
  for (size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  int nc = static_cast<int>(comps.size());
  int nf = static_cast<int>(pi.faces.size());
  // component-face incidences must form a tree, else the grouping of orbits
  // into composite faces is not realizable on the sphere
  std::vector<int> uf(nc + nf);
  for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::set<std::pair<int, int>> inc;
  bool multi = false;
  auto touch = [&](int comp, int face) {
    if (!inc.insert({comp, face}).second) multi = true;
    uf[find(comp)] = find(nc + face);
  };
  std::set<int> used;
  size_t walk_count = 0;
  std::set<int> isolated_seen;
  for (int fi = 0; fi < nf; ++fi) {
    const FaceRec& f = pi.faces[fi];
    for (const auto& w : f.walks) {
      ++walk_count;
      if (w.empty() || !orbit_of.count(w[0])) {
        issue("face walk is not an orbit");
        return;
      }
      int o = orbit_of[w[0]];
      const auto& orb = orbits[o];
      bool same = orb.size() == w.size() && !used.count(o);
      if (same) {
        size_t s = std::find(orb.begin(), orb.end(), w[0]) - orb.begin();
        for (size_t i = 0; i < w.size() && same; ++i)
          same = orb[(s + i) % orb.size()] == w[i];
      }
      if (!same) {
        issue("face walk is not an orbit");
        return;
      }
      used.insert(o);
      touch(comp_of[dart_tail(pi.pg, w[0])], fi);
    }
    for (int v : f.isolated) {
      if (v < 0 || v >= pi.pg.n() || pi.pg.degree(v) != 0 ||
          isolated_seen.count(v)) {
        issue("bad isolated vertex assignment");
        return;
      }
      isolated_seen.insert(v);
      touch(comp_of[v], fi);
    }
  }
  if (walk_count != orbits.size()) issue("face walks do not cover all orbits");
  for (int v = 0; v < pi.pg.n(); ++v)
    if (pi.pg.degree(v) == 0 && !isolated_seen.count(v))
      issue("degree-0 pi vertex " + pi.pg.id_of(v) + " placed in no face");
  int euler = pi.pg.n() - pi.pg.m() + nf;
  if (euler != 1 + nc) issue("face count off for the sphere");
  if (multi) issue("component meets one face twice");
  int trees = 0;
  for (size_t i = 0; i < uf.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++trees;
  if (trees != 1) issue("faces do not nest into one sphere");
  if (pi.outer < 0 || pi.outer >= nf) issue("outer face index");
}

}  // namespace

ValidationReport validate_pattern(const TopologicalCrossingPattern& p) {
  ValidationReport rep;
  auto issue = [&](const std::string& c, const std::string& d) {
    rep.issues.push_back({c, d, std::nullopt});
  };
  const Graph& g = p.pattern_graph;
  if (static_cast<int>(p.vc.size()) != g.n() ||
      static_cast<int>(p.vphi.size()) != g.n() ||
      static_cast<int>(p.ep.size()) != g.m() ||
      static_cast<int>(p.ephi.size()) != g.m()) {
    issue("MalformedPattern", "flag vector sizes");
    return rep;
  }
  if (!abstractly_planar(g)) issue("NonPlanarPattern", "pattern graph");
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    if (p.ephi[e] && (!p.vphi[u] || !p.vphi[v]))
      issue("EphiEndpointsViolation",
            g.id_of(u) + "-" + g.id_of(v));
    if (p.ep[e] && !(p.vc[u] && !p.vphi[u] && p.vc[v] && !p.vphi[v]))
      issue("CrossingLocalityViolation",
            g.id_of(u) + "-" + g.id_of(v));
  }
  for (const auto& comp : g.components()) {
    bool has = false;
    for (int v : comp) has = has || p.vc[v];
    if (!has) issue("ComponentWithoutVC", g.id_of(comp[0]));
  }
  check_pi(p, rep);
  if (!rep.has("PiInconsistent")) {
    // closed neighborhood of the crossing vertices, in the pattern
    std::vector<char> near_vc(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
      if (p.vc[v]) near_vc[v] = 1;
      for (int e : g.incident(v))
        if (p.vc[g.other_end(e, v)]) near_vc[v] = 1;
    }
    for (const auto& comp : p.pi.pg.components()) {
      bool has = false;
      for (int v : comp) has = has || near_vc[g.index_of(p.pi.pg.id_of(v))];
      if (!has) issue("PiComponentOutsideNVC", p.pi.pg.id_of(comp[0]));
    }
    // endpoints of edges that are not instance-predrawn may only carry
    // paths and cycles of the predrawing
    std::vector<char> ea_end(g.n(), 0);
    for (int e = 0; e < g.m(); ++e)
      if (!p.ephi[e]) {
        ea_end[g.edge(e).first] = 1;
        ea_end[g.edge(e).second] = 1;
      }
    for (int v = 0; v < p.pi.pg.n(); ++v) {
      int pv = g.index_of(p.pi.pg.id_of(v));
      if (!ea_end[pv]) continue;
      int deg = 0;
      for (int e : p.pi.pg.incident(v)) {
        int w = p.pi.pg.other_end(e, v);
        if (ea_end[g.index_of(p.pi.pg.id_of(w))]) ++deg;
      }
      if (deg > 2) issue("SideSpecDegreeViolation", p.pi.pg.id_of(v));
    }
  }
  return rep;
}

namespace {

// face-of-dart table for a pattern predrawing
std::vector<int> pi_face_table(const CombinatorialDrawing& pi) {
  std::vector<int> t(2 * pi.pg.m(), -1);
  for (size_t f = 0; f < pi.faces.size(); ++f)
    for (const auto& w : pi.faces[f].walks)
      for (int d : w) t[d] = static_cast<int>(f);
  return t;
}

std::vector<int> pi_isolated_face(const CombinatorialDrawing& pi) {
  std::vector<int> t(pi.pg.n(), -1);
  for (size_t f = 0; f < pi.faces.size(); ++f)
    for (int v : pi.faces[f].isolated) t[v] = static_cast<int>(f);
  return t;
}

// pi equivalence under a fixed pattern-vertex bijection, one handedness
bool pi_matches_mode(const TopologicalCrossingPattern& a,
                     const TopologicalCrossingPattern& b,
                     const std::vector<int>& to_b, bool reflected) {
  const CombinatorialDrawing& pa = a.pi;
  const CombinatorialDrawing& pb = b.pi;
  auto bpv = [&](int av) {  // a pi vertex -> b pi vertex
    int ap = a.pattern_graph.index_of(pa.pg.id_of(av));
    return pb.pg.index_of(b.pattern_graph.id_of(to_b[ap]));
  };
  auto bdart = [&](int ad) {
    int tail = bpv(dart_tail(pa.pg, ad));
    int head = bpv(dart_head(pa.pg, ad));
    auto be = pb.pg.edge_index(tail, head);
    int d = dart_from(pb.pg, *be, tail);
    return reflected ? dart_reverse(d) : d;
  };
  auto fta = pi_face_table(pa);
  auto ftb = pi_face_table(pb);
  std::vector<int> corr(pa.faces.size(), -1);
  std::vector<char> hit(pb.faces.size(), 0);
  auto bind = [&](int fa, int fb) {
    if (corr[fa] < 0) {
      if (hit[fb]) return false;
      corr[fa] = fb;
      hit[fb] = 1;
      return true;
    }
    return corr[fa] == fb;
  };
  for (size_t f = 0; f < pa.faces.size(); ++f)
    for (const auto& w : pa.faces[f].walks)
      for (int d : w)
        if (!bind(static_cast<int>(f), ftb[bdart(d)])) return false;
  auto isoa = pi_isolated_face(pa);
  auto isob = pi_isolated_face(pb);
  for (int v = 0; v < pa.pg.n(); ++v)
    if (isoa[v] >= 0 && !bind(isoa[v], isob[bpv(v)])) return false;
  if (a.pi_outer_pinned && !bind(pa.outer, pb.outer)) return false;
  // rotations only bind above degree 2
  for (int v = 0; v < pa.pg.n(); ++v) {
    if (pa.pg.degree(v) <= 2) continue;
    std::vector<int> cmp;  // image out-darts, in pa order
    for (int d : pa.rot[v]) cmp.push_back(bdart(d) ^ (reflected ? 1 : 0));
    if (reflected) std::reverse(cmp.begin(), cmp.end());
    const auto& have = pb.rot[bpv(v)];
    if (cmp.size() != have.size()) return false;
    size_t n = have.size();
    bool ok = false;
    for (size_t s = 0; s < n && !ok; ++s) {
      bool all = true;
      for (size_t i = 0; i < n && all; ++i)
        if (have[(s + i) % n] != cmp[i]) all = false;
      ok = all;
    }
    if (!ok) return false;
  }
  return true;
}

bool pi_equivalent_under(const TopologicalCrossingPattern& a,
                         const TopologicalCrossingPattern& b,
                         const std::vector<int>& to_b) {
  if (a.pi_outer_pinned != b.pi_outer_pinned) return false;
  return pi_matches_mode(a, b, to_b, false) ||
         pi_matches_mode(a, b, to_b, true);
}

std::vector<int> iso_signature(const TopologicalCrossingPattern& p) {
  std::vector<int> sig{p.pattern_graph.n(), p.pattern_graph.m(),
                       p.pi.pg.n(), p.pi.pg.m(),
                       static_cast<int>(p.pi.faces.size())};
  std::vector<int> vs;
  for (int v = 0; v < p.pattern_graph.n(); ++v)
    vs.push_back(p.pattern_graph.degree(v) * 100 + p.vc[v] * 8 + p.vphi[v] * 4 +
                 (p.pi_has_vertex(v) ? 2 : 0) + (p.vertex_colors.count(v) ? 1 : 0));
  std::sort(vs.begin(), vs.end());
  sig.insert(sig.end(), vs.begin(), vs.end());
  std::vector<int> es;
  for (int e = 0; e < p.pattern_graph.m(); ++e)
    es.push_back(p.ep[e] * 4 + p.ephi[e] * 2 + (p.pi_edge(e) ? 1 : 0));
  std::sort(es.begin(), es.end());
  sig.insert(sig.end(), es.begin(), es.end());
  return sig;
}

}  // namespace

bool pattern_isomorphic(const TopologicalCrossingPattern& a,
                        const TopologicalCrossingPattern& b) {
  if (iso_signature(a) != iso_signature(b)) return false;
  const Graph& ga = a.pattern_graph;
  const Graph& gb = b.pattern_graph;
  int n = ga.n();
  auto vcolor = [](const TopologicalCrossingPattern& p, int v) {
    auto it = p.vertex_colors.find(v);
    return it == p.vertex_colors.end() ? std::string() : it->second;
  };
  auto ecolor = [](const TopologicalCrossingPattern& p, int e) {
    auto it = p.edge_colors.find(e);
    return it == p.edge_colors.end() ? std::string() : it->second;
  };
  auto v_compat = [&](int va, int vb) {
    return a.vc[va] == b.vc[vb] && a.vphi[va] == b.vphi[vb] &&
           ga.degree(va) == gb.degree(vb) &&
           a.pi_has_vertex(va) == b.pi_has_vertex(vb) &&
           a.pi_degree(va) == b.pi_degree(vb) &&
           vcolor(a, va) == vcolor(b, vb);
  };
  auto e_compat = [&](int ea, int eb) {
    return a.ep[ea] == b.ep[eb] && a.ephi[ea] == b.ephi[eb] &&
           a.pi_edge(ea).has_value() == b.pi_edge(eb).has_value() &&
           ecolor(a, ea) == ecolor(b, eb);
  };
  // vertex order: BFS inside components, larger components first
  std::vector<int> order;
  {
    auto comps = ga.components();
    std::sort(comps.begin(), comps.end(),
              [](const auto& x, const auto& y) { return x.size() > y.size(); });
    std::vector<char> seen(n, 0);
    for (const auto& comp : comps) {
      int root = comp[0];
      for (int v : comp)
        if (ga.degree(v) > ga.degree(root)) root = v;
      std::vector<int> q{root};
      seen[root] = 1;
      for (size_t i = 0; i < q.size(); ++i) {
        int v = q[i];
        order.push_back(v);
        for (int e : ga.incident(v)) {
          int w = ga.other_end(e, v);
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        }
      }
    }
  }
  std::vector<int> to_b(n, -1);
  std::vector<char> used(gb.n(), 0);
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == order.size())
      return pi_equivalent_under(a, b, to_b);
    int va = order[pos];
    for (int vb = 0; vb < gb.n(); ++vb) {
      if (used[vb] || !v_compat(va, vb)) continue;
      bool ok = true;
      for (int ea : ga.incident(va)) {
        int wa = ga.other_end(ea, va);
        if (to_b[wa] < 0) continue;
        auto eb = gb.edge_index(vb, to_b[wa]);
        if (!eb || !e_compat(ea, *eb)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      to_b[va] = vb;
      used[vb] = 1;
      if (rec(pos + 1)) return true;
      to_b[va] = -1;
      used[vb] = 0;
    }
    return false;
  };
  return rec(0);
}

void color_predrawn_crossings(CombinatorialDrawing& cd,
                              const std::string& color) {
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Crossing && cd.gamma_v[v]) cd.vcolor[v] = color;
}

namespace {

Json dart_json(const Graph& g, int d) {
  return Json::array({g.id_of(dart_tail(g, d)), g.id_of(dart_head(g, d))});
}

int dart_from_json(const Graph& g, const Json& j) {
  int t = g.index_of(j.at(0).get<std::string>());
  int h = g.index_of(j.at(1).get<std::string>());
  auto e = g.edge_index(t, h);
  if (!e) throw CrosskitError("MalformedPattern", "walk dart is not an edge");
  return dart_from(g, *e, t);
}

}  // namespace

Json pattern_to_json(const TopologicalCrossingPattern& p) {
  Json j;
  j["vertices"] = Json::array();
  const Graph& g = p.pattern_graph;
  for (int v = 0; v < g.n(); ++v) {
    Json jv;
    jv["id"] = g.id_of(v);
    jv["kind"] = p.vc[v] ? "crossing" : "real";
    jv["instance_predrawn"] = static_cast<bool>(p.vphi[v]);
    if (p.vertex_colors.count(v)) jv["color"] = p.vertex_colors.at(v);
    j["vertices"].push_back(jv);
  }
  j["edges"] = Json::array();
  for (int e = 0; e < g.m(); ++e) {
    Json je;
    auto [u, v] = g.edge(e);
    je["ends"] = Json::array({g.id_of(u), g.id_of(v)});
    je["kind"] = p.ep[e] ? "contracted" : "real";
    je["instance_predrawn"] = static_cast<bool>(p.ephi[e]);
    je["pattern_predrawn"] = p.pi_edge(e).has_value();
    if (p.edge_colors.count(e)) je["color"] = p.edge_colors.at(e);
    j["edges"].push_back(je);
  }
  Json jpi;
  jpi["rotation"] = Json::object();
  for (int v = 0; v < p.pi.pg.n(); ++v) {
    Json lst = Json::array();
    for (int d : p.pi.rot[v]) lst.push_back(p.pi.pg.id_of(dart_head(p.pi.pg, d)));
    jpi["rotation"][p.pi.pg.id_of(v)] = lst;
  }
  jpi["faces"] = Json::array();
  for (const auto& f : p.pi.faces) {
    Json jf;
    jf["walks"] = Json::array();
    for (const auto& w : f.walks) {
      Json jw = Json::array();
      for (int d : w) jw.push_back(dart_json(p.pi.pg, d));
      jf["walks"].push_back(jw);
    }
    jf["isolated"] = Json::array();
    for (int v : f.isolated) jf["isolated"].push_back(p.pi.pg.id_of(v));
    jpi["faces"].push_back(jf);
  }
  if (p.pi_outer_pinned) {
    Json jw = Json::array();
    for (const auto& w : p.pi.faces.at(p.pi.outer).walks) {
      for (int d : w) jw.push_back(dart_json(p.pi.pg, d));
      break;
    }
    jpi["outer_face"] = jw;
  }
  j["pi"] = jpi;
  return j;
}

TopologicalCrossingPattern pattern_from_json(const Json& j) {
  TopologicalCrossingPattern p;
  Graph& g = p.pattern_graph;
  for (const auto& jv : j.at("vertices")) {
    int v = g.add_vertex(jv.at("id").get<std::string>());
    std::string kind = jv.at("kind").get<std::string>();
    if (kind != "real" && kind != "crossing")
      throw CrosskitError("MalformedPattern", "vertex kind " + kind);
    p.vc.push_back(kind == "crossing");
    p.vphi.push_back(jv.at("instance_predrawn").get<bool>());
    if (jv.count("color")) p.vertex_colors[v] = jv.at("color").get<std::string>();
  }
  std::vector<char> in_pi_edge;
  for (const auto& je : j.at("edges")) {
    int e = g.add_edge(je.at("ends").at(0).get<std::string>(),
                       je.at("ends").at(1).get<std::string>());
    std::string kind = je.at("kind").get<std::string>();
    if (kind != "real" && kind != "contracted")
      throw CrosskitError("MalformedPattern", "edge kind " + kind);
    p.ep.push_back(kind == "contracted");
    p.ephi.push_back(je.at("instance_predrawn").get<bool>());
    in_pi_edge.push_back(je.at("pattern_predrawn").get<bool>());
    if (je.count("color")) p.edge_colors[e] = je.at("color").get<std::string>();
  }
  const Json& jpi = j.at("pi");
  CombinatorialDrawing& pi = p.pi;
  const Json& jrot = jpi.at("rotation");
  for (auto it = jrot.begin(); it != jrot.end(); ++it) {
    if (!g.has_vertex(it.key()))
      throw CrosskitError("MalformedPattern", "pi vertex " + it.key());
    pi.pg.add_vertex(it.key());
  }
  for (int e = 0; e < g.m(); ++e) {
    if (!in_pi_edge[e]) continue;
    auto [u, v] = g.edge(e);
    if (!pi.pg.has_vertex(g.id_of(u)) || !pi.pg.has_vertex(g.id_of(v)))
      throw CrosskitError("MalformedPattern", "predrawn edge off the rotation map");
    pi.pg.add_edge(g.id_of(u), g.id_of(v));
  }
  pi.kind.resize(pi.pg.n());
  for (int v = 0; v < pi.pg.n(); ++v)
    pi.kind[v] = p.vc[g.index_of(pi.pg.id_of(v))] ? VKind::Crossing : VKind::Real;
  pi.rot.assign(pi.pg.n(), {});
  for (auto it = jrot.begin(); it != jrot.end(); ++it) {
    int v = pi.pg.index_of(it.key());
    for (const auto& nb : it.value()) {
      int w = pi.pg.index_of(nb.get<std::string>());
      auto e = pi.pg.edge_index(v, w);
      if (!e) throw CrosskitError("MalformedPattern", "rotation names a non-edge");
      pi.rot[v].push_back(dart_from(pi.pg, *e, v));
    }
    if (static_cast<int>(pi.rot[v].size()) != pi.pg.degree(v))
      throw CrosskitError("MalformedPattern", "rotation misses darts at " + it.key());
  }
  if (jpi.count("faces")) {
    for (const auto& jf : jpi.at("faces")) {
      FaceRec f;
      for (const auto& jw : jf.at("walks")) {
        std::vector<int> w;
        for (const auto& jd : jw) w.push_back(dart_from_json(pi.pg, jd));
        f.walks.push_back(std::move(w));
      }
      if (jf.count("isolated"))
        for (const auto& ji : jf.at("isolated"))
          f.isolated.push_back(pi.pg.index_of(ji.get<std::string>()));
      pi.faces.push_back(std::move(f));
    }
  } else {
    // deriving faces is only unambiguous for one component or no edges
    bool edgeless = pi.pg.m() == 0;
    bool one_comp = !edgeless && pi.pg.components().size() == 1;
    if (edgeless) {
      FaceRec f;
      for (int v = 0; v < pi.pg.n(); ++v) f.isolated.push_back(v);
      pi.faces.push_back(std::move(f));
    } else if (one_comp) {
      for (auto& o : trace_faces(pi.pg, pi.rot))
        pi.faces.push_back(FaceRec{{std::move(o)}, {}});
    } else {
      throw CrosskitError("MalformedPattern",
                          "pi faces required for a disconnected predrawing");
    }
  }
  pi.outer = 0;
  if (jpi.count("outer_face")) {
    p.pi_outer_pinned = true;
    const auto& jw = jpi.at("outer_face");
    if (jw.empty()) throw CrosskitError("MalformedPattern", "empty outer walk");
    int d0 = dart_from_json(pi.pg, jw.at(0));
    int found = -1;
    for (size_t f = 0; f < pi.faces.size(); ++f)
      for (const auto& w : pi.faces[f].walks)
        for (int d : w)
          if (d == d0) found = static_cast<int>(f);
    if (found < 0)
      throw CrosskitError("MalformedPattern", "outer walk not among the faces");
    pi.outer = found;
  }
  detail::finish_pi(pi);
  return p;
}

Json pattern_set_to_json(const PatternSet& s) {
  Json j = Json::array();
  for (const auto& p : s.patterns) j.push_back(pattern_to_json(p));
  return j;
}

PatternSet pattern_set_from_json(const Json& j) {
  PatternSet s;
  for (const auto& jp : j) s.patterns.push_back(pattern_from_json(jp));
  return s;
}

}  // namespace crosskit
