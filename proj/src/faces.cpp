#include "crosskit/drawing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace crosskit {

void PolylineDrawing::set_vertex(int v, const Pt& p) {
  if (static_cast<int>(pos.size()) < host.n()) pos.resize(host.n());
  pos[v] = p;
}

int PolylineDrawing::add_straight_edge(const std::string& u, const std::string& v) {
  int e = host.add_edge(u, v);
  auto [a, b] = host.edge(e);
  polylines.resize(host.m());
  polylines[e] = {pos[a], pos[b]};
  return e;
}

bool ValidationReport::has(const std::string& code) const {
  for (const auto& i : issues)
    if (i.code == code) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) return "ok";
  std::string out;
  for (const auto& i : issues) {
    out += i.code;
    if (!i.detail.empty()) out += " " + i.detail;
    if (i.where) out += " at (" + format_rat(i.where->x) + "," + format_rat(i.where->y) + ")";
    out += "\n";
  }
  return out;
}

int CombinatorialDrawing::crossing_count() const {
  int c = 0;
  for (auto k : kind)
    if (k == VKind::Crossing) ++c;
  return c;
}

int CombinatorialDrawing::face_of_dart(int d) const {
  for (size_t f = 0; f < faces.size(); ++f)
    for (const auto& w : faces[f].walks)
      for (int x : w)
        if (x == d) return static_cast<int>(f);
  return -1;
}

bool CombinatorialDrawing::dart_on_some_walk(int d) const { return face_of_dart(d) >= 0; }

std::vector<int> CombinatorialDrawing::rot_edges(int v) const {
  std::vector<int> out;
  for (int d : rot[v]) out.push_back(dart_edge(d));
  return out;
}

std::map<int, CombinatorialDrawing::CrossingKey> CombinatorialDrawing::crossing_keys() const {
  // label-oriented interior position of each crossing along each original edge
  std::map<int, std::vector<std::pair<int, int>>> hits;  // pg vertex -> {(orig e, pos)}
  for (int e = 0; e < orig.m(); ++e) {
    const auto& path = backmap[e];
    if (path.size() <= 1) continue;
    auto [a, b] = orig.edge(e);
    bool fwd = orig.id_of(a) < orig.id_of(b);
    int len = static_cast<int>(path.size()) - 1;  // interior count
    // reconstruct the vertex sequence of the path
    std::vector<int> seq;
    {
      auto [p0, p1] = pg.edge(path[0]);
      auto [q0, q1] = pg.edge(path[1]);
      int second = (p0 == q0 || p0 == q1) ? p0 : p1;
      seq.push_back(pg.other_end(path[0], second));
      seq.push_back(second);
      for (size_t i = 1; i < path.size(); ++i)
        seq.push_back(pg.other_end(path[i], seq.back()));
    }
    for (int i = 1; i < static_cast<int>(seq.size()) - 1; ++i) {
      int x = seq[i];
      if (kind[x] != VKind::Crossing) continue;
      int posidx = i - 1;
      if (!fwd) posidx = len - 1 - posidx;
      hits[x].push_back({e, posidx});
    }
  }
  std::map<int, CrossingKey> out;
  for (auto& [x, v] : hits) {
    if (v.size() != 2) continue;  // malformed, caught by invariant checks
    auto [ea, ia] = v[0];
    auto [eb, ib] = v[1];
    auto lab = [&](int e) {
      auto [a, b] = orig.edge(e);
      std::string s = orig.id_of(a), t = orig.id_of(b);
      return s < t ? std::make_pair(s, t) : std::make_pair(t, s);
    };
    if (lab(eb) < lab(ea)) {
      std::swap(ea, eb);
      std::swap(ia, ib);
    }
    out[x] = CrossingKey{ea, ia, eb, ib};
  }
  return out;
}

std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rot) {
  int nd = 2 * g.m();
  std::vector<int> rot_prev(nd, -1);
  std::vector<char> seen_dart(nd, 0);
  if (static_cast<int>(rot.size()) != g.n())
    throw CrosskitError("InconsistentRotation", "rotation size mismatch");
  for (int v = 0; v < g.n(); ++v) {
    const auto& r = rot[v];
    if (static_cast<int>(r.size()) != g.degree(v))
      throw CrosskitError("InconsistentRotation",
                          "degree mismatch at " + g.id_of(v));
    for (size_t i = 0; i < r.size(); ++i) {
      int d = r[i];
      if (d < 0 || d >= nd || dart_tail(g, d) != v || seen_dart[d])
        throw CrosskitError("InconsistentRotation",
                            "bad dart in rotation at " + g.id_of(v));
      seen_dart[d] = 1;
      rot_prev[d] = r[(i + r.size() - 1) % r.size()];
    }
  }
  for (int d = 0; d < nd; ++d)
    if (!seen_dart[d])
      throw CrosskitError("InconsistentRotation", "dart missing from rotation");

  // next boundary dart of the face left of d: rotation-previous of its
  // reverse at the head vertex (counterclockwise rotations, interior faces
  // traced counterclockwise)
  std::vector<std::vector<int>> orbits;
  std::vector<char> done(nd, 0);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (done[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      orbit.push_back(d);
      done[d] = 1;
      d = rot_prev[dart_reverse(d)];
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

std::vector<Pt> walk_polygon(const CombinatorialDrawing& cd, const std::vector<int>& walk) {
  std::vector<Pt> poly;
  for (int d : walk) {
    int e = dart_edge(d);
    std::vector<Pt> pts = cd.pgeom[e];
    if (d & 1) std::reverse(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) poly.push_back(pts[i]);
  }
  return poly;
}

}  // namespace

void assemble_faces_geometric(CombinatorialDrawing& cd) {
  cd.faces.clear();
  cd.outer = -1;
  auto comps = cd.pg.components();
  int nc = static_cast<int>(comps.size());
  std::vector<int> comp_of(cd.pg.n(), -1);
  for (int c = 0; c < nc; ++c)
    for (int v : comps[c]) comp_of[v] = c;

  auto orbits = cd.pg.m() ? trace_faces(cd.pg, cd.rot) : std::vector<std::vector<int>>{};
  struct OrbitInfo {
    int comp;
    Rat area2;
    bool is_outer_of_comp = false;
  };
  std::vector<OrbitInfo> info(orbits.size());
  std::vector<std::vector<Pt>> polys(orbits.size());
  std::map<int, std::vector<int>> comp_orbits;
  for (size_t i = 0; i < orbits.size(); ++i) {
    info[i].comp = comp_of[dart_tail(cd.pg, orbits[i][0])];
    polys[i] = walk_polygon(cd, orbits[i]);
    info[i].area2 = signed_area2(polys[i]);
    comp_orbits[info[i].comp].push_back(static_cast<int>(i));
  }
  for (auto& [c, os] : comp_orbits) {
    int best = os[0];
    for (int o : os)
      if (info[o].area2 < info[best].area2) best = o;
    info[best].is_outer_of_comp = true;
  }

  // face index per interior orbit, plus one global outer face
  std::vector<int> face_of_orbit(orbits.size(), -1);
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (info[i].is_outer_of_comp) continue;
    face_of_orbit[i] = static_cast<int>(cd.faces.size());
    cd.faces.push_back(FaceRec{{orbits[i]}, {}});
  }
  cd.outer = static_cast<int>(cd.faces.size());
  cd.faces.push_back(FaceRec{{}, {}});

  auto enclosing_face = [&](const Pt& p, int skip_comp) {
    int best = -1;
    for (size_t i = 0; i < orbits.size(); ++i) {
      if (info[i].is_outer_of_comp || info[i].comp == skip_comp) continue;
      if (winding_number(polys[i], p) == 0) continue;
      if (best < 0 || abs(info[i].area2) < abs(info[best].area2))
        best = static_cast<int>(i);
    }
    return best < 0 ? cd.outer : face_of_orbit[best];
  };

  for (auto& [c, os] : comp_orbits) {
    int outer_orbit = -1;
    for (int o : os)
      if (info[o].is_outer_of_comp) outer_orbit = o;
    Pt p = cd.pos[dart_tail(cd.pg, orbits[outer_orbit][0])];
    cd.faces[enclosing_face(p, c)].walks.push_back(orbits[outer_orbit]);
  }
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.pg.degree(v) == 0)
      cd.faces[enclosing_face(cd.pos[v], comp_of[v])].isolated.push_back(v);
}

std::vector<int> side_partition(const CombinatorialDrawing& cd,
                                const std::vector<char>& walk_edge) {
  int nf = static_cast<int>(cd.faces.size());
  std::vector<int> dart_face(2 * cd.pg.m(), -1);
  for (int f = 0; f < nf; ++f)
    for (const auto& w : cd.faces[f].walks)
      for (int d : w) dart_face[d] = f;
  std::vector<int> color(nf, -1);
  for (int root = 0; root < nf; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> q{root};
    while (!q.empty()) {
      int f = q.back();
      q.pop_back();
      for (const auto& w : cd.faces[f].walks)
        for (int d : w) {
          int e = dart_edge(d);
          int g = dart_face[dart_reverse(d)];
          int want = color[f] ^ (walk_edge[e] ? 1 : 0);
          if (color[g] < 0) {
            color[g] = want;
            q.push_back(g);
          } else if (color[g] != want) {
            throw CrosskitError("InconsistentWalk",
                                "side partition needs an even boundary");
          }
        }
    }
  }
  return color;
}

std::vector<int> merged_face_classes(const CombinatorialDrawing& cd,
                                     const std::vector<char>& keep_edge) {
  int nf = static_cast<int>(cd.faces.size());
  std::vector<int> dart_face(2 * cd.pg.m(), -1);
  for (int f = 0; f < nf; ++f)
    for (const auto& w : cd.faces[f].walks)
      for (int d : w) dart_face[d] = f;
  std::vector<int> uf(nf);
  for (int i = 0; i < nf; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int e = 0; e < cd.pg.m(); ++e) {
    if (keep_edge[e]) continue;
    int a = find(dart_face[2 * e]);
    int b = find(dart_face[2 * e + 1]);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> cls(nf);
  for (int f = 0; f < nf; ++f) cls[f] = find(f);
  return cls;
}

ValidationReport check_drawing_invariants(const CombinatorialDrawing& cd) {
  ValidationReport rep;
  auto issue = [&](const std::string& c, const std::string& d) {
    rep.issues.push_back({c, d, std::nullopt});
  };
  const Graph& pg = cd.pg;
  if (static_cast<int>(cd.kind.size()) != pg.n() ||
      static_cast<int>(cd.rot.size()) != pg.n()) {
    issue("MalformedDrawing", "field sizes");
    return rep;
  }
  for (int v = 0; v < pg.n(); ++v) {
    if (cd.kind[v] != VKind::Crossing) continue;
    if (pg.degree(v) != 4) {
      issue("CrossingDegree", pg.id_of(v));
      continue;
    }
    std::vector<int> es;
    for (int d : cd.rot[v]) es.push_back(cd.pedge_orig.empty() ? -1 : cd.pedge_orig[dart_edge(d)]);
    if (es.size() == 4 && es[0] >= 0) {
      if (!(es[0] == es[2] && es[1] == es[3] && es[0] != es[1]))
        issue("CrossingAlternation", pg.id_of(v));
    }
  }
  try {
    auto orbits = pg.m() ? trace_faces(pg, cd.rot) : std::vector<std::vector<int>>{};
    std::set<int> walk_darts;
    size_t total = 0;
    for (const auto& f : cd.faces)
      for (const auto& w : f.walks)
        for (int d : w) {
          walk_darts.insert(d);
          ++total;
        }
    if (total != static_cast<size_t>(2 * pg.m()) ||
        walk_darts.size() != static_cast<size_t>(2 * pg.m()))
      issue("FaceCoverage", "darts not covered exactly once");
    // every orbit must appear as one face walk, unsplit
    std::map<int, int> orbit_id;
    for (size_t i = 0; i < orbits.size(); ++i)
      for (int d : orbits[i]) orbit_id[d] = static_cast<int>(i);
    for (const auto& f : cd.faces)
      for (const auto& w : f.walks) {
        if (w.empty()) continue;
        int o = orbit_id.count(w[0]) ? orbit_id[w[0]] : -1;
        if (o < 0 || orbits[o].size() != w.size())
          issue("FaceOrbit", "walk is not a rotation orbit");
      }
    int nc = static_cast<int>(pg.components().size());
    int euler = pg.n() - pg.m() + static_cast<int>(cd.faces.size());
    if (euler != 1 + nc) issue("Euler", "V-E+F != 1+components");
  } catch (const CrosskitError& e) {
    issue(e.code, e.what());
  }
  if (cd.outer < 0 || cd.outer >= static_cast<int>(cd.faces.size()))
    issue("OuterFace", "missing designated outer face");
  // backmap structure
  if (static_cast<int>(cd.backmap.size()) != cd.orig.m())
    issue("Backmap", "size mismatch");
  else {
    std::vector<int> owner(pg.m(), -1);
    for (int e = 0; e < cd.orig.m(); ++e) {
      const auto& path = cd.backmap[e];
      if (path.empty()) {
        issue("Backmap", "empty path");
        continue;
      }
      for (int pe : path) {
        if (owner[pe] != -1) issue("Backmap", "pg edge shared");
        owner[pe] = e;
        if (!cd.pedge_orig.empty() && cd.pedge_orig[pe] != e)
          issue("Backmap", "pedge_orig mismatch");
      }
    }
    for (int pe = 0; pe < pg.m(); ++pe)
      if (owner[pe] < 0) issue("Backmap", "pg edge unowned");
  }
  return rep;
}

namespace {

struct DartToken {
  std::pair<std::string, std::string> elab;
  int seg;
  int dir;
  auto operator<=>(const DartToken&) const = default;
};

// dart -> (edge label pair, label-oriented segment index, direction)
std::vector<DartToken> dart_tokens(const CombinatorialDrawing& cd) {
  std::vector<DartToken> tok(2 * cd.pg.m());
  std::vector<int> pg_of_orig(cd.orig.n(), -1);
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Real) pg_of_orig[cd.vmap[v]] = v;
  for (int e = 0; e < cd.orig.m(); ++e) {
    const auto& path = cd.backmap[e];
    auto [a, b] = cd.orig.edge(e);
    std::string sa = cd.orig.id_of(a), sb = cd.orig.id_of(b);
    bool fwd = sa < sb;
    auto lab = fwd ? std::make_pair(sa, sb) : std::make_pair(sb, sa);
    int len = static_cast<int>(path.size());
    // vertex sequence from a to b
    std::vector<int> seq;
    {
      int cur = pg_of_orig[a];
      seq.push_back(cur);
      for (int pe : path) {
        cur = cd.pg.other_end(pe, cur);
        seq.push_back(cur);
      }
    }
    for (int i = 0; i < len; ++i) {
      int pe = path[i];
      int segidx = fwd ? i : len - 1 - i;
      int u = seq[i];
      int dfwd = dart_from(cd.pg, pe, u);      // along the path (a -> b)
      int dback = dart_reverse(dfwd);
      tok[dfwd] = {lab, segidx, fwd ? 1 : -1};
      tok[dback] = {lab, segidx, fwd ? -1 : 1};
    }
  }
  return tok;
}

bool cyclic_match(const std::vector<DartToken>& a, const std::vector<DartToken>& b,
                  bool reversed) {
  if (a.size() != b.size()) return false;
  size_t n = a.size();
  if (n == 0) return true;
  std::vector<DartToken> bb = b;
  if (reversed) std::reverse(bb.begin(), bb.end());
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (a[i] != bb[(i + s) % n]) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool equivalent(const CombinatorialDrawing& a, const CombinatorialDrawing& b,
                const EquivOptions& opts) {
  auto glab = [](const Graph& g) {
    std::set<std::string> vs(g.ids().begin(), g.ids().end());
    std::set<std::pair<std::string, std::string>> es;
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edge(e);
      std::string su = g.id_of(u), sv = g.id_of(v);
      if (sv < su) std::swap(su, sv);
      es.insert({su, sv});
    }
    return std::make_pair(vs, es);
  };
  if (glab(a.orig) != glab(b.orig))
    throw CrosskitError("LabelMismatch", "drawings of different graphs");

  auto ka = a.crossing_keys();
  auto kb = b.crossing_keys();
  // keys in label space
  auto label_key = [](const CombinatorialDrawing& cd,
                      const CombinatorialDrawing::CrossingKey& k) {
    auto lab = [&](int e) {
      auto [x, y] = cd.orig.edge(e);
      std::string sx = cd.orig.id_of(x), sy = cd.orig.id_of(y);
      if (sy < sx) std::swap(sx, sy);
      return std::make_pair(sx, sy);
    };
    return std::make_tuple(lab(k.e1), k.i1, lab(k.e2), k.i2);
  };
  std::map<std::tuple<std::pair<std::string, std::string>, int,
                      std::pair<std::string, std::string>, int>, int>
      xa, xb;
  for (auto& [v, k] : ka) xa[label_key(a, k)] = v;
  for (auto& [v, k] : kb) xb[label_key(b, k)] = v;
  if (xa.size() != ka.size() || xb.size() != kb.size()) return false;
  if (xa.size() != xb.size()) return false;
  // vertex correspondence a -> b
  std::vector<int> to_b(a.pg.n(), -1);
  for (int v = 0; v < a.pg.n(); ++v)
    if (a.kind[v] == VKind::Real) {
      const std::string& id = a.orig.id_of(a.vmap[v]);
      // find the b pg vertex for this orig id
      int w = -1;
      for (int u = 0; u < b.pg.n(); ++u)
        if (b.kind[u] == VKind::Real && b.orig.id_of(b.vmap[u]) == id) w = u;
      if (w < 0) return false;
      to_b[v] = w;
    }
  for (auto& [key, v] : xa) {
    auto it = xb.find(key);
    if (it == xb.end()) return false;
    to_b[v] = it->second;
  }

  auto ta = dart_tokens(a);
  auto tb = dart_tokens(b);
  auto rot_tokens = [&](const CombinatorialDrawing& cd, const std::vector<DartToken>& t,
                        int v) {
    std::vector<DartToken> out;
    for (int d : cd.rot[v]) out.push_back(t[d]);
    return out;
  };
  for (int mode = 0; mode < (opts.reflection_agnostic ? 2 : 1); ++mode) {
    bool ok = true;
    for (int v = 0; v < a.pg.n() && ok; ++v)
      if (!cyclic_match(rot_tokens(a, ta, v), rot_tokens(b, tb, to_b[v]), mode == 1))
        ok = false;
    if (!ok) continue;
    // face vertex-sets
    auto vtok = [&](const CombinatorialDrawing& cd, int v) -> std::string {
      if (cd.kind[v] == VKind::Real) return "v:" + cd.orig.id_of(cd.vmap[v]);
      auto keys = (&cd == &a) ? ka : kb;
      auto k = label_key(cd, keys.at(v));
      auto& [l1, i1, l2, i2] = k;
      return "x:" + l1.first + "," + l1.second + ":" + std::to_string(i1) + ":" +
             l2.first + "," + l2.second + ":" + std::to_string(i2);
    };
    auto face_sets = [&](const CombinatorialDrawing& cd) {
      std::vector<std::set<std::string>> out;
      for (const auto& f : cd.faces) {
        std::set<std::string> s;
        for (const auto& w : f.walks)
          for (int d : w) s.insert(vtok(cd, dart_tail(cd.pg, d)));
        for (int v : f.isolated) s.insert(vtok(cd, v));
        out.push_back(std::move(s));
      }
      return out;
    };
    auto fa = face_sets(a);
    auto fb = face_sets(b);
    std::multiset<std::set<std::string>> ma(fa.begin(), fa.end());
    std::multiset<std::set<std::string>> mb(fb.begin(), fb.end());
    if (ma != mb) continue;
    if (!opts.sphere) {
      if (fa[a.outer] != fb[b.outer]) continue;
    }
    return true;
  }
  return false;
}

CombinatorialDrawing restrict_to_gamma(const CombinatorialDrawing& cd) {
  CombinatorialDrawing out;
  // original subgraph: vertices and edges fully inside gamma
  std::vector<char> orig_v_in(cd.orig.n(), 0);
  std::vector<char> orig_e_in(cd.orig.m(), 1);
  for (int e = 0; e < cd.orig.m(); ++e) {
    for (int pe : cd.backmap[e])
      if (!cd.gamma_e[pe]) orig_e_in[e] = 0;
    if (cd.backmap[e].empty()) orig_e_in[e] = 0;
  }
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.gamma_v[v] && cd.kind[v] == VKind::Real) orig_v_in[cd.vmap[v]] = 1;

  std::vector<int> new_orig_v(cd.orig.n(), -1);
  for (int v = 0; v < cd.orig.n(); ++v)
    if (orig_v_in[v]) new_orig_v[v] = out.orig.add_vertex(cd.orig.id_of(v));
  std::vector<int> new_orig_e(cd.orig.m(), -1);
  for (int e = 0; e < cd.orig.m(); ++e)
    if (orig_e_in[e]) {
      auto [u, v] = cd.orig.edge(e);
      new_orig_e[e] = out.orig.add_edge(new_orig_v[u], new_orig_v[v]);
    }

  std::vector<int> new_pg_v(cd.pg.n(), -1);
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.gamma_v[v]) {
      new_pg_v[v] = out.pg.add_vertex(cd.pg.id_of(v));
      out.kind.push_back(cd.kind[v]);
      out.vmap.push_back(cd.kind[v] == VKind::Real ? new_orig_v[cd.vmap[v]] : -1);
      if (cd.vcolor.count(v)) out.vcolor[new_pg_v[v]] = cd.vcolor.at(v);
    }
  std::vector<int> new_pg_e(cd.pg.m(), -1);
  out.backmap.assign(out.orig.m(), {});
  for (int e = 0; e < cd.orig.m(); ++e) {
    if (!orig_e_in[e]) continue;
    for (int pe : cd.backmap[e]) {
      auto [u, v] = cd.pg.edge(pe);
      new_pg_e[pe] = out.pg.add_edge(new_pg_v[u], new_pg_v[v]);
      out.pedge_orig.push_back(new_orig_e[e]);
      out.backmap[new_orig_e[e]].push_back(new_pg_e[pe]);
    }
  }
  out.gamma_v.assign(out.pg.n(), 1);
  out.gamma_e.assign(out.pg.m(), 1);

  // restricted rotations keep the surviving darts in order
  out.rot.assign(out.pg.n(), {});
  for (int v = 0; v < cd.pg.n(); ++v) {
    if (new_pg_v[v] < 0) continue;
    for (int d : cd.rot[v]) {
      int pe = dart_edge(d);
      if (new_pg_e[pe] < 0) continue;
      int nd = dart_from(out.pg, new_pg_e[pe], new_pg_v[v]);
      out.rot[new_pg_v[v]].push_back(nd);
    }
  }

  // merge old faces across removed pg edges
  int nf = static_cast<int>(cd.faces.size());
  std::vector<int> uf(nf);
  for (int i = 0; i < nf; ++i) uf[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<int> dart_face(2 * cd.pg.m(), -1);
  for (int f = 0; f < nf; ++f)
    for (const auto& w : cd.faces[f].walks)
      for (int d : w) dart_face[d] = f;
  for (int pe = 0; pe < cd.pg.m(); ++pe) {
    if (new_pg_e[pe] >= 0) continue;
    int f1 = find(dart_face[2 * pe]);
    int f2 = find(dart_face[2 * pe + 1]);
    uf[f1] = f2;
  }
  // new orbits, grouped by merged class of any old flanking face
  std::map<int, int> class_to_new;
  auto orbits = out.pg.m() ? trace_faces(out.pg, out.rot) : std::vector<std::vector<int>>{};
  // map new dart back to old dart to find its old face
  // new dart (edge, side): rebuild correspondence
  std::vector<int> old_dart_of(2 * out.pg.m(), -1);
  for (int pe = 0; pe < cd.pg.m(); ++pe) {
    if (new_pg_e[pe] < 0) continue;
    auto [u, v] = cd.pg.edge(pe);
    int dnew = dart_from(out.pg, new_pg_e[pe], new_pg_v[u]);
    int dold = dart_from(cd.pg, pe, u);
    old_dart_of[dnew] = dold;
    old_dart_of[dart_reverse(dnew)] = dart_reverse(dold);
  }
  for (const auto& o : orbits) {
    int cls = find(dart_face[old_dart_of[o[0]]]);
    auto it = class_to_new.find(cls);
    int f;
    if (it == class_to_new.end()) {
      f = static_cast<int>(out.faces.size());
      out.faces.push_back({});
      class_to_new[cls] = f;
    } else {
      f = it->second;
    }
    out.faces[f].walks.push_back(o);
  }
  // isolated surviving vertices go to the merged class of any old face at them
  std::vector<std::vector<int>> old_faces_at(cd.pg.n());
  for (int f = 0; f < nf; ++f) {
    for (const auto& w : cd.faces[f].walks)
      for (int d : w) old_faces_at[dart_tail(cd.pg, d)].push_back(f);
    for (int v : cd.faces[f].isolated) old_faces_at[v].push_back(f);
  }
  for (int v = 0; v < cd.pg.n(); ++v) {
    if (new_pg_v[v] < 0 || out.pg.degree(new_pg_v[v]) > 0) continue;
    int cls = find(old_faces_at[v].at(0));
    auto it = class_to_new.find(cls);
    int f;
    if (it == class_to_new.end()) {
      f = static_cast<int>(out.faces.size());
      out.faces.push_back({});
      class_to_new[cls] = f;
    } else {
      f = it->second;
    }
    out.faces[f].isolated.push_back(new_pg_v[v]);
  }
  int outer_cls = find(cd.outer);
  if (!class_to_new.count(outer_cls)) {
    class_to_new[outer_cls] = static_cast<int>(out.faces.size());
    out.faces.push_back({});
  }
  out.outer = class_to_new[outer_cls];
  return out;
}

}  // namespace crosskit
