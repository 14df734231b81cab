#include "crosskit/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace crosskit {

namespace {

// image of every pattern edge as a host vertex path, oriented from
// edge(e).first; single edges are length-2 paths
struct Images {
  std::vector<int> vimg;
  std::vector<std::vector<int>> epath;
};

int path_edge(const CombinatorialDrawing& host, const std::vector<int>& path,
              size_t i) {
  return *host.pg.edge_index(path[i], path[i + 1]);
}

void check_host(const CombinatorialDrawing& host,
                const PartiallyPredrawnGraph& context) {
  auto bad = [](const std::string& d) {
    throw CrosskitError("InvalidHost", d);
  };
  if (!(host.orig == context.graph)) bad("host is not a drawing of the context graph");
  if (static_cast<int>(host.gamma_v.size()) != host.pg.n() ||
      static_cast<int>(host.gamma_e.size()) != host.pg.m() ||
      static_cast<int>(host.kind.size()) != host.pg.n())
    bad("host flag vectors");
  std::set<std::string> gv;
  std::set<int> ge;
  const Graph* sub = nullptr;
  if (context.predrawing)
    sub = &context.predrawing->orig;
  else if (context.geometric)
    sub = &context.geometric->host;
  if (sub) {
    for (const auto& id : sub->ids()) {
      if (!context.graph.has_vertex(id)) bad("predrawn vertex " + id + " outside the graph");
      gv.insert(id);
    }
    for (int e = 0; e < sub->m(); ++e) {
      auto [u, v] = sub->edge(e);
      auto oe = context.graph.edge_index(context.graph.index_of(sub->id_of(u)),
                                         context.graph.index_of(sub->id_of(v)));
      if (!oe) bad("predrawn edge outside the graph");
      ge.insert(*oe);
    }
  }
  for (int pe = 0; pe < host.pg.m(); ++pe) {
    bool want = ge.count(host.pedge_orig[pe]) > 0;
    if (static_cast<bool>(host.gamma_e[pe]) != want)
      bad("edge flag disagrees with the predrawn part");
  }
  for (int v = 0; v < host.pg.n(); ++v) {
    bool want;
    if (host.kind[v] == VKind::Real) {
      want = gv.count(host.orig.id_of(host.vmap[v])) > 0;
    } else {
      std::set<int> oe;
      for (int pe : host.pg.incident(v)) oe.insert(host.pedge_orig[pe]);
      want = !oe.empty();
      for (int e : oe) want = want && ge.count(e) > 0;
    }
    if (static_cast<bool>(host.gamma_v[v]) != want)
      bad("vertex flag disagrees with the predrawn part");
  }
}

// embedded-part comparison under a fixed vertex bijection, one handedness:
// keeps exactly the images of pi edges, merges host faces across everything
// else and matches pi faces to merged classes injectively, then rotations
// where pi pins them and the outer face when asked to
bool pi_realized(const TopologicalCrossingPattern& p,
                 const CombinatorialDrawing& host, const Images& im,
                 bool reflected) {
  const CombinatorialDrawing& pi = p.pi;
  if (p.pi_outer_pinned && pi.faces.empty()) return false;
  std::vector<char> keep(host.pg.m(), 0);
  std::vector<int> pat_edge_of_pi(pi.pg.m(), -1);
  for (int e = 0; e < p.pattern_graph.m(); ++e) {
    auto pe = p.pi_edge(e);
    if (!pe) continue;
    pat_edge_of_pi[*pe] = e;
    const auto& path = im.epath[e];
    for (size_t i = 0; i + 1 < path.size(); ++i)
      keep[path_edge(host, path, i)] = 1;
  }
  auto classes = merged_face_classes(host, keep);
  std::vector<int> corr(pi.faces.size(), -1);
  std::set<int> hit;
  auto bind = [&](int fa, int c) {
    if (corr[fa] < 0) {
      if (hit.count(c)) return false;
      corr[fa] = c;
      hit.insert(c);
      return true;
    }
    return corr[fa] == c;
  };
  auto pat_of_pi_v = [&](int pv) {
    return p.pattern_graph.index_of(pi.pg.id_of(pv));
  };
  // image path of a pi dart, oriented from the dart's tail
  auto oriented_path = [&](int d) {
    int e = pat_edge_of_pi[dart_edge(d)];
    std::vector<int> path = im.epath[e];
    if (p.pattern_graph.edge(e).first != pat_of_pi_v(dart_tail(pi.pg, d)))
      std::reverse(path.begin(), path.end());
    return path;
  };
  for (size_t f = 0; f < pi.faces.size(); ++f) {
    for (const auto& w : pi.faces[f].walks)
      for (int d : w) {
        auto path = oriented_path(d);
        int fd = dart_from(host.pg, path_edge(host, path, 0), path[0]);
        if (reflected) fd = dart_reverse(fd);
        if (!bind(static_cast<int>(f), classes[host.face_of_dart(fd)]))
          return false;
      }
    for (int pv : pi.faces[f].isolated) {
      int u = im.vimg[pat_of_pi_v(pv)];
      int c = -1;
      if (host.pg.degree(u) > 0) {
        c = classes[host.face_of_dart(host.rot[u][0])];
      } else {
        for (size_t hf = 0; hf < host.faces.size(); ++hf)
          for (int iv : host.faces[hf].isolated)
            if (iv == u) c = classes[hf];
        if (c < 0) return false;
      }
      if (!bind(static_cast<int>(f), c)) return false;
    }
  }
  for (int pv = 0; pv < pi.pg.n(); ++pv) {
    if (pi.pg.degree(pv) < 3) continue;
    int u = im.vimg[pat_of_pi_v(pv)];
    std::map<int, int> pi_dart_at;  // host first dart -> pi dart
    for (int d : pi.rot[pv]) {
      auto path = oriented_path(d);
      pi_dart_at[dart_from(host.pg, path_edge(host, path, 0), u)] = d;
    }
    std::vector<int> have;
    for (int hd : host.rot[u])
      if (pi_dart_at.count(hd)) have.push_back(pi_dart_at[hd]);
    const auto& want = pi.rot[pv];
    if (have.size() != want.size()) return false;
    if (reflected) std::reverse(have.begin(), have.end());
    size_t n = want.size();
    bool ok = false;
    for (size_t s = 0; s < n && !ok; ++s) {
      bool all = true;
      for (size_t i = 0; i < n && all; ++i)
        if (have[(s + i) % n] != want[i]) all = false;
      ok = all;
    }
    if (!ok) return false;
  }
  if (p.pi_outer_pinned && !bind(pi.outer, classes[host.outer])) return false;
  return true;
}

std::map<std::string, std::vector<std::string>> canonical_rotations(
    const TopologicalCrossingPattern& p, const CombinatorialDrawing& host,
    const Images& im) {
  std::map<std::string, std::vector<std::string>> out;
  for (int v = 0; v < p.pattern_graph.n(); ++v) {
    if (p.pi_degree(v) < 1) continue;
    int u = im.vimg[v];
    std::map<int, int> head_of;  // host first dart -> first interior/endpoint
    for (int e : p.pattern_graph.incident(v)) {
      if (!p.pi_edge(e)) continue;
      std::vector<int> path = im.epath[e];
      if (p.pattern_graph.edge(e).first != v)
        std::reverse(path.begin(), path.end());
      head_of[dart_from(host.pg, path_edge(host, path, 0), u)] = path[1];
    }
    std::vector<std::string> lst;
    for (int hd : host.rot[u])
      if (head_of.count(hd)) lst.push_back(host.pg.id_of(head_of[hd]));
    out[p.pattern_graph.id_of(v)] = std::move(lst);
  }
  return out;
}

bool vertex_compatible(const TopologicalCrossingPattern& p,
                       const CombinatorialDrawing& host, int va, int u) {
  if ((host.kind[u] == VKind::Crossing) != static_cast<bool>(p.vc[va]))
    return false;
  if (p.vphi[va] && !host.gamma_v[u]) return false;
  auto it = p.vertex_colors.find(va);
  if (it != p.vertex_colors.end()) {
    auto hit = host.vcolor.find(u);
    if (hit == host.vcolor.end() || hit->second != it->second) return false;
  }
  return host.pg.degree(u) >= p.pattern_graph.degree(va);
}

bool interior_compatible(const TopologicalCrossingPattern& p,
                         const CombinatorialDrawing& host, int x, int e) {
  if (host.kind[x] != VKind::Crossing) return false;
  auto it = p.edge_colors.find(e);
  if (it != p.edge_colors.end()) {
    auto hit = host.vcolor.find(x);
    if (hit == host.vcolor.end() || hit->second != it->second) return false;
  }
  return true;
}

bool pedge_compatible(const TopologicalCrossingPattern& p,
                      const CombinatorialDrawing& host, int e, int he) {
  return !p.ephi[e] || host.gamma_e[he];
}

// a matched structure passes straight through a crossing when its two darts
// there are opposite in the 4-dart rotation
bool straight_at(const CombinatorialDrawing& host, int x, int he_in,
                 int he_out) {
  const auto& r = host.rot[x];
  if (r.size() != 4) return false;
  int i = -1, j = -1;
  for (int t = 0; t < 4; ++t) {
    if (dart_edge(r[t]) == he_in) i = t;
    if (dart_edge(r[t]) == he_out) j = t;
  }
  return i >= 0 && j >= 0 && (i + 2) % 4 == j;
}

// first host edge of e's image when leaving pattern endpoint va
int image_edge_at(const TopologicalCrossingPattern& p,
                  const CombinatorialDrawing& host, const Images& im, int e,
                  int va) {
  const auto& path = im.epath[e];
  bool at_first = p.pattern_graph.edge(e).first == va;
  int u = at_first ? path.front() : path.back();
  int w = at_first ? path[1] : path[path.size() - 2];
  return *host.pg.edge_index(u, w);
}

// degree-2 crossing vertices stand for crossings the matched structure runs
// straight through, like the interiors of contracted-edge paths
bool straight_vertices_ok(const TopologicalCrossingPattern& p,
                          const CombinatorialDrawing& host, const Images& im) {
  for (int va = 0; va < p.pattern_graph.n(); ++va) {
    if (!p.vc[va] || p.pattern_graph.degree(va) != 2) continue;
    const auto& inc = p.pattern_graph.incident(va);
    int h1 = image_edge_at(p, host, im, inc[0], va);
    int h2 = image_edge_at(p, host, im, inc[1], va);
    if (!straight_at(host, im.vimg[va], h1, h2)) return false;
  }
  return true;
}

OccurrenceWitness make_witness(const TopologicalCrossingPattern& p,
                               const CombinatorialDrawing& host,
                               const Images& im, bool reflected) {
  OccurrenceWitness w;
  w.reflected = reflected;
  for (int v = 0; v < p.pattern_graph.n(); ++v)
    w.vertex_map[p.pattern_graph.id_of(v)] = host.pg.id_of(im.vimg[v]);
  for (int e = 0; e < p.pattern_graph.m(); ++e) {
    if (!p.ep[e]) continue;
    std::vector<std::string> ids;
    for (int u : im.epath[e]) ids.push_back(host.pg.id_of(u));
    w.ep_paths[e] = std::move(ids);
  }
  w.realization_rotations = canonical_rotations(p, host, im);
  return w;
}

struct Searcher {
  const TopologicalCrossingPattern& p;
  const CombinatorialDrawing& host;
  const OccursOptions& opts;
  long long budget;
  std::vector<int> order;
  Images im;
  std::vector<char> used_v, used_e;
  std::optional<OccurrenceWitness> found;

  Searcher(const TopologicalCrossingPattern& pp,
           const CombinatorialDrawing& h, const OccursOptions& o)
      : p(pp), host(h), opts(o), budget(o.budget) {
    im.vimg.assign(p.pattern_graph.n(), -1);
    im.epath.assign(p.pattern_graph.m(), {});
    used_v.assign(host.pg.n(), 0);
    used_e.assign(host.pg.m(), 0);
    auto comps = p.pattern_graph.components();
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<char> seen(p.pattern_graph.n(), 0);
    for (const auto& comp : comps) {
      int root = comp[0];
      for (int v : comp)
        if (p.pattern_graph.degree(v) > p.pattern_graph.degree(root)) root = v;
      std::vector<int> q{root};
      seen[root] = 1;
      for (size_t i = 0; i < q.size(); ++i) {
        order.push_back(q[i]);
        for (int e : p.pattern_graph.incident(q[i])) {
          int w = p.pattern_graph.other_end(e, q[i]);
          if (!seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
        }
      }
    }
  }

  void spend() {
    if (--budget < 0) throw CrosskitError("BudgetExceeded", "occurrence search");
  }

  bool vertex_ok(int va, int u) const {
    return !used_v[u] && vertex_compatible(p, host, va, u);
  }

  bool interior_ok(int x, int e) const {
    return !used_v[x] && interior_compatible(p, host, x, e);
  }

  bool path_edge_ok(int e, int he) const {
    return !used_e[he] && pedge_compatible(p, host, e, he);
  }

  // realizes pending contracted edges of list one at a time, then moves on
  bool realize(const std::vector<int>& eps, size_t idx, size_t next_pos) {
    if (idx == eps.size()) return place(next_pos);
    int e = eps[idx];
    int a = im.vimg[p.pattern_graph.edge(e).first];
    int b = im.vimg[p.pattern_graph.edge(e).second];
    std::vector<int>& path = im.epath[e];
    path = {a};
    // he_in < 0 at the start vertex; interior crossings must be passed
    // straight, so the next dart is pinned opposite the incoming one
    std::function<bool(int, int)> extend = [&](int w, int he_in) -> bool {
      for (int he : host.pg.incident(w)) {
        spend();
        if (!path_edge_ok(e, he)) continue;
        if (he_in >= 0 && !straight_at(host, w, he_in, he)) continue;
        int x = host.pg.other_end(he, w);
        if (x == b) {
          used_e[he] = 1;
          path.push_back(x);
          if (realize(eps, idx + 1, next_pos)) return true;
          path.pop_back();
          used_e[he] = 0;
        } else if (interior_ok(x, e)) {
          used_e[he] = 1;
          used_v[x] = 1;
          path.push_back(x);
          if (extend(x, he)) return true;
          path.pop_back();
          used_v[x] = 0;
          used_e[he] = 0;
        }
      }
      return false;
    };
    if (extend(a, -1)) return true;
    path.clear();
    return false;
  }

  bool place(size_t pos) {
    if (pos == order.size()) return finish();
    int va = order[pos];
    for (int u = 0; u < host.pg.n(); ++u) {
      spend();
      if (!vertex_ok(va, u)) continue;
      std::vector<int> marked, eps;
      bool ok = true;
      for (int e : p.pattern_graph.incident(va)) {
        int wa = p.pattern_graph.other_end(e, va);
        if (im.vimg[wa] < 0) continue;
        if (p.ep[e]) {
          eps.push_back(e);
          continue;
        }
        auto he = host.pg.edge_index(u, im.vimg[wa]);
        if (!he || used_e[*he] || (p.ephi[e] && !host.gamma_e[*he])) {
          ok = false;
          break;
        }
        used_e[*he] = 1;
        marked.push_back(*he);
        im.epath[e] = {im.vimg[p.pattern_graph.edge(e).first],
                       im.vimg[p.pattern_graph.edge(e).second]};
      }
      if (ok) {
        std::sort(eps.begin(), eps.end());
        im.vimg[va] = u;
        used_v[u] = 1;
        if (realize(eps, 0, pos + 1)) return true;
        im.vimg[va] = -1;
        used_v[u] = 0;
      }
      for (int he : marked) used_e[he] = 0;
      for (int e : p.pattern_graph.incident(va))
        if (!p.ep[e] && im.vimg[p.pattern_graph.other_end(e, va)] >= 0)
          im.epath[e].clear();
    }
    return false;
  }

  bool finish() {
    spend();
    if (!straight_vertices_ok(p, host, im)) return false;
    if (pi_realized(p, host, im, false)) {
      found = make_witness(p, host, im, false);
      return true;
    }
    if (!opts.orientation_sensitive && pi_realized(p, host, im, true)) {
      found = make_witness(p, host, im, true);
      return true;
    }
    return false;
  }
};

}  // namespace

std::optional<OccurrenceWitness> occurs(const TopologicalCrossingPattern& p,
                                        const CombinatorialDrawing& host,
                                        const PartiallyPredrawnGraph& context,
                                        const OccursOptions& opts) {
  if (opts.validate_host) check_host(host, context);
  if (static_cast<int>(p.vc.size()) != p.pattern_graph.n() ||
      static_cast<int>(p.ep.size()) != p.pattern_graph.m())
    throw CrosskitError("MalformedPattern", "flag vector sizes");
  Searcher s(p, host, opts);
  s.place(0);
  return s.found;
}

bool verify_occurrence(const TopologicalCrossingPattern& p,
                       const CombinatorialDrawing& host,
                       const PartiallyPredrawnGraph& context,
                       const OccurrenceWitness& w, const OccursOptions& opts) {
  if (opts.validate_host) check_host(host, context);
  if (opts.orientation_sensitive && w.reflected) return false;
  const Graph& g = p.pattern_graph;
  if (static_cast<int>(w.vertex_map.size()) != g.n()) return false;
  Images im;
  im.vimg.assign(g.n(), -1);
  im.epath.assign(g.m(), {});
  std::vector<char> used_v(host.pg.n(), 0), used_e(host.pg.m(), 0);
  for (const auto& [pid, hid] : w.vertex_map) {
    if (!g.has_vertex(pid) || !host.pg.has_vertex(hid)) return false;
    int u = host.pg.index_of(hid);
    if (used_v[u]) return false;
    used_v[u] = 1;
    im.vimg[g.index_of(pid)] = u;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!vertex_compatible(p, host, v, im.vimg[v])) return false;
  for (const auto& [e, path] : w.ep_paths)
    if (e < 0 || e >= g.m() || !p.ep[e]) return false;
  for (int e = 0; e < g.m(); ++e) {
    auto [pu, pv] = g.edge(e);
    int a = im.vimg[pu], b = im.vimg[pv];
    if (!p.ep[e]) {
      auto he = host.pg.edge_index(a, b);
      if (!he || used_e[*he]) return false;
      if (p.ephi[e] && !host.gamma_e[*he]) return false;
      used_e[*he] = 1;
      im.epath[e] = {a, b};
      continue;
    }
    auto it = w.ep_paths.find(e);
    if (it == w.ep_paths.end() || it->second.size() < 2) return false;
    std::vector<int> path;
    for (const auto& id : it->second) {
      if (!host.pg.has_vertex(id)) return false;
      path.push_back(host.pg.index_of(id));
    }
    if (path.front() == b && path.back() == a)
      std::reverse(path.begin(), path.end());
    if (path.front() != a || path.back() != b) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      auto he = host.pg.edge_index(path[i], path[i + 1]);
      if (!he || used_e[*he]) return false;
      if (!pedge_compatible(p, host, e, *he)) return false;
      used_e[*he] = 1;
    }
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      int x = path[i];
      if (used_v[x] || !interior_compatible(p, host, x, e)) return false;
      used_v[x] = 1;
      int prev = *host.pg.edge_index(path[i - 1], x);
      int next = *host.pg.edge_index(x, path[i + 1]);
      if (!straight_at(host, x, prev, next)) return false;
    }
    im.epath[e] = std::move(path);
  }
  if (!straight_vertices_ok(p, host, im)) return false;
  if (!pi_realized(p, host, im, w.reflected)) return false;
  return canonical_rotations(p, host, im) == w.realization_rotations;
}

bool any_occurs(const PatternSet& ps, const CombinatorialDrawing& host,
                const PartiallyPredrawnGraph& context,
                const OccursOptions& opts) {
  if (opts.validate_host) check_host(host, context);
  OccursOptions o = opts;
  o.validate_host = false;
  for (const auto& p : ps.patterns)
    if (occurs(p, host, context, o)) return true;
  return false;
}

}  // namespace crosskit
