#include "crosskit/solver.hpp"

#include "crosskit/inserter.hpp"
#include "crosskit/json_io.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>

namespace crosskit {

bool abstractly_planar(const Graph& g) {
  if (g.n() >= 3 && g.m() > 3 * g.n() - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.n());
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// gives predrawn crossing vertices ids that stay clear of the full graph
CombinatorialDrawing relabel_crossings(CombinatorialDrawing cd, const Graph& g) {
  bool clash = false;
  for (int v = 0; v < cd.pg.n(); ++v)
    if (cd.kind[v] == VKind::Crossing && g.has_vertex(cd.pg.id_of(v))) clash = true;
  if (!clash) return cd;
  std::string prefix = "x";
  auto bad = [&](const std::string& p) {
    for (int v = 0; v < cd.pg.n(); ++v) {
      const std::string& id = cd.pg.id_of(v);
      if (cd.kind[v] == VKind::Crossing) continue;
      if (id.rfind(p, 0) == 0) return true;
    }
    for (const std::string& id : g.ids())
      if (id.rfind(p, 0) == 0) return true;
    return false;
  };
  while (bad(prefix)) prefix += "x";
  Graph npg;
  int counter = 0;
  for (int v = 0; v < cd.pg.n(); ++v) {
    if (cd.kind[v] == VKind::Crossing)
      npg.add_vertex(prefix + std::to_string(counter++));
    else
      npg.add_vertex(cd.pg.id_of(v));
  }
  npg.vertex_colors = cd.pg.vertex_colors;
  for (const auto& [a, b] : cd.pg.edges()) npg.add_edge(a, b);
  cd.pg = std::move(npg);
  return cd;
}

struct HostSkeleton {
  Graph pg;
  std::vector<VKind> kind;
  std::vector<char> vertex_seeded, edge_seeded;
  std::vector<std::vector<int>> rot0;
  std::vector<FaceRec> faces0;
  int outer0 = 0;
  std::vector<int> insert_order;
  std::vector<int> pedge_orig;  // host edge -> full-graph edge
  CombinatorialDrawing gamma;   // normalized predrawing
  std::vector<int> gamma_e_host;  // gamma pg edge -> host edge
};

// edges with an endpoint already present go first so components grow
// connectedly; that keeps the enumeration duplicate-free on connected hosts
std::vector<int> connected_order(const Graph& g, std::vector<int> pending,
                                 std::vector<char> present) {
  std::vector<int> order;
  while (!pending.empty()) {
    size_t pick = 0;
    bool found = false;
    for (size_t i = 0; i < pending.size(); ++i) {
      auto [u, v] = g.edge(pending[i]);
      if (present[u] || present[v]) {
        pick = i;
        found = true;
        break;
      }
    }
    if (!found) pick = 0;
    int e = pending[pick];
    pending.erase(pending.begin() + pick);
    order.push_back(e);
    present[g.edge(e).first] = present[g.edge(e).second] = 1;
  }
  return order;
}

HostSkeleton build_host(const PartiallyPredrawnGraph& ppg) {
  const Graph& g = ppg.graph;
  HostSkeleton hs;
  hs.gamma = relabel_crossings(ensure_predrawing(ppg), g);
  const CombinatorialDrawing& cd = hs.gamma;

  for (int v = 0; v < cd.orig.n(); ++v)
    if (!g.has_vertex(cd.orig.id_of(v)))
      throw CrosskitError("InvalidPredrawing", "predrawn vertex not in graph: " + cd.orig.id_of(v));
  for (const auto& [a, b] : cd.orig.edges()) {
    int u = g.index_of(cd.orig.id_of(a));
    int v = g.index_of(cd.orig.id_of(b));
    if (!g.has_edge(u, v))
      throw CrosskitError("InvalidPredrawing", "predrawn edge not in graph: " + cd.orig.id_of(a) +
                                                   "-" + cd.orig.id_of(b));
  }

  for (int v = 0; v < g.n(); ++v) {
    hs.pg.add_vertex(g.id_of(v));
    hs.kind.push_back(VKind::Real);
    auto it = g.vertex_colors.find(v);
    if (it != g.vertex_colors.end()) hs.pg.vertex_colors[v] = it->second;
  }
  std::vector<int> cd2host(cd.pg.n(), -1);
  for (int v = 0; v < cd.pg.n(); ++v) {
    if (cd.kind[v] == VKind::Crossing) {
      cd2host[v] = hs.pg.add_vertex(cd.pg.id_of(v));
      hs.kind.push_back(VKind::Crossing);
    } else {
      cd2host[v] = hs.pg.index_of(cd.pg.id_of(v));
    }
    auto it = cd.vcolor.find(v);
    if (it != cd.vcolor.end()) hs.pg.vertex_colors[cd2host[v]] = it->second;
  }

  hs.gamma_e_host.resize(cd.pg.m());
  for (int e = 0; e < cd.pg.m(); ++e) {
    auto [a, b] = cd.pg.edge(e);
    int he = hs.pg.add_edge(cd2host[a], cd2host[b]);
    hs.gamma_e_host[e] = he;
    int sub = cd.pedge_orig[e];
    auto [sa, sb] = cd.orig.edge(sub);
    int gu = g.index_of(cd.orig.id_of(sa));
    int gv = g.index_of(cd.orig.id_of(sb));
    hs.pedge_orig.push_back(*g.edge_index(gu, gv));
  }

  auto is_predrawn = [&](int ge) {
    auto [u, v] = g.edge(ge);
    if (!cd.orig.has_vertex(g.id_of(u)) || !cd.orig.has_vertex(g.id_of(v))) return false;
    return cd.orig.edge_index(cd.orig.index_of(g.id_of(u)), cd.orig.index_of(g.id_of(v)))
        .has_value();
  };
  std::vector<int> pending;
  for (int ge = 0; ge < g.m(); ++ge) {
    if (is_predrawn(ge)) continue;
    auto [u, v] = g.edge(ge);
    int he = hs.pg.add_edge(g.id_of(u), g.id_of(v));
    hs.pedge_orig.push_back(ge);
    pending.push_back(he);
  }

  hs.vertex_seeded.assign(hs.pg.n(), 0);
  hs.edge_seeded.assign(hs.pg.m(), 0);
  for (int v = 0; v < cd.pg.n(); ++v) hs.vertex_seeded[cd2host[v]] = 1;
  for (int he : hs.gamma_e_host) hs.edge_seeded[he] = 1;

  auto map_dart = [&](int d) {
    int e = dart_edge(d);
    int tail = cd2host[dart_tail(cd.pg, d)];
    return dart_from(hs.pg, hs.gamma_e_host[e], tail);
  };
  hs.rot0.assign(hs.pg.n(), {});
  for (int v = 0; v < cd.pg.n(); ++v)
    for (int d : cd.rot[v]) hs.rot0[cd2host[v]].push_back(map_dart(d));
  for (const FaceRec& f : cd.faces) {
    FaceRec nf;
    for (const auto& w : f.walks) {
      std::vector<int> nw;
      nw.reserve(w.size());
      for (int d : w) nw.push_back(map_dart(d));
      nf.walks.push_back(std::move(nw));
    }
    for (int iv : f.isolated) nf.isolated.push_back(cd2host[iv]);
    hs.faces0.push_back(std::move(nf));
  }
  hs.outer0 = cd.outer;

  hs.insert_order = connected_order(hs.pg, pending, hs.vertex_seeded);
  return hs;
}

CombinatorialDrawing assemble_extension(const PartiallyPredrawnGraph& ppg, const HostSkeleton& hs,
                                        const EmbeddingView& view) {
  const Graph& g = ppg.graph;
  const CombinatorialDrawing& cd = hs.gamma;
  CombinatorialDrawing out;
  out.pg = hs.pg;
  out.kind = hs.kind;
  out.rot = view.rot;
  out.faces = view.faces;
  out.outer = view.outer;
  out.orig = g;
  out.vmap.assign(out.pg.n(), -1);
  for (int v = 0; v < out.pg.n(); ++v)
    if (out.kind[v] == VKind::Real) out.vmap[v] = g.index_of(out.pg.id_of(v));
  out.pedge_orig = hs.pedge_orig;
  out.backmap.assign(g.m(), {});
  for (int sub = 0; sub < cd.orig.m(); ++sub) {
    auto [sa, sb] = cd.orig.edge(sub);
    int gu = g.index_of(cd.orig.id_of(sa));
    int gv = g.index_of(cd.orig.id_of(sb));
    int ge = *g.edge_index(gu, gv);
    std::vector<int> path;
    path.reserve(cd.backmap[sub].size());
    for (int pe : cd.backmap[sub]) path.push_back(hs.gamma_e_host[pe]);
    if (g.edge(ge).first != gu) std::reverse(path.begin(), path.end());
    out.backmap[ge] = std::move(path);
  }
  for (int he = 0; he < hs.pg.m(); ++he)
    if (!hs.edge_seeded[he]) out.backmap[hs.pedge_orig[he]] = {he};
  out.gamma_v.assign(hs.vertex_seeded.begin(), hs.vertex_seeded.end());
  out.gamma_e.assign(hs.edge_seeded.begin(), hs.edge_seeded.end());
  out.vcolor.clear();
  for (const auto& [v, c] : hs.pg.vertex_colors) out.vcolor[v] = c;
  out.has_geometry = false;
  return out;
}

}  // namespace

namespace {

bool enumerate_on_host(const PartiallyPredrawnGraph& ppg, const HostSkeleton& hs, long long budget,
                       const std::function<bool(const CombinatorialDrawing&)>& cb) {
  InsertTask task;
  task.pg = hs.pg;
  task.rot0 = hs.rot0;
  task.faces0 = hs.faces0;
  task.outer0 = hs.outer0;
  task.edge_seeded = hs.edge_seeded;
  task.vertex_seeded = hs.vertex_seeded;
  task.insert_order = hs.insert_order;
  task.budget = budget;
  return enumerate_plane_extensions(
      task, [&](const EmbeddingView& view) { return cb(assemble_extension(ppg, hs, view)); });
}

}  // namespace

bool enumerate_ppd_extensions(const PartiallyPredrawnGraph& ppg, const ExtendOptions& opt,
                              const std::function<bool(const CombinatorialDrawing&)>& cb) {
  HostSkeleton hs = build_host(ppg);
  return enumerate_on_host(ppg, hs, opt.budget, cb);
}

std::optional<CombinatorialDrawing> ppd_planar(const PartiallyPredrawnGraph& ppg,
                                               const ExtendOptions& opt) {
  HostSkeleton hs = build_host(ppg);
  if (!abstractly_planar(hs.pg)) return std::nullopt;
  std::optional<CombinatorialDrawing> result;
  enumerate_on_host(ppg, hs, opt.budget, [&](const CombinatorialDrawing& cd) {
    result = cd;
    return true;
  });
  return result;
}

}  // namespace crosskit
