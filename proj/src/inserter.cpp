#include "crosskit/inserter.hpp"

#include <algorithm>

namespace crosskit {

namespace {

struct St {
  std::vector<std::vector<int>> rot;
  std::vector<FaceRec> faces;
  int outer = 0;
  std::vector<char> placed;
};

// corner of vertex x in face f: either an occurrence of x as the tail of
// walk dart faces[f].walks[w][pos], or x sitting isolated in f (w == -1)
struct Corner {
  int face = -1;
  int walk = -1;
  int pos = -1;
};

void collect_corners(const St& st, const Graph& pg, int x, std::vector<Corner>& out) {
  out.clear();
  for (int f = 0; f < (int)st.faces.size(); ++f) {
    const auto& fc = st.faces[f];
    for (int w = 0; w < (int)fc.walks.size(); ++w) {
      const auto& wd = fc.walks[w];
      for (int p = 0; p < (int)wd.size(); ++p)
        if (dart_tail(pg, wd[p]) == x) out.push_back({f, w, p});
    }
    for (int iv : fc.isolated)
      if (iv == x) out.push_back({f, -1, -1});
  }
}

void rot_insert_after(std::vector<int>& r, int after_dart, int new_dart) {
  auto it = std::find(r.begin(), r.end(), after_dart);
  r.insert(it + 1, new_dart);
}

std::vector<int> cyclic_slice(const std::vector<int>& w, int from, int upto) {
  // darts w[from], w[from+1], ..., w[upto-1] cyclically (full cycle if from == upto
  // would be empty; callers never pass that for the full-cycle case, they use
  // cyclic_from instead)
  std::vector<int> out;
  int n = (int)w.size();
  for (int i = from; i != upto; i = (i + 1) % n) out.push_back(w[i]);
  return out;
}

std::vector<int> cyclic_from(const std::vector<int>& w, int from) {
  std::vector<int> out;
  int n = (int)w.size();
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(w[(from + i) % n]);
  return out;
}

bool alternation_ok(const St& st, const InsertTask& task, int v) {
  auto it = task.cross_pairs.find(v);
  if (it == task.cross_pairs.end()) return true;
  if ((int)st.rot[v].size() != task.pg.degree(v)) return true;  // not complete yet
  if (st.rot[v].size() != 4) return false;
  const auto& q = it->second;
  auto side = [&](int d) {
    int e = dart_edge(d);
    if (e == q[0] || e == q[1]) return 0;
    if (e == q[2] || e == q[3]) return 1;
    return 2;
  };
  int s0 = side(st.rot[v][0]), s1 = side(st.rot[v][1]);
  int s2 = side(st.rot[v][2]), s3 = side(st.rot[v][3]);
  if (s0 == 2 || s1 == 2 || s2 == 2 || s3 == 2) return false;
  return s0 == s2 && s1 == s3 && s0 != s1;
}

class Enumerator {
 public:
  Enumerator(const InsertTask& task, const std::function<bool(const EmbeddingView&)>& cb)
      : task_(task), cb_(cb), budget_(task.budget) {}

  bool run() {
    St st;
    st.rot.assign(task_.pg.n(), {});
    st.placed.assign(task_.pg.n(), 0);
    for (int v = 0; v < task_.pg.n(); ++v) {
      if (v < (int)task_.rot0.size()) st.rot[v] = task_.rot0[v];
      st.placed[v] = v < (int)task_.vertex_seeded.size() ? task_.vertex_seeded[v] : 0;
    }
    st.faces = task_.faces0;
    st.outer = task_.outer0;
    if (st.faces.empty()) {
      st.faces.push_back({});
      st.outer = 0;
    }
    return rec(st, 0);
  }

 private:
  const InsertTask& task_;
  const std::function<bool(const EmbeddingView&)>& cb_;
  long long budget_;

  bool spend() {
    if (--budget_ < 0) throw CrosskitError("BudgetExceeded", "embedding search budget exhausted");
    return true;
  }

  bool finish(St& st) {
    // remaining degree-0 vertices go into some face, tried in index order
    int loose = -1;
    for (int v = 0; v < task_.pg.n(); ++v)
      if (!st.placed[v]) {
        loose = v;
        break;
      }
    if (loose < 0) {
      EmbeddingView view{st.rot, st.faces, st.outer};
      return cb_(view);
    }
    for (int f = 0; f < (int)st.faces.size(); ++f) {
      spend();
      St nx = st;
      nx.faces[f].isolated.push_back(loose);
      nx.placed[loose] = 1;
      if (finish(nx)) return true;
    }
    return false;
  }

  // distribute the leftover walks/isolated of a split face over the two parts
  bool split_distribute(St base, int fidx, FaceRec& fa, FaceRec& fb,
                        const std::vector<std::vector<int>>& rest_walks,
                        const std::vector<int>& rest_iso, bool was_outer, int pos) {
    size_t t = rest_walks.size() + rest_iso.size();
    for (size_t mask = 0; mask < (size_t{1} << t); ++mask) {
      FaceRec A = fa, B = fb;
      for (size_t i = 0; i < rest_walks.size(); ++i)
        ((mask >> i) & 1 ? B : A).walks.push_back(rest_walks[i]);
      for (size_t i = 0; i < rest_iso.size(); ++i)
        ((mask >> (rest_walks.size() + i)) & 1 ? B : A).isolated.push_back(rest_iso[i]);
      for (int which = 0; which < (was_outer ? 2 : 1); ++which) {
        spend();
        St nx = base;
        nx.faces[fidx] = A;
        nx.faces.push_back(B);
        if (was_outer) nx.outer = which == 0 ? fidx : (int)nx.faces.size() - 1;
        if (rec_after_insert(nx, pos)) return true;
      }
    }
    return false;
  }

  bool rec_after_insert(St& st, int pos) {
    int e = task_.insert_order[pos];
    if (!alternation_ok(st, task_, task_.pg.edge(e).first)) return false;
    if (!alternation_ok(st, task_, task_.pg.edge(e).second)) return false;
    return rec(st, pos + 1);
  }

  bool rec(St& st, int pos) {
    spend();
    if (pos >= (int)task_.insert_order.size()) return finish(st);
    int e = task_.insert_order[pos];
    auto [u, v] = task_.pg.edge(e);
    if (!st.placed[u] && st.placed[v]) std::swap(u, v);
    int duv = dart_from(task_.pg, e, u);
    int dvu = dart_reverse(duv);

    if (!st.placed[u] && !st.placed[v]) {
      // fresh 2-vertex component, goes inside any face
      for (int f = 0; f < (int)st.faces.size(); ++f) {
        spend();
        St nx = st;
        nx.faces[f].walks.push_back({duv, dvu});
        nx.rot[u] = {duv};
        nx.rot[v] = {dvu};
        nx.placed[u] = nx.placed[v] = 1;
        if (rec_after_insert(nx, pos)) return true;
      }
      return false;
    }

    std::vector<Corner> cu;
    collect_corners(st, task_.pg, u, cu);

    if (!st.placed[v]) {
      // v dangles off an existing corner of u
      for (const Corner& c : cu) {
        spend();
        St nx = st;
        attach_pendant(nx, c, u, v, duv, dvu);
        if (rec_after_insert(nx, pos)) return true;
      }
      return false;
    }

    std::vector<Corner> cv;
    collect_corners(st, task_.pg, v, cv);
    for (const Corner& a : cu) {
      for (const Corner& b : cv) {
        if (a.face != b.face) continue;
        if (a.walk >= 0 && a.walk == b.walk) {
          // chord inside one walk: face splits in two
          St base = st;
          FaceRec& fc = base.faces[a.face];
          const auto& W = fc.walks[a.walk];
          FaceRec fa, fb;
          fa.walks.push_back({});
          fb.walks.push_back({});
          {
            auto& wa = fa.walks[0];
            wa.push_back(duv);
            auto sl = cyclic_slice(W, b.pos, a.pos);
            wa.insert(wa.end(), sl.begin(), sl.end());
            auto& wb = fb.walks[0];
            wb.push_back(dvu);
            auto sl2 = cyclic_slice(W, a.pos, b.pos);
            wb.insert(wb.end(), sl2.begin(), sl2.end());
          }
          rot_insert_after(base.rot[u], W[a.pos], duv);
          rot_insert_after(base.rot[v], W[b.pos], dvu);
          std::vector<std::vector<int>> rest_walks;
          for (int w = 0; w < (int)fc.walks.size(); ++w)
            if (w != a.walk) rest_walks.push_back(fc.walks[w]);
          std::vector<int> rest_iso = fc.isolated;
          bool was_outer = a.face == base.outer;
          if (split_distribute(base, a.face, fa, fb, rest_walks, rest_iso, was_outer, pos))
            return true;
        } else {
          // joins two boundary pieces of the same face: no split
          spend();
          St nx = st;
          merge_in_face(nx, a, b, u, v, duv, dvu);
          if (rec_after_insert(nx, pos)) return true;
        }
      }
    }
    return false;
  }

  void attach_pendant(St& st, const Corner& c, int u, int v, int duv, int dvu) {
    FaceRec& fc = st.faces[c.face];
    st.rot[v] = {dvu};
    st.placed[v] = 1;
    if (c.walk >= 0) {
      auto& W = fc.walks[c.walk];
      std::vector<int> nw;
      nw.push_back(duv);
      nw.push_back(dvu);
      auto tail = cyclic_from(W, c.pos);
      nw.insert(nw.end(), tail.begin(), tail.end());
      rot_insert_after(st.rot[u], W[c.pos], duv);
      W = nw;
    } else {
      fc.isolated.erase(std::find(fc.isolated.begin(), fc.isolated.end(), u));
      fc.walks.push_back({duv, dvu});
      st.rot[u] = {duv};
    }
  }

  void merge_in_face(St& st, const Corner& a, const Corner& b, int u, int v, int duv, int dvu) {
    FaceRec& fc = st.faces[a.face];
    std::vector<int> nw;
    nw.push_back(duv);
    if (b.walk >= 0) {
      auto part = cyclic_from(fc.walks[b.walk], b.pos);
      nw.insert(nw.end(), part.begin(), part.end());
      rot_insert_after(st.rot[v], fc.walks[b.walk][b.pos], dvu);
    } else {
      fc.isolated.erase(std::find(fc.isolated.begin(), fc.isolated.end(), v));
      st.rot[v] = {dvu};
    }
    nw.push_back(dvu);
    if (a.walk >= 0) {
      auto part = cyclic_from(fc.walks[a.walk], a.pos);
      nw.insert(nw.end(), part.begin(), part.end());
      rot_insert_after(st.rot[u], fc.walks[a.walk][a.pos], duv);
    } else {
      fc.isolated.erase(std::find(fc.isolated.begin(), fc.isolated.end(), u));
      st.rot[u] = {duv};
    }
    // remove the consumed walks, larger index first
    std::vector<int> dead;
    if (a.walk >= 0) dead.push_back(a.walk);
    if (b.walk >= 0) dead.push_back(b.walk);
    std::sort(dead.rbegin(), dead.rend());
    for (int w : dead) fc.walks.erase(fc.walks.begin() + w);
    fc.walks.push_back(nw);
  }
};

}  // namespace

bool enumerate_plane_extensions(const InsertTask& task,
                                const std::function<bool(const EmbeddingView&)>& cb) {
  Enumerator en(task, cb);
  return en.run();
}

}  // namespace crosskit
