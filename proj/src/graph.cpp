#include "crosskit/graph.hpp"

namespace crosskit {

int Graph::add_vertex(const std::string& id) {
  if (idx_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
  int v = n();
  ids_.push_back(id);
  idx_[id] = v;
  inc_.emplace_back();
  return v;
}

int Graph::ensure_vertex(const std::string& id) {
  auto it = idx_.find(id);
  if (it != idx_.end()) return it->second;
  return add_vertex(id);
}

int Graph::add_edge(const std::string& u, const std::string& v) {
  return add_edge(index_of(u), index_of(v));
}

int Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop at " + ids_.at(u));
  if (u > v) std::swap(u, v);
  if (eidx_.count({u, v}))
    throw std::invalid_argument("duplicate edge " + ids_.at(u) + "-" + ids_.at(v));
  int e = m();
  edges_.push_back({u, v});
  eidx_[{u, v}] = e;
  inc_[u].push_back(e);
  inc_[v].push_back(e);
  return e;
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = eidx_.find({u, v});
  if (it == eidx_.end()) return std::nullopt;
  return it->second;
}

int Graph::index_of(const std::string& id) const {
  auto it = idx_.find(id);
  if (it == idx_.end()) throw std::out_of_range("no vertex " + id);
  return it->second;
}

int Graph::other_end(int e, int v) const {
  auto [a, b] = edges_.at(e);
  if (v == a) return b;
  if (v == b) return a;
  throw std::invalid_argument("vertex not on edge");
}

std::vector<int> Graph::component_of(int v) const {
  std::vector<int> comp, stack{v};
  std::vector<char> seen(n(), 0);
  seen[v] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    comp.push_back(u);
    for (int e : inc_[u]) {
      int w = other_end(e, u);
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return comp;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n(), 0);
  for (int v = 0; v < n(); ++v) {
    if (seen[v]) continue;
    auto comp = component_of(v);
    for (int u : comp) seen[u] = 1;
    out.push_back(std::move(comp));
  }
  return out;
}

int dart_tail(const Graph& g, int d) {
  auto [a, b] = g.edge(dart_edge(d));
  return (d & 1) ? b : a;
}

int dart_head(const Graph& g, int d) {
  auto [a, b] = g.edge(dart_edge(d));
  return (d & 1) ? a : b;
}

int dart_from(const Graph& g, int e, int tail) {
  auto [a, b] = g.edge(e);
  if (tail == a) return dart_of(e, false);
  if (tail == b) return dart_of(e, true);
  throw std::invalid_argument("tail not on edge");
}

}  // namespace crosskit
