#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crosskit {

// Simple undirected graph. Vertices carry caller-chosen string ids; edges are
// stored once with endpoints normalized to index order.
class Graph {
 public:
  Graph() = default;

  std::map<int, std::string> vertex_colors;

  int add_vertex(const std::string& id);
  int ensure_vertex(const std::string& id);
  // Returns the edge index; throws on self-loops and duplicates.
  int add_edge(const std::string& u, const std::string& v);
  int add_edge(int u, int v);

  bool has_vertex(const std::string& id) const { return idx_.count(id) != 0; }
  bool has_edge(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;

  int n() const { return static_cast<int>(ids_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  int index_of(const std::string& id) const;
  const std::string& id_of(int v) const { return ids_.at(v); }
  const std::pair<int, int>& edge(int e) const { return edges_.at(e); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& ids() const { return ids_; }

  const std::vector<int>& incident(int v) const { return inc_.at(v); }
  int degree(int v) const { return static_cast<int>(inc_.at(v).size()); }
  int other_end(int e, int v) const;

  std::vector<int> component_of(int v) const;
  std::vector<std::vector<int>> components() const;

  bool operator==(const Graph& o) const {
    return ids_ == o.ids_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> idx_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::pair<int, int>, int> eidx_;
  std::vector<std::vector<int>> inc_;
};

// dart = 2*edge + 0 (from edge.first) or + 1 (from edge.second)
inline int dart_of(int edge, bool from_second) { return 2 * edge + (from_second ? 1 : 0); }
inline int dart_edge(int d) { return d / 2; }
inline int dart_reverse(int d) { return d ^ 1; }

int dart_tail(const Graph& g, int d);
int dart_head(const Graph& g, int d);
int dart_from(const Graph& g, int e, int tail);

}  // namespace crosskit
