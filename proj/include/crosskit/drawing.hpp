#pragma once

#include "crosskit/geom.hpp"
#include "crosskit/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crosskit {

struct CrosskitError : std::runtime_error {
  std::string code;
  CrosskitError(std::string c, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Full geometric drawing of its host graph. Every vertex is placed and every
// edge is a polyline whose first/last points equal the endpoint placements.
struct PolylineDrawing {
  Graph host;
  std::vector<Pt> pos;                      // per vertex
  std::vector<std::vector<Pt>> polylines;   // per edge, includes endpoints

  void set_vertex(int v, const Pt& p);
  // Straight edge helper: polyline = [pos[u], pos[v]].
  int add_straight_edge(const std::string& u, const std::string& v);
};

struct ValidationIssue {
  std::string code;
  std::string detail;
  std::optional<Pt> where;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(const std::string& code) const;
  std::string to_string() const;
};

enum class VKind { Real, Crossing };

// One face of an embedded (possibly disconnected) drawing: boundary walks,
// one per incident component side, plus degree-0 vertices lying inside.
struct FaceRec {
  std::vector<std::vector<int>> walks;  // dart cycles, face on the left
  std::vector<int> isolated;            // vertex indices of degree 0
};

struct CombinatorialDrawing {
  Graph pg;                            // planarization
  std::vector<VKind> kind;             // per pg vertex
  std::vector<std::vector<int>> rot;   // per pg vertex: CCW cycle of out-darts
  std::vector<FaceRec> faces;
  int outer = -1;                      // index into faces

  Graph orig;                          // graph before planarization
  std::vector<int> vmap;               // pg vertex -> orig vertex, -1 at crossings
  std::vector<std::vector<int>> backmap;  // orig edge -> ordered pg edges
  std::vector<int> pedge_orig;         // pg edge -> orig edge
  std::vector<char> gamma_v;           // pg vertex belongs to predrawn part
  std::vector<char> gamma_e;           // pg edge belongs to predrawn part
  std::map<int, std::string> vcolor;   // pg vertex colors

  bool has_geometry = false;
  std::vector<Pt> pos;                     // per pg vertex
  std::vector<std::vector<Pt>> pgeom;      // per pg edge polyline

  int crossing_count() const;
  int face_of_dart(int d) const;          // composite face whose walk holds d
  bool dart_on_some_walk(int d) const;
  std::vector<int> rot_edges(int v) const;  // rotation as edge ids

  // Crossing vertices keyed by original edge pair plus position along each.
  struct CrossingKey {
    int e1, i1, e2, i2;
    auto operator<=>(const CrossingKey&) const = default;
  };
  std::map<int, CrossingKey> crossing_keys() const;
};

struct PartiallyPredrawnGraph {
  Graph graph;
  // Exactly one of the two forms is used; geometric input is planarized on
  // load. Both describe a subgraph of `graph`.
  std::optional<PolylineDrawing> geometric;
  std::optional<CombinatorialDrawing> predrawing;  // combinatorial form

  bool has_predrawing() const { return predrawing.has_value(); }
};

ValidationReport validate_drawing(const PolylineDrawing& d);

// Rotation-system face tracing: returns orbits of the face permutation, face
// kept on the left of each dart. Throws InconsistentRotation.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rot);

// Builds composite faces for a geometric drawing (winding-number containment
// of nested components) and fills faces/outer.
void assemble_faces_geometric(CombinatorialDrawing& cd);

CombinatorialDrawing planarize_geometric(const PolylineDrawing& d);

struct EquivOptions {
  bool reflection_agnostic = true;
  bool sphere = false;  // ignore the designated outer face
};

bool equivalent(const CombinatorialDrawing& a, const CombinatorialDrawing& b,
                const EquivOptions& opts = {});

// Structural invariant check (degree-4 alternation at crossings, face orbit
// consistency, Euler relation, backmap shape).
ValidationReport check_drawing_invariants(const CombinatorialDrawing& cd);

// Two-colors the composite faces by crossing parity with respect to a closed
// walk (set of pg edges each traversed once). faces[outer] need not be 0.
std::vector<int> side_partition(const CombinatorialDrawing& cd,
                                const std::vector<char>& walk_edge);

// Face classes after deleting every pg edge not in keep_edge: two faces fall
// into one class when only deleted edges separate them. Returns a class id
// per composite face; ids are the smallest member face index.
std::vector<int> merged_face_classes(const CombinatorialDrawing& cd,
                                     const std::vector<char>& keep_edge);

// Restriction of a drawing to the predrawn part (gamma flags), as a drawing
// of the original subgraph. Used to compare against the given predrawing.
CombinatorialDrawing restrict_to_gamma(const CombinatorialDrawing& cd);

}  // namespace crosskit
