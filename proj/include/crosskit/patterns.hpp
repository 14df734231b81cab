#pragma once

#include "crosskit/drawing.hpp"
#include "crosskit/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crosskit {

// Forbidden substructure of a planarized drawing. Vertices split into
// real/crossing kind (vc) and instance-predrawn or not (vphi); edges split
// into plain ones matched by single planarization edges and contracted ones
// (ep) matched by paths of crossing vertices, plus the instance-predrawn
// flag (ephi). pi is a drawing of a subgraph of the pattern whose embedded
// behaviour an occurrence has to reproduce.
struct TopologicalCrossingPattern {
  Graph pattern_graph;
  std::vector<char> vc;     // per vertex: matches a crossing vertex
  std::vector<char> vphi;   // per vertex: matches a predrawn-part vertex
  std::vector<char> ep;     // per edge: contracted, realized by a path
  std::vector<char> ephi;   // per edge: matches a predrawn-part edge
  std::map<int, std::string> vertex_colors;  // partial
  std::map<int, std::string> edge_colors;    // partial, contracted edges
  CombinatorialDrawing pi;       // predrawn subgraph of the pattern
  bool pi_outer_pinned = false;  // pi.outer constrains the host outer face

  int pi_degree(int v) const;          // degree of a pattern vertex inside pi
  bool pi_has_vertex(int v) const;
  std::optional<int> pi_edge(int e) const;  // pi edge index of a pattern edge
};

struct PatternSet {
  std::vector<TopologicalCrossingPattern> patterns;
  // if set, is_k_contraction_safe holds at this level
  std::optional<int> declared_safety_level;
};

// Self-certifying description of one pattern occurrence inside a host
// planarization. vertex_map sends pattern vertex ids to host pg vertex ids;
// contracted edges carry their full host vertex path (endpoints included);
// realization_rotations lists, per predrawn pattern vertex, the image heads
// of its pi darts in host rotation order.
struct OccurrenceWitness {
  std::map<std::string, std::string> vertex_map;
  std::map<int, std::vector<std::string>> ep_paths;
  std::map<std::string, std::vector<std::string>> realization_rotations;
  bool reflected = false;
};

struct OccursOptions {
  bool orientation_sensitive = false;  // forbid mirror-image matches
  bool validate_host = true;           // cross-check host flags against context
  long long budget = 10'000'000;
};

// Structural invariants; empty report means the pattern is well-formed.
// Codes: NonPlanarPattern, EphiEndpointsViolation, ComponentWithoutVC,
// PiComponentOutsideNVC, SideSpecDegreeViolation, CrossingLocalityViolation,
// plus PiInconsistent for malformed predrawing data.
ValidationReport validate_pattern(const TopologicalCrossingPattern& p);

// Isomorphism respecting both vertex partitions, both edge partitions,
// colors, and the predrawing up to sphere equivalence and reflection.
bool pattern_isomorphic(const TopologicalCrossingPattern& a,
                        const TopologicalCrossingPattern& b);

// First occurrence of p inside the host planarization in canonical search
// order, or nullopt. Throws InvalidHost when the host flags contradict the
// context and BudgetExceeded when the search budget runs out.
std::optional<OccurrenceWitness> occurs(const TopologicalCrossingPattern& p,
                                        const CombinatorialDrawing& host,
                                        const PartiallyPredrawnGraph& context,
                                        const OccursOptions& opts = {});

// Re-checks a witness without searching.
bool verify_occurrence(const TopologicalCrossingPattern& p,
                       const CombinatorialDrawing& host,
                       const PartiallyPredrawnGraph& context,
                       const OccurrenceWitness& w,
                       const OccursOptions& opts = {});

bool any_occurs(const PatternSet& ps, const CombinatorialDrawing& host,
                const PartiallyPredrawnGraph& context,
                const OccursOptions& opts = {});

// Marks every crossing of the predrawn part with a color so patterns can tie
// contracted-edge interiors to the predrawing.
void color_predrawn_crossings(CombinatorialDrawing& cd,
                              const std::string& color = "blue");

// `.pat.json` encoding.
Json pattern_to_json(const TopologicalCrossingPattern& p);
TopologicalCrossingPattern pattern_from_json(const Json& j);
Json pattern_set_to_json(const PatternSet& s);
PatternSet pattern_set_from_json(const Json& j);

// Both crossing configurations a fan-planar drawing must avoid, the two
// variants where the crossing edges also cross each other, and all ways of
// subdividing their edges with up to k extra crossing vertices.
PatternSet gen_fanplanar_patterns(int k);

// Arrangements of two or three cycle-with-pendant obstructions whose pendant
// sides are pairwise disjoint, over all cycle shapes with at most k crossing
// vertices in total. with_predrawing additionally recolors crossing-crossing
// cycle edges blue (contracted, matched by predrawn crossing paths) in every
// possible way and closes the family under bounded subdivision of blue edges
// with pairwise identifications.
PatternSet gen_pseudolinear_patterns(int k, bool with_predrawing);

// Path of c+1 crossing vertices, plain edges; matches a run of c+1
// consecutive crossings along a single edge.
TopologicalCrossingPattern path_crossing_pattern(int c);

// Whether every subdivision of contracted edges by new unpredrawn crossing
// vertices, followed by pairwise identifications that keep at most k such
// vertices, lands on a member of the set (up to pattern isomorphism).
// Throws SizeLimitExceeded past the budget or on members over 40 vertices.
bool is_k_contraction_safe(const PatternSet& s, int k,
                           long long budget = 5'000'000);

enum class DrawingStyle { FanPlanar, Pseudolinear };

// Decides the style directly on the drawing, without patterns: fan-planarity
// scans crossing pairs per edge, pseudolinearity intersects the pendant-side
// face sets of every cycle obstruction.
bool check_style_direct(const CombinatorialDrawing& cd, DrawingStyle style,
                        long long budget = 10'000'000);

// Face sets that keep every cycle obstruction's pendants pointing at them;
// the drawing is pseudolinear iff some face survives.
std::vector<char> pseudolinear_safe_faces(const CombinatorialDrawing& cd,
                                          long long budget = 10'000'000);

}  // namespace crosskit
