#pragma once

#include "crosskit/drawing.hpp"

#include <map>
#include <set>
#include <vector>

namespace crosskit::testsup {

struct PtLess {
  bool operator()(const Pt& p, const Pt& q) const { return lex_less(p, q); }
};

// All proper pairwise interior intersection points, found the slow way:
// every segment of every edge against every other, no sweep, no buckets.
std::map<Pt, std::set<int>, PtLess> brute_crossings(const PolylineDrawing& d);

// Crossing number upper-bound decision by abstract planarity over all ways
// of pairing up subdivision points (independent of the solver's search).
bool cr_at_most(const Graph& g, int k);

// Planarity of a simple graph by exhausting rotation systems and counting
// face orbits; independent from any library used by the main code paths.
bool planar_slow(const Graph& g);

// Number of plane drawings of a connected graph: for every rotation system
// realizing the planar face count, each face once as the designated outer
// face. Throws on disconnected input or when the rotation space is too big.
long count_plane_drawings(const Graph& g);

// deterministic random PolylineDrawing generator for property tests
PolylineDrawing random_straight_drawing(unsigned seed, int max_n, int grid);

}  // namespace crosskit::testsup
