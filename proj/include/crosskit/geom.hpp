#pragma once

#include "crosskit/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace crosskit {

struct Pt {
  Rat x, y;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
  Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
  Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
};

// Lexicographic, for canonical sorting of exact points.
bool lex_less(const Pt& a, const Pt& b);

Rat cross(const Pt& o, const Pt& a, const Pt& b);
Rat dot(const Pt& o, const Pt& a, const Pt& b);

// +1 left turn, -1 right turn, 0 collinear.
int orient(const Pt& a, const Pt& b, const Pt& c);

// p on the closed segment [a,b]?
bool on_segment(const Pt& a, const Pt& b, const Pt& p);
// p strictly inside (a,b)?
bool strictly_inside_segment(const Pt& a, const Pt& b, const Pt& p);

enum class SegRel { Disjoint, Point, Overlap };

struct SegIntersection {
  SegRel rel = SegRel::Disjoint;
  Pt point;        // valid when rel == Point
  bool proper = false;  // interior of both segments
};

// Exact intersection of closed segments [a,b] and [c,d].
SegIntersection intersect_segments(const Pt& a, const Pt& b, const Pt& c,
                                   const Pt& d);

// CCW angular order of direction vectors around the origin, starting from
// the +x axis. Total order on nonzero vectors pointing in distinct
// directions; equal-direction vectors compare equal (returns 0).
int angle_cmp(const Pt& u, const Pt& v);

// Twice the signed area of the closed polygon (positive = CCW).
Rat signed_area2(const std::vector<Pt>& poly);

// Winding number of closed polygon around p; p must avoid the boundary.
int winding_number(const std::vector<Pt>& poly, const Pt& p);

// Is p strictly inside the closed polygonal curve (nonzero winding)?
bool point_in_polygon(const std::vector<Pt>& poly, const Pt& p);

// Squared euclidean distance.
Rat dist2(const Pt& a, const Pt& b);

// Parameter t in [0,1] with p = a + t*(b-a); requires p on segment [a,b],
// a != b.
Rat segment_param(const Pt& a, const Pt& b, const Pt& p);

}  // namespace crosskit
