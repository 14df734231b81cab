#include "crosskit/geom.hpp"

namespace crosskit {

bool lex_less(const Pt& a, const Pt& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat dot(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

int orient(const Pt& a, const Pt& b, const Pt& c) { return sgn(cross(a, b, c)); }

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (orient(a, b, p) != 0) return false;
  return sgn(dot(p, a, b)) <= 0;
}

bool strictly_inside_segment(const Pt& a, const Pt& b, const Pt& p) {
  return on_segment(a, b, p) && p != a && p != b;
}

SegIntersection intersect_segments(const Pt& a, const Pt& b, const Pt& c,
                                   const Pt& d) {
  SegIntersection out;
  Rat d1 = cross(c, d, a);
  Rat d2 = cross(c, d, b);
  Rat d3 = cross(a, b, c);
  Rat d4 = cross(a, b, d);
  int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);

  if (s1 == 0 && s2 == 0) {
    // collinear: project on the dominant axis
    auto key = [&](const Pt& p) -> Rat {
      Pt ab = b - a;
      if (sgn(ab.x) != 0) return p.x;
      return p.y;
    };
    Pt lo1 = a, hi1 = b, lo2 = c, hi2 = d;
    if (key(hi1) < key(lo1)) std::swap(lo1, hi1);
    if (key(hi2) < key(lo2)) std::swap(lo2, hi2);
    const Pt& lo = key(lo1) < key(lo2) ? lo2 : lo1;
    const Pt& hi = key(hi1) < key(hi2) ? hi1 : hi2;
    if (key(lo) > key(hi)) return out;
    if (key(lo) == key(hi)) {
      out.rel = SegRel::Point;
      out.point = lo;
      return out;
    }
    out.rel = SegRel::Overlap;
    return out;
  }

  if (((s1 < 0 && s2 < 0) || (s1 > 0 && s2 > 0)) ||
      ((s3 < 0 && s4 < 0) || (s3 > 0 && s4 > 0)))
    return out;

  // At least one of the cross products separates unless they touch/cross.
  if (s1 != s2 && s3 != s4 && (s1 || s2) && (s3 || s4)) {
    Rat t = d3 / (d3 - d4);  // position of the hit along [c,d]
    out.rel = SegRel::Point;
    out.point = {c.x + t * (d.x - c.x), c.y + t * (d.y - c.y)};
    out.proper = (s1 != 0 && s2 != 0 && s3 != 0 && s4 != 0);
    return out;
  }

  // Endpoint lying on the other segment.
  for (const Pt* p : {&a, &b}) {
    if (on_segment(c, d, *p)) {
      out.rel = SegRel::Point;
      out.point = *p;
      return out;
    }
  }
  for (const Pt* p : {&c, &d}) {
    if (on_segment(a, b, *p)) {
      out.rel = SegRel::Point;
      out.point = *p;
      return out;
    }
  }
  return out;
}

namespace {

int half_plane(const Pt& v) {
  // 0: +x axis, 1: open upper half, 2: -x axis, 3: open lower half
  int sy = sgn(v.y);
  if (sy > 0) return 1;
  if (sy < 0) return 3;
  return sgn(v.x) >= 0 ? 0 : 2;
}

}  // namespace

int angle_cmp(const Pt& u, const Pt& v) {
  int hu = half_plane(u), hv = half_plane(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  Rat cr = u.x * v.y - u.y * v.x;
  int s = sgn(cr);
  if (s > 0) return -1;  // u before v going CCW
  if (s < 0) return 1;
  return 0;
}

Rat signed_area2(const std::vector<Pt>& poly) {
  Rat a = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

int winding_number(const std::vector<Pt>& poly, const Pt& p) {
  int wn = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orient(a, b, p) > 0) ++wn;
    } else {
      if (b.y <= p.y && orient(a, b, p) < 0) --wn;
    }
  }
  return wn;
}

bool point_in_polygon(const std::vector<Pt>& poly, const Pt& p) {
  return winding_number(poly, p) != 0;
}

Rat dist2(const Pt& a, const Pt& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

Rat segment_param(const Pt& a, const Pt& b, const Pt& p) {
  Pt ab = b - a;
  if (sgn(ab.x) != 0) return (p.x - a.x) / ab.x;
  return (p.y - a.y) / ab.y;
}

}  // namespace crosskit
