#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace crosskit {

using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", "p/q" with arbitrary-precision integers. Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Canonical "p/q" (or "p" when q == 1), matching parse_rat round-trip.
std::string format_rat(const Rat& r);

// Largest integer <= sqrt(n). Requires n >= 0.
Int isqrt(const Int& n);

// Smallest integer s with s*s >= n. Requires n >= 0.
Int isqrt_ceil(const Int& n);

// ceil(m^(15/2)) for integer m >= 1, exact.
Int pow_7_5_ceil(const Int& m);

inline Int floor_int(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_int(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace crosskit
