#include "crosskit/rational.hpp"

#include <cctype>

namespace crosskit {

namespace {

bool valid_int_token(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw std::invalid_argument("bad rational: " + s);
  Rat r(num + "/" + den);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int isqrt_ceil(const Int& n) {
  Int r = isqrt(n);
  if (r * r < n) r += 1;
  return r;
}

Int pow_7_5_ceil(const Int& m) {
  if (m < 1) throw std::invalid_argument("pow_7_5_ceil needs m >= 1");
  Int m15;
  mpz_pow_ui(m15.get_mpz_t(), m.get_mpz_t(), 15);
  return isqrt_ceil(m15);
}

}  // namespace crosskit
