#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace horokit {

// All homology coordinates, solution pairs and framings are exact integers.
// Fibonacci-indexed values overflow 64 bits around index 90 and their squares
// much earlier, so the whole library runs on an arbitrary-precision type.
// Expression templates are off so every operation yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

inline void require_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

// Least non-negative residue, defined for m >= 1.
inline Int mod_floor(const Int& v, const Int& m) {
  if (m < 1) throw std::invalid_argument("mod_floor requires a positive modulus");
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

// g = gcd(a,b) >= 0 together with u,v such that u*a + v*b = g.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
  Int u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (b != 0) {
    Int q = a / b;  // truncated division keeps the identity exact
    Int t;
    t = a - q * b; a = b; b = t;
    t = u0 - q * u1; u0 = u1; u1 = t;
    t = v0 - q * v1; v0 = v1; v1 = t;
  }
  if (a < 0) { a = -a; u0 = -u0; v0 = -v0; }
  return {a, u0, v0};
}

// Inverse of a modulo m (m >= 1, gcd(a,m) = 1).
inline Int mod_inverse(const Int& a, const Int& m) {
  auto [g, u, v] = ext_gcd(a, m);
  (void)v;
  if (g != 1) throw std::invalid_argument("mod_inverse requires gcd(a,m) = 1");
  return mod_floor(u, m);
}

}  // namespace horokit
