#pragma once

#include "horokit/bigint.hpp"

#include <compare>
#include <stdexcept>
#include <vector>

namespace horokit {

// Primitive homology class p*mu + q*lambda on the splitting torus.
// Basis: mu = (1,0), lambda = (0,1) with mu.lambda = +1; lambda bounds the
// compressing disc of the inner handlebody.
struct Curve {
  Int p{0};
  Int q{1};

  Curve() = default;
  Curve(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (gcd(abs(p), abs(q)) != 1)  // gcd(0,0)=0 also rejects the zero class
      throw std::invalid_argument("curve class must be primitive: gcd(|p|,|q|) = 1");
  }

  Curve operator-() const { return Curve(-p, -q); }
  friend bool operator==(const Curve&, const Curve&) = default;
  friend auto operator<=>(const Curve& a, const Curve& b) {
    if (auto c = a.p.compare(b.p); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto c = a.q.compare(b.q);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
};

inline Curve mu() { return Curve(1, 0); }
inline Curve lambda() { return Curve(0, 1); }

// Representative of the unoriented class: p > 0, or (p,q) = (0,1).
inline Curve canonical(const Curve& c) {
  if (c.p < 0 || (c.p == 0 && c.q < 0)) return -c;
  return c;
}

// Algebraic intersection number a.b = a_p*b_q - a_q*b_p.
inline Int intersect(const Curve& a, const Curve& b) { return a.p * b.q - a.q * b.p; }

// Dehn twist along an unoriented curve, with sign +1 (right-handed) or -1.
struct Twist {
  Curve curve;  // stored canonically; the induced map does not see orientation
  int sign{+1};

  Twist() = default;
  Twist(const Curve& c, int s) : curve(canonical(c)), sign(s) { require_sign(s, "twist sign"); }

  Twist inverse() const { return Twist(curve, -sign); }
  friend bool operator==(const Twist&, const Twist&) = default;
};

// tau_c^{sign}(a) = a + sign * (c.a) * c
inline Curve twist_apply(const Twist& t, const Curve& a) {
  Int k = t.sign * intersect(t.curve, a);
  return Curve(a.p + k * t.curve.p, a.q + k * t.curve.q);
}

// 2x2 integer matrix [[a,b],[c,d]] acting on column vectors (p,q).
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  Int det() const { return a * d - b * c; }
  Curve apply(const Curve& v) const { return Curve(a * v.p + b * v.q, c * v.p + d * v.q); }
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 twist_matrix(const Twist& t) {
  const Int& p = t.curve.p;
  const Int& q = t.curve.q;
  Int dpq = t.sign * p * q;
  return Mat2{1 - dpq, t.sign * p * p, -t.sign * q * q, 1 + dpq};
}

// Twists listed in attachment order (level 1 first); the level-1 matrix acts
// first, so the product is M_k * ... * M_1.  Empty input gives the identity.
inline Mat2 monodromy(const std::vector<Twist>& twists) {
  Mat2 m;
  for (const Twist& t : twists) m = twist_matrix(t) * m;
  return m;
}

// The open book on the upper boundary is S^3 iff |lambda . m(lambda)| = 1.
// With m = [[a,b],[c,d]]: m(lambda) = (b,d) and lambda . m(lambda) = -b.
inline bool gives_s3(const Mat2& m) { return abs(m.b) == 1; }

// epsilon = (product of twist signs) * (m(lambda) . lambda).
inline int epsilon(const Mat2& m, int sign_product) {
  require_sign(sign_product, "sign product");
  if (!gives_s3(m))
    throw std::domain_error("not an S^3 boundary: |lambda . m(lambda)| != 1");
  return m.b > 0 ? sign_product : -sign_product;
}

// Framing induced by the splitting surface on a curve of class (p,q).
inline Int surface_framing(const Curve& c) { return c.p * c.q; }

// Attaching framing of the 2-handle for a twist of sign delta along c.
inline Int handle_framing(const Curve& c, int delta) {
  require_sign(delta, "delta");
  return c.p * c.q - delta;
}

}  // namespace horokit
