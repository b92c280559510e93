#pragma once

#include "horokit/bigint.hpp"
#include "horokit/diophantine.hpp"
#include "horokit/families.hpp"
#include "horokit/hurwitz.hpp"
#include "horokit/torus.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace horokit {

// Rational homology ball B_{p,q}, stored canonically: 0 <= q < p, gcd(p,q)=1,
// q folded to min(q, p-q) since B_{p,q} and B_{p,p-q} are the same ball, and
// orientation normalized to +1 for the amphichiral B_{1,0} = B^4.
struct RationalBall {
  Int p{1};
  Int q{0};
  int orientation{+1};

  RationalBall() = default;
  RationalBall(Int p_, Int q_, int orient) : p(std::move(p_)), orientation(orient) {
    require_sign(orient, "ball orientation");
    if (p < 1) throw std::invalid_argument("B_{p,q} requires p >= 1");
    q = mod_floor(q_, p);
    if (gcd(p, q) != 1) throw std::invalid_argument("B_{p,q} requires gcd(p,q) = 1");
    if (p - q < q) q = p - q;
    if (p == 1) orientation = +1;
  }

  bool is_b4() const { return p == 1; }
  friend bool operator==(const RationalBall&, const RationalBall&) = default;
};

// Oriented lens space L(a,b), b reduced mod a.
struct LensSpace {
  Int a{1};
  Int b{0};

  LensSpace() = default;
  LensSpace(Int a_, Int b_) : a(std::move(a_)) {
    if (a < 1) throw std::invalid_argument("L(a,b) requires a >= 1");
    b = mod_floor(b_, a);
    if (gcd(a, b) != 1) throw std::invalid_argument("L(a,b) requires gcd(a,b) = 1");
  }
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

inline LensSpace lens_boundary(const RationalBall& ball) {
  Int a = ball.p * ball.p;
  Int b = ball.orientation == 1 ? ball.p * ball.q - 1 : a - ball.p * ball.q + 1;
  return LensSpace(a, b);
}

// Oriented homeomorphism: L(a,b1) = L(a,b2) iff b2 = b1^{+-1} (mod a).
inline bool lens_oriented_equal(const LensSpace& l1, const LensSpace& l2) {
  if (l1.a != l2.a) return false;
  if (l1.b == l2.b) return true;
  return mod_floor(l1.b * l2.b, l1.a) == mod_floor(Int(1), l1.a);
}

enum class CobordismKind { Product, BallComplement, Cp2Complement, NonzeroB1 };

// Handle counts (genus, 1-handles of the lower compression body, link
// components, excess 2-handles) of the decomposition the result refers to.
struct DecompositionType {
  int g{1}, u{1}, l{1}, h{0};
  friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

struct Classification {
  CobordismKind kind{CobordismKind::Product};
  int orientation{+1};
  DecompositionType type{};
  std::optional<RationalBall> ball;
  std::optional<int> epsilon;
  std::optional<std::pair<RationalBall, RationalBall>> ball_pair;
  std::optional<std::array<Int, 3>> triple;  // (x, y, n), pair case only
};

// Single twist along gamma: the cobordism is determined by the unoriented
// class mod the stabilizer of lambda (mu -> mu + m*lambda), so by p and
// q mod p.  (1,0) gives the product, (0,1) the b_1 > 0 filling, and
// p > 1 the complement of a rational ball, positive for delta = +1.
inline Classification classify_one(const Curve& gamma, int delta) {
  require_sign(delta, "delta");
  Classification out;
  out.type = DecompositionType{1, 1, 1, 0};
  Curve c = canonical(gamma);
  if (c.p == 0) {
    out.kind = CobordismKind::NonzeroB1;
    return out;
  }
  Int q = mod_floor(c.q, c.p);
  if (c.p == 1) {
    out.kind = CobordismKind::Product;
    out.ball = RationalBall(1, 0, +1);
    return out;
  }
  out.kind = CobordismKind::BallComplement;
  out.orientation = delta;
  out.ball = delta == 1 ? RationalBall(c.p, c.p - q, +1) : RationalBall(c.p, q, -1);
  return out;
}

// Two twists bounding S^3 above: the filled cobordism is a CP^2 with two
// rational balls removed, oriented opposite to epsilon.
inline Classification classify_pair(const HorizontalDatum& d) {
  Mat2 m = d.monodromy();
  if (!gives_s3(m)) {
    if (d.n() == 0)
      throw std::domain_error("not a valid (1,1,2,0) S^3-cobordism datum: parallel curves give n = 0");
    throw std::domain_error("not an S^3 boundary: |lambda . m(lambda)| != 1");
  }
  int eps = epsilon(m, d.delta1 * d.delta2);
  SolParams P{d.n(), eps, d.delta1, d.delta2};
  Solution s = d.solution();
  if (!is_member(P, s))
    throw std::logic_error("inconsistent datum: (x,y) fails membership in its solution set");
  Classification out;
  out.kind = CobordismKind::Cp2Complement;
  out.orientation = -eps;
  out.epsilon = eps;
  out.type = DecompositionType{1, 1, 2, 0};
  out.triple = std::array<Int, 3>{s.x, s.y, P.n};
  Classification c1 = classify_one(d.gamma1, d.delta1);
  Classification c2 = classify_one(d.gamma2, d.delta2);
  if (c1.ball && c2.ball) out.ball_pair = std::make_pair(*c1.ball, *c2.ball);
  return out;
}

// The two classified families:
//   B_m  = B_{F_{2m-1}, F_{2m-5}}         (always positive),
//   B'_m = (-1)^m B_{F_{m+1}, F_m}.
enum class BallFamily { B, BPrime };

inline RationalBall family_ball(BallFamily fam, long index) {
  if (index < 0) throw std::invalid_argument("family ball index must be >= 0");
  if (fam == BallFamily::B) return RationalBall(fib(2 * index - 1), fib(2 * index - 5), +1);
  return RationalBall(fib(index + 1), fib(index), index % 2 == 0 ? +1 : -1);
}

// Pair of disjointly embedded balls at index m: (index m+1, index m).
inline std::pair<RationalBall, RationalBall> ball_pairs(long m, BallFamily fam) {
  if (m < 0) throw std::invalid_argument("ball pair index must be >= 0");
  return {family_ball(fam, m + 1), family_ball(fam, m)};
}

// Explicit datum classifying to ball_pairs(m, fam): curve classes from the
// (x,y) family member at the right index, lambda-coordinates shifted by one
// Fibonacci step so that n comes out via the second-order identity
// F_r F_{m+j} - F_m F_{r+j} = (-1)^{r+1} F_{m-r} F_j.
inline HorizontalDatum family_datum(long m, BallFamily fam) {
  if (m < 0) throw std::invalid_argument("family datum index must be >= 0");
  if (fam == BallFamily::B) {
    long k = m;
    return HorizontalDatum{Curve(fib(2 * k + 1), fib(2 * k - 3)),
                           Curve(-fib(2 * k - 1), -fib(2 * k - 5)), +1, +1};
  }
  if (m % 2 == 0) {
    long k = m / 2;
    return HorizontalDatum{Curve(fib(2 * k + 1), fib(2 * k)),
                           Curve(-fib(2 * k + 2), -fib(2 * k + 1)), +1, -1};
  }
  long k = (m + 1) / 2;
  return HorizontalDatum{Curve(fib(2 * k + 1), -fib(2 * k)),
                         Curve(fib(2 * k), -fib(2 * k - 1)), +1, -1};
}

// The six (p1,p2) shapes of valid two-ball data, named by n and which
// component carries the larger Fibonacci number.
enum class ResidueCase { N3Up, N3Down, N1A, N1B, N1C, N1D };

struct ResidueConstraint {
  Int modulus{1};
  Int plus{0};   //  r mod modulus
  Int minus{0};  // -r mod modulus

  bool satisfied_by(const Int& q) const {
    Int r = mod_floor(q, modulus);
    return r == plus || r == minus;
  }
  friend bool operator==(const ResidueConstraint&, const ResidueConstraint&) = default;
};

struct ResiduePair {
  ResidueConstraint q1, q2;
};

namespace detail {
inline ResidueConstraint residue(long p_index, long r_index) {
  Int p = fib(p_index);
  if (p < 1) throw std::invalid_argument("degenerate residue case: modulus F_{2k} needs k >= 1");
  Int r = mod_floor(fib(r_index), p);
  return ResidueConstraint{p, r, mod_floor(-r, p)};
}
}  // namespace detail

// q_i mod p_i constraints forced on any datum whose |p_i| realize the case:
// q ≡ ±F_j with j four below the p-index (n = 3) or one below (n = 1).
inline ResiduePair q_residues(ResidueCase c, long k) {
  if (k < 0) throw std::invalid_argument("q_residues requires k >= 0");
  switch (c) {
    case ResidueCase::N3Up:
      return {detail::residue(2 * k + 1, 2 * k - 3), detail::residue(2 * k - 1, 2 * k - 5)};
    case ResidueCase::N3Down:
      return {detail::residue(2 * k - 1, 2 * k - 5), detail::residue(2 * k + 1, 2 * k - 3)};
    case ResidueCase::N1A:
      return {detail::residue(2 * k + 1, 2 * k), detail::residue(2 * k, 2 * k - 1)};
    case ResidueCase::N1B:
      return {detail::residue(2 * k, 2 * k - 1), detail::residue(2 * k + 1, 2 * k)};
    case ResidueCase::N1C:
      return {detail::residue(2 * k + 1, 2 * k), detail::residue(2 * k + 2, 2 * k + 1)};
    case ResidueCase::N1D:
      return {detail::residue(2 * k + 2, 2 * k + 1), detail::residue(2 * k + 1, 2 * k)};
  }
  throw std::invalid_argument("unknown residue case");
}

// Kirby record: the compression body contributes one dotted unknot, each
// twist a 2-handle along its (canonical) torus-knot class with framing
// pq - delta.
struct KirbyTwoHandle {
  Curve curve;
  Int framing;
  friend bool operator==(const KirbyTwoHandle&, const KirbyTwoHandle&) = default;
};

struct KirbyDiagram {
  int one_handles{1};
  std::vector<KirbyTwoHandle> two_handles;
  friend bool operator==(const KirbyDiagram&, const KirbyDiagram&) = default;
};

inline KirbyDiagram emit_kirby(const Curve& gamma, int delta, bool with_one_handle = true) {
  Curve c = canonical(gamma);
  Int fr = handle_framing(c, delta);
  if (!with_one_handle && abs(fr) != 1)
    throw std::domain_error("a diagram without the 1-handle needs framing +-1");
  return KirbyDiagram{with_one_handle ? 1 : 0, {KirbyTwoHandle{c, fr}}};
}

inline KirbyDiagram emit_kirby(const HorizontalDatum& d) {
  Curve c1 = canonical(d.gamma1), c2 = canonical(d.gamma2);
  return KirbyDiagram{1,
                      {KirbyTwoHandle{c1, handle_framing(c1, d.delta1)},
                       KirbyTwoHandle{c2, handle_framing(c2, d.delta2)}}};
}

}  // namespace horokit
