#pragma once

#include "horokit/bigint.hpp"

#include <compare>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace horokit {

// Parameters of the solution set S^{d2,d1}_{n,eps}:
//   d2*x^2 + d1*y^2 + n*x*y = eps  with  gcd(x,n) = gcd(y,n) = 1.
// Note the superscript order: d2 is listed first.
struct SolParams {
  Int n{1};
  int eps{-1};
  int d1{+1};
  int d2{+1};

  SolParams() = default;
  SolParams(Int n_, int eps_, int d1_, int d2_) : n(std::move(n_)), eps(eps_), d1(d1_), d2(d2_) {
    require_sign(eps, "eps");
    require_sign(d1, "d1");
    require_sign(d2, "d2");
  }
  friend bool operator==(const SolParams&, const SolParams&) = default;
};

struct Solution {
  Int x{0};
  Int y{0};

  friend bool operator==(const Solution&, const Solution&) = default;
  friend bool operator<(const Solution& a, const Solution& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Int quadratic_value(const SolParams& P, const Solution& s) {
  return P.d2 * s.x * s.x + P.d1 * s.y * s.y + P.n * s.x * s.y;
}

// gcd(v,0) = |v|, so n = 0 demands |x| = |y| = 1 with no special casing.
inline bool is_member(const SolParams& P, const Solution& s) {
  return quadratic_value(P, s) == P.eps &&
         gcd(abs(s.x), abs(P.n)) == 1 && gcd(abs(s.y), abs(P.n)) == 1;
}

inline Int hat_x(const SolParams& P, const Solution& s) { return -s.x - P.n * P.d2 * s.y; }
inline Int hat_y(const SolParams& P, const Solution& s) { return -s.y - P.n * P.d1 * s.x; }

inline void require_member(const SolParams& P, const Solution& s, const char* op) {
  if (!is_member(P, s))
    throw std::domain_error(std::string(op) + " requires a member of the solution set");
}

// Vieta jump in x: (x,y) -> (-x - n*d2*y, y).  Involutive, preserves membership.
inline Solution mutate_x(const SolParams& P, const Solution& s) {
  require_member(P, s, "mutate_x");
  return Solution{hat_x(P, s), s.y};
}

inline Solution mutate_y(const SolParams& P, const Solution& s) {
  require_member(P, s, "mutate_y");
  return Solution{s.x, hat_y(P, s)};
}

enum class Mutation { X, Y };

struct Descent {
  Solution bottom;
  std::vector<Mutation> moves;
};

// Non-empty sets force |n| in {1,3}; their bottom elements are exactly the
// members with |x*y| = (|n|-1)/2.
inline Int bottom_product(const Int& n) { return (abs(n) - 1) / 2; }

// Repeatedly jump the larger coordinate until |x*y| reaches the bottom value.
// The one ambiguous spot is |x| = |y| = 1 with |n| = 1, where exactly one of
// the two jumps (or both, in the all-negative-signs set) lands on a zero
// coordinate; prefer the x-jump when it does.
inline Descent descend(const SolParams& P, Solution s) {
  require_member(P, s, "descend");
  const Int target = bottom_product(P.n);
  std::vector<Mutation> moves;
  while (abs(s.x * s.y) != target) {
    Int ax = abs(s.x), ay = abs(s.y);
    if (ax > ay) {
      s = Solution{hat_x(P, s), s.y};
      moves.push_back(Mutation::X);
    } else if (ay > ax) {
      s = Solution{s.x, hat_y(P, s)};
      moves.push_back(Mutation::Y);
    } else if (hat_x(P, s) == 0) {
      s = Solution{0, s.y};
      moves.push_back(Mutation::X);
    } else if (hat_y(P, s) == 0) {
      s = Solution{s.x, 0};
      moves.push_back(Mutation::Y);
    } else {
      throw std::logic_error("descend: tied coordinates with no zeroing jump");
    }
  }
  return Descent{s, moves};
}

// (x,y) -> (y,x) maps S^{d2,d1} onto S^{d1,d2}.
inline Solution sym_S(const Solution& s) { return Solution{s.y, s.x}; }
inline SolParams sym_S(const SolParams& P) { return SolParams{P.n, P.eps, P.d2, P.d1}; }

// -I acts on every set.
inline Solution sym_neg(const Solution& s) { return Solution{-s.x, -s.y}; }

// (x,y) -> (x,-y) maps the set for n onto the set for -n.
inline Solution sym_flip_n(const Solution& s) { return Solution{s.x, -s.y}; }
inline SolParams sym_flip_n(const SolParams& P) { return SolParams{-P.n, P.eps, P.d1, P.d2}; }

// Negating the whole equation (cross term included) gives the pointwise
// identity S^{d2,d1}_{n,eps} = S^{-d2,-d1}_{-n,-eps}.
inline SolParams sym_flip_eps(const SolParams& P) {
  return SolParams{-P.n, -P.eps, -P.d1, -P.d2};
}

// Closed-form bottom sets for |n| in {1,3}, transported from the normal form
// (n > 0, eps = -1) through the two parameter symmetries.  Empty otherwise.
inline std::set<Solution> bottom_set(const SolParams& P0) {
  SolParams P = P0;
  if (P.eps == 1) P = sym_flip_eps(P);
  bool flipped = false;
  if (P.n < 0) {
    P = sym_flip_n(P);
    flipped = true;
  }
  std::set<Solution> base;
  if (P.n == 3) {
    if (P.d1 == 1 && P.d2 == 1) base = {{1, -1}, {-1, 1}};
  } else if (P.n == 1) {
    if (P.d2 == -1 && P.d1 == 1) base = {{1, 0}, {-1, 0}};
    else if (P.d2 == 1 && P.d1 == -1) base = {{0, 1}, {0, -1}};
    else if (P.d2 == -1 && P.d1 == -1) base = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  }
  if (!flipped) return base;
  std::set<Solution> out;
  for (const Solution& s : base) out.insert(sym_flip_n(s));
  return out;
}

// Exhaustive scan of |x|,|y| <= bound.  Exact: the int64 path is used only
// when every intermediate provably fits; otherwise falls back to cpp_int.
inline std::set<Solution> enumerate_box(const SolParams& P, long bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_box requires bound >= 1");
  std::set<Solution> out;
  const Int limit = 1000000;
  if (bound <= 1000000 && abs(P.n) <= limit) {
    const long long n = static_cast<long long>(P.n);
    const long long an = std::llabs(n);
    const long long e = P.eps, d1 = P.d1, d2 = P.d2, b = bound;
    for (long long x = -b; x <= b; ++x) {
      if (std::gcd(std::llabs(x), an) != 1) continue;
      const long long d2x2 = d2 * x * x;
      const long long nx = n * x;
      for (long long y = -b; y <= b; ++y) {
        if (d2x2 + d1 * y * y + nx * y == e && std::gcd(std::llabs(y), an) == 1)
          out.insert(Solution{x, y});
      }
    }
  } else {
    for (Int x = -bound; x <= bound; ++x)
      for (Int y = -bound; y <= bound; ++y) {
        Solution s{x, y};
        if (is_member(P, s)) out.insert(s);
      }
  }
  return out;
}

}  // namespace horokit
