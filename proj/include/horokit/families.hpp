#pragma once

#include "horokit/bigint.hpp"
#include "horokit/diophantine.hpp"

#include <set>
#include <stdexcept>

namespace horokit {

// Fibonacci numbers with F_{-1} = 1, F_0 = 0, F_{m+1} = F_m + F_{m-1},
// extended to negative indices by running the recurrence backwards
// (equivalently F_{-m} = (-1)^{m+1} F_m).
inline Int fib(long m) {
  Int a = 0, b = 1;  // (F_0, F_1)
  if (m >= 0) {
    for (long i = 0; i < m; ++i) {
      Int t = a + b;
      a = b;
      b = t;
    }
    return a;
  }
  for (long i = 0; i > m; --i) {
    Int t = b - a;  // F_{k-1} = F_{k+1} - F_k
    b = a;
    a = t;
  }
  return a;
}

// F_r F_{m+j} - F_m F_{r+j} = (-1)^{r+1} F_{m-r} F_j
inline bool vajda(long r, long m, long j) {
  Int lhs = fib(r) * fib(m + j) - fib(m) * fib(r + j);
  Int rhs = fib(m - r) * fib(j);
  if (r % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

// Mutation orbits of the sets with |n| in {1,3} are generated by Fibonacci
// seed sequences together with a small symmetry group:
//   S  = {(-F_{2k-1}, F_{2k+1})}  with the full group G = {id, S, -I, -S},
//   T1 = {(F_{2k+1}, F_{2k})},  T2 = {(F_{2k+1}, -F_{2k+2})}  with H = {id, -I},
//   Finite = +/-{(1,0),(0,1),(1,1)}  (explicit enumeration, no index form).
enum class FamilyTag { S, T1, T2, Finite };
enum class OrbitOp { Id, Swap, Neg, SwapNeg };

struct FamilyElement {
  FamilyTag family{FamilyTag::S};
  long k{0};
  OrbitOp op{OrbitOp::Id};
};

inline Solution apply_orbit(OrbitOp op, const Solution& s) {
  switch (op) {
    case OrbitOp::Id: return s;
    case OrbitOp::Swap: return sym_S(s);
    case OrbitOp::Neg: return sym_neg(s);
    case OrbitOp::SwapNeg: return sym_neg(sym_S(s));
  }
  throw std::invalid_argument("unknown orbit op");
}

// Parameters of the set each seed family lives in (normal form n > 0, eps = -1).
inline SolParams family_params(FamilyTag t) {
  switch (t) {
    case FamilyTag::S: return SolParams{3, -1, +1, +1};
    case FamilyTag::T1:
    case FamilyTag::T2: return SolParams{1, -1, +1, -1};  // S^{-1,1}
    case FamilyTag::Finite: return SolParams{1, -1, -1, -1};
  }
  throw std::invalid_argument("unknown family tag");
}

inline Solution family_element(const FamilyElement& e) {
  if (e.k < 0) throw std::invalid_argument("family index k must be >= 0");
  Solution base;
  switch (e.family) {
    case FamilyTag::S:
      base = Solution{-fib(2 * e.k - 1), fib(2 * e.k + 1)};
      break;
    case FamilyTag::T1:
      base = Solution{fib(2 * e.k + 1), fib(2 * e.k)};
      break;
    case FamilyTag::T2:
      base = Solution{fib(2 * e.k + 1), -fib(2 * e.k + 2)};
      break;
    case FamilyTag::Finite:
      throw std::domain_error("the finite family has no index form; use finite_family()");
  }
  if (e.family != FamilyTag::S && (e.op == OrbitOp::Swap || e.op == OrbitOp::SwapNeg))
    throw std::invalid_argument("T1/T2 orbits only carry {id, -I}; swaps change the parameter set");
  return apply_orbit(e.op, base);
}

inline std::set<Solution> finite_family() {
  return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
}

// All family elements of the set S^{d2,d1}_{n,eps} whose coordinates fit in
// the box |x|,|y| <= bound.  Families are defined at the normal form
// (n > 0, eps = -1); other parameters are reached through the symmetries.
inline std::set<Solution> family_box(const SolParams& P0, long bound) {
  if (bound < 1) throw std::invalid_argument("family_box requires bound >= 1");
  SolParams P = P0;
  if (P.eps == 1) P = sym_flip_eps(P);
  bool flipped = false;
  if (P.n < 0) {
    P = sym_flip_n(P);
    flipped = true;
  }
  std::set<Solution> fam;
  auto add_g_orbit = [&fam](const Solution& s) {
    fam.insert(s);
    fam.insert(sym_S(s));
    fam.insert(sym_neg(s));
    fam.insert(sym_neg(sym_S(s)));
  };
  auto add_h_orbit = [&fam](const Solution& s) {
    fam.insert(s);
    fam.insert(sym_neg(s));
  };
  bool swap_all = false;
  if (P.n == 3 && P.d1 == 1 && P.d2 == 1) {
    for (long k = 0; fib(2 * k + 1) <= bound; ++k)
      add_g_orbit(Solution{-fib(2 * k - 1), fib(2 * k + 1)});
  } else if (P.n == 1 && P.d1 != P.d2) {
    swap_all = (P.d2 == 1);  // S^{1,-1} = S . S^{-1,1}
    for (long k = 0; fib(2 * k + 1) <= bound; ++k)
      add_h_orbit(Solution{fib(2 * k + 1), fib(2 * k)});
    for (long k = 0; fib(2 * k + 2) <= bound; ++k)
      add_h_orbit(Solution{fib(2 * k + 1), -fib(2 * k + 2)});
  } else if (P.n == 1 && P.d1 == -1 && P.d2 == -1) {
    fam = finite_family();
  }
  std::set<Solution> out;
  for (Solution s : fam) {
    if (swap_all) s = sym_S(s);
    if (flipped) s = sym_flip_n(s);
    if (abs(s.x) <= bound && abs(s.y) <= bound) out.insert(s);
  }
  return out;
}

// Does the Fibonacci family picture account for every box solution?
inline bool family_covers(const SolParams& P, long bound) {
  return family_box(P, bound) == enumerate_box(P, bound);
}

inline bool is_markov(const Int& a, const Int& b, const Int& c) {
  return a > 0 && b > 0 && c > 0 && a * a + b * b + c * c == 3 * a * b * c;
}

// k-th power of [[0,-1],[1,3]] applied to (-1,1); equals (-F_{2k-1}, F_{2k+1}).
inline Solution minus_vs_matrix(long k) {
  if (k < 0) throw std::invalid_argument("minus_vs_matrix requires k >= 0");
  Solution v{-1, 1};
  for (long i = 0; i < k; ++i) v = Solution{-v.y, v.x + 3 * v.y};
  return v;
}

}  // namespace horokit
