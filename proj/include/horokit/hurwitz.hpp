#pragma once

#include "horokit/bigint.hpp"
#include "horokit/diophantine.hpp"
#include "horokit/torus.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace horokit {

// Ordered tuple of twists in attachment order: twists[0] is level 1 and its
// matrix acts first in the monodromy product.
struct Factorization {
  std::vector<Twist> twists;

  size_t size() const { return twists.size(); }
  Mat2 monodromy() const { return horokit::monodromy(twists); }
  int sign_product() const {
    int s = 1;
    for (const Twist& t : twists) s *= t.sign;
    return s;
  }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline void check_move_level(const Factorization& f, size_t level) {
  if (level < 1 || level >= f.size())
    throw std::out_of_range("Hurwitz move level must satisfy 1 <= level < length");
}

// Swap levels (level, level+1), conjugating the twist that moves down past the
// one that moves up: (a, b) -> (b, tau_b(a)).  Preserves the ordered product.
inline Factorization move_up(const Factorization& f, size_t level) {
  check_move_level(f, level);
  Factorization out = f;
  Twist lo = f.twists[level - 1];
  Twist hi = f.twists[level];
  out.twists[level - 1] = hi;
  out.twists[level] = Twist(twist_apply(hi, lo.curve), lo.sign);
  return out;
}

// Inverse swap: (a, b) -> (tau_a^{-1}(b), a).
inline Factorization move_down(const Factorization& f, size_t level) {
  check_move_level(f, level);
  Factorization out = f;
  Twist lo = f.twists[level - 1];
  Twist hi = f.twists[level];
  out.twists[level - 1] = Twist(twist_apply(lo.inverse(), hi.curve), hi.sign);
  out.twists[level] = lo;
  return out;
}

struct MoveStep {
  enum class Dir { Up, Down };
  Dir dir{Dir::Up};
  size_t level{1};
  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

inline MoveStep inverse(const MoveStep& m) {
  return MoveStep{m.dir == MoveStep::Dir::Up ? MoveStep::Dir::Down : MoveStep::Dir::Up, m.level};
}

inline Factorization apply_move(const Factorization& f, const MoveStep& m) {
  return m.dir == MoveStep::Dir::Up ? move_up(f, m.level) : move_down(f, m.level);
}

inline Factorization apply_moves(Factorization f, const std::vector<MoveStep>& moves) {
  for (const MoveStep& m : moves) f = apply_move(f, m);
  return f;
}

namespace detail {

// Twists already store canonical curves, so the raw field list is a canonical
// form of the factorization.
using FactKey = std::vector<std::tuple<Int, Int, int>>;

inline FactKey fact_key(const Factorization& f) {
  FactKey k;
  k.reserve(f.size());
  for (const Twist& t : f.twists) k.emplace_back(t.curve.p, t.curve.q, t.sign);
  return k;
}

inline Factorization fact_of_key(const FactKey& k) {
  Factorization f;
  f.twists.reserve(k.size());
  for (const auto& [p, q, s] : k) f.twists.emplace_back(Curve(p, q), s);
  return f;
}

struct SearchSide {
  std::map<FactKey, std::pair<FactKey, MoveStep>> parent;  // child -> (parent, step parent->child)
  std::vector<FactKey> frontier;
};

inline std::vector<MoveStep> path_to_root(const SearchSide& side, FactKey at, const FactKey& root) {
  std::vector<MoveStep> steps;
  while (at != root) {
    const auto& [par, step] = side.parent.at(at);
    steps.push_back(step);
    at = par;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace detail

// Breadth-first search for a move sequence carrying f to g, expanding from
// both ends (the move set is closed under inversion) so a budget of `depth`
// total moves costs two half-depth searches.  Returns the witness from f to
// g, or nothing if no sequence of at most `depth` moves exists.
inline std::optional<std::vector<MoveStep>> hurwitz_equivalent(const Factorization& f,
                                                               const Factorization& g,
                                                               size_t depth = 12) {
  if (f.size() != g.size())
    throw std::invalid_argument("factorizations of different lengths are never equivalent");
  const detail::FactKey kf = detail::fact_key(f);
  const detail::FactKey kg = detail::fact_key(g);
  if (kf == kg) return std::vector<MoveStep>{};
  if (f.size() < 2 || depth == 0) return std::nullopt;
  if (f.monodromy() != g.monodromy()) return std::nullopt;  // moves preserve the product
  auto signs = [](const Factorization& h) {
    std::vector<int> v;
    for (const Twist& t : h.twists) v.push_back(t.sign);
    std::sort(v.begin(), v.end());
    return v;
  };
  if (signs(f) != signs(g)) return std::nullopt;  // moves permute the sign multiset

  detail::SearchSide from_f, from_g;
  from_f.frontier = {kf};
  from_g.frontier = {kg};
  from_f.parent[kf] = {kf, {}};
  from_g.parent[kg] = {kg, {}};
  size_t used = 0;

  auto witness = [&](const detail::FactKey& meet) {
    std::vector<MoveStep> forward = detail::path_to_root(from_f, meet, kf);
    // The g-side path replays g -> meet; undoing its steps in reverse order
    // continues the witness from the meeting point to g.
    std::vector<MoveStep> back = detail::path_to_root(from_g, meet, kg);
    for (auto it = back.rbegin(); it != back.rend(); ++it) forward.push_back(inverse(*it));
    if (detail::fact_key(apply_moves(f, forward)) != kg)
      throw std::logic_error("hurwitz_equivalent: witness reconstruction failed");
    return forward;
  };

  while (used < depth && (!from_f.frontier.empty() || !from_g.frontier.empty())) {
    detail::SearchSide& grow =
        (from_f.frontier.size() <= from_g.frontier.size() && !from_f.frontier.empty()) || from_g.frontier.empty()
            ? from_f
            : from_g;
    const detail::SearchSide& other = (&grow == &from_f) ? from_g : from_f;
    ++used;
    std::vector<detail::FactKey> next;
    for (const detail::FactKey& key : grow.frontier) {
      Factorization cur = detail::fact_of_key(key);
      for (size_t lvl = 1; lvl < cur.size(); ++lvl) {
        for (MoveStep::Dir dir : {MoveStep::Dir::Up, MoveStep::Dir::Down}) {
          MoveStep step{dir, lvl};
          detail::FactKey child = detail::fact_key(apply_move(cur, step));
          if (grow.parent.count(child)) continue;
          grow.parent[child] = {key, step};
          next.push_back(child);
          if (other.parent.count(child)) return witness(child);
        }
      }
    }
    grow.frontier = std::move(next);
  }
  return std::nullopt;
}

// Two-component horizontal datum: oriented curves gamma1 (level 1) and gamma2
// (level 2) with twist signs delta1, delta2.
struct HorizontalDatum {
  Curve gamma1{1, 0};
  Curve gamma2{0, 1};
  int delta1{+1};
  int delta2{+1};

  HorizontalDatum() = default;
  HorizontalDatum(Curve g1, Curve g2, int d1, int d2)
      : gamma1(std::move(g1)), gamma2(std::move(g2)), delta1(d1), delta2(d2) {
    require_sign(d1, "delta1");
    require_sign(d2, "delta2");
  }

  Int x() const { return intersect(gamma1, lambda()); }
  Int y() const { return intersect(gamma2, lambda()); }
  Int n() const { return intersect(gamma2, gamma1); }
  Solution solution() const { return Solution{x(), y()}; }
  Factorization factorization() const { return Factorization{{Twist(gamma1, delta1), Twist(gamma2, delta2)}}; }
  Mat2 monodromy() const { return factorization().monodromy(); }
  int epsilon() const { return horokit::epsilon(monodromy(), delta1 * delta2); }
  SolParams params() const { return SolParams{n(), epsilon(), delta1, delta2}; }

  friend bool operator==(const HorizontalDatum&, const HorizontalDatum&) = default;
};

// Datum-level swap moves.  The conjugated curve is reoriented (overall minus)
// so that n is preserved; on triples these act as
//   up:   (x, y, n) -> (y, hat_x, n),   down: (x, y, n) -> (hat_y, x, n),
// and both swap the twist signs.  They project to move_up/move_down at level 1
// of the underlying factorization, which cannot see the reorientation.
inline HorizontalDatum datum_move_up(const HorizontalDatum& d) {
  Curve conj = twist_apply(Twist(d.gamma2, d.delta2), d.gamma1);
  return HorizontalDatum{d.gamma2, -conj, d.delta2, d.delta1};
}

inline HorizontalDatum datum_move_down(const HorizontalDatum& d) {
  Curve conj = twist_apply(Twist(d.gamma1, -d.delta1), d.gamma2);
  return HorizontalDatum{-conj, d.gamma1, d.delta2, d.delta1};
}

// Build a datum realizing the triple (x, y, n): solve y*q1 - x*q2 = n for the
// lambda-coordinates.  Any two particular solutions differ by (q1,q2) ->
// (q1 + t*x, q2 + t*y), which changes nothing downstream (classification only
// depends on q_i mod p_i).
inline HorizontalDatum datum_from_triple(const Int& x, const Int& y, const Int& n, int d1, int d2) {
  auto [g, u, v] = ext_gcd(y, x);
  if (g == 0 || n % g != 0)
    throw std::invalid_argument("triple is not realizable: gcd(x,y) must divide n");
  Int t = n / g;
  return HorizontalDatum{Curve(x, u * t), Curve(y, -v * t), d1, d2};
}

// Drive the datum to a bottom representative with the descent of its solution
// set.  An x-jump swaps the components (move up at even parity, down at odd),
// a y-jump the opposite; each move toggles which component carries x.
inline std::pair<HorizontalDatum, std::vector<MoveStep>> datum_reduce(const HorizontalDatum& d0) {
  SolParams P = d0.params();  // throws unless the datum bounds S^3
  Descent des = descend(P, d0.solution());
  HorizontalDatum d = d0;
  std::vector<MoveStep> steps;
  bool swapped = false;
  for (Mutation mv : des.moves) {
    bool up = (mv == Mutation::X) != swapped;
    d = up ? datum_move_up(d) : datum_move_down(d);
    steps.push_back(MoveStep{up ? MoveStep::Dir::Up : MoveStep::Dir::Down, 1});
    swapped = !swapped;
  }
  return {d, steps};
}

}  // namespace horokit
