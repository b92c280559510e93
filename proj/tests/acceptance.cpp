#include "horokit/horokit.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace horokit;

namespace {

std::set<Solution> pm(std::initializer_list<Solution> base) {
  std::set<Solution> out;
  for (const Solution& s : base) {
    out.insert(s);
    out.insert(Solution{-s.x, -s.y});
  }
  return out;
}

std::vector<SolParams> grid(std::initializer_list<long> ns) {
  return vdetail::param_grid(ns);
}

bool check_bottom_sets(std::string& note) {
  bool ok = true;
  ok = ok && bottom_set(SolParams{3, -1, +1, +1}) == pm({{1, -1}});
  ok = ok && bottom_set(SolParams{1, -1, +1, -1}) == pm({{1, 0}});
  ok = ok && bottom_set(SolParams{1, -1, -1, +1}) == pm({{0, 1}});
  ok = ok && bottom_set(SolParams{1, -1, -1, -1}) == pm({{1, 0}, {0, 1}});
  if (!ok) note = "a bottom set differs from its closed form";
  return ok;
}

bool check_family_coverage(std::string& note) {
  for (const SolParams& P : grid({1, -1, 3, -3}))
    if (!family_covers(P, 400)) {
      note = "box member outside the closed-form families, " + vdetail::show(P);
      return false;
    }
  return true;
}

bool check_emptiness(std::string& note) {
  for (const SolParams& P : grid({2, -2, 4, -4, 5, -5}))
    if (!enumerate_box(P, 200).empty()) {
      note = "unexpected solution in " + vdetail::show(P);
      return false;
    }
  return true;
}

bool check_descent(std::string& note) {
  for (const SolParams& P : grid({1, -1, 3, -3})) {
    std::set<Solution> bottom = bottom_set(P);
    for (const Solution& s : enumerate_box(P, 400)) {
      Descent d = descend(P, s);
      if (!bottom.count(d.bottom)) {
        note = "descent missed the bottom set from " + vdetail::show(s);
        return false;
      }
      Solution cur = s;
      for (Mutation mv : d.moves) {
        cur = mv == Mutation::X ? mutate_x(P, cur) : mutate_y(P, cur);
        if (!is_member(P, cur)) {
          note = "descent left the set at " + vdetail::show(cur);
          return false;
        }
      }
      if (cur != d.bottom) {
        note = "descent trace does not end at its bottom";
        return false;
      }
      Int big = abs(s.x) > abs(s.y) ? abs(s.x) : abs(s.y);
      double cap = 2 * std::log2(std::max(1.0, static_cast<double>(big))) + 2;
      if (static_cast<double>(d.moves.size()) > cap) {
        note = "descent exceeded the move cap from " + vdetail::show(s);
        return false;
      }
    }
  }
  return true;
}

bool check_hurwitz_engine(std::string& note) {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 10000; ++i) {
    Factorization f = vdetail::random_factorization(rng, 6, 50);
    if (f.size() < 2) {
      --i;
      continue;
    }
    std::uniform_int_distribution<size_t> pick(1, f.size() - 1);
    MoveStep step{(rng() & 1) ? MoveStep::Dir::Up : MoveStep::Dir::Down, pick(rng)};
    if (apply_move(f, step).monodromy() != f.monodromy()) {
      note = "random move changed the monodromy";
      return false;
    }
  }
  Factorization f{{Twist(mu(), +1), Twist(mu(), -1), Twist(mu(), +1), Twist(lambda(), +1)}};
  Factorization g{{Twist(lambda(), -1), Twist(lambda(), +1), Twist(mu(), +1), Twist(lambda(), +1)}};
  auto w = hurwitz_equivalent(f, g, 8);
  if (!w) {
    note = "worked example pair not found at depth 8";
    return false;
  }
  if (apply_moves(f, *w) != g) {
    note = "witness does not replay to the target";
    return false;
  }
  return true;
}

bool check_classification_stability(std::string& note) {
  for (const SolParams& P : grid({1, -1, 3, -3}))
    for (const Solution& s : enumerate_box(P, 100)) {
      HorizontalDatum d = datum_from_triple(s.x, s.y, P.n, P.d1, P.d2);
      Classification c = classify_pair(d);
      for (const HorizontalDatum& e : {datum_move_up(d), datum_move_down(d)}) {
        Classification ce = classify_pair(e);
        if (ce.kind != c.kind || ce.orientation != c.orientation || ce.epsilon != c.epsilon) {
          note = "classification changed under a move at " + vdetail::show(s);
          return false;
        }
      }
    }
  return true;
}

bool check_fibonacci(std::string& note) {
  for (long m = -20; m <= 18; ++m)
    if (fib(m + 2) != fib(m + 1) + fib(m)) {
      note = "recurrence fails at " + std::to_string(m);
      return false;
    }
  for (long r = -20; r <= 20; ++r)
    for (long m = -20; m <= 20; ++m)
      for (long j = -20; j <= 20; ++j)
        if (!vajda(r, m, j)) {
          note = "vajda identity fails";
          return false;
        }
  for (long k = 0; k <= 30; ++k)
    if (minus_vs_matrix(k) != Solution{-fib(2 * k - 1), fib(2 * k + 1)}) {
      note = "matrix orbit disagrees at k=" + std::to_string(k);
      return false;
    }
  return true;
}

bool check_ball_pair_tables(std::string& note) {
  for (long m = 0; m <= 15; ++m)
    for (BallFamily fam : {BallFamily::B, BallFamily::BPrime}) {
      auto [hi, lo] = ball_pairs(m, fam);
      HorizontalDatum d = family_datum(m, fam);
      Classification c = classify_pair(d);
      if (!c.ball_pair || *c.epsilon != -1 || c.orientation != 1) {
        note = "family datum misclassified at m=" + std::to_string(m);
        return false;
      }
      std::multiset<std::string> want{ball_text(hi), ball_text(lo)};
      std::multiset<std::string> got{ball_text(c.ball_pair->first),
                                     ball_text(c.ball_pair->second)};
      if (want != got) {
        note = "routes disagree at m=" + std::to_string(m) + " " + family_name(fam);
        return false;
      }
      FamilyElement fe = fam == BallFamily::B
                             ? FamilyElement{FamilyTag::S, m, OrbitOp::Swap}
                             : (m % 2 == 0 ? FamilyElement{FamilyTag::T2, m / 2, OrbitOp::Id}
                                           : FamilyElement{FamilyTag::T1, (m + 1) / 2, OrbitOp::Id});
      if (d.solution() != family_element(fe)) {
        note = "family datum is not the family element at m=" + std::to_string(m);
        return false;
      }
      ResiduePair rp = fam == BallFamily::B
                           ? q_residues(ResidueCase::N3Up, m)
                           : (m % 2 == 0 ? q_residues(ResidueCase::N1C, m / 2)
                                         : q_residues(ResidueCase::N1A, (m + 1) / 2));
      Curve c1 = canonical(d.gamma1), c2 = canonical(d.gamma2);
      if (rp.q1.modulus != c1.p || rp.q2.modulus != c2.p || !rp.q1.satisfied_by(c1.q) ||
          !rp.q2.satisfied_by(c2.q)) {
        note = "q residues not satisfied at m=" + std::to_string(m);
        return false;
      }
      for (const RationalBall& b : {hi, lo}) {
        if (b.p == 1) continue;
        Int pp = b.p * b.p;
        if (!lens_oriented_equal(LensSpace(pp, b.p * b.q - 1),
                                 LensSpace(pp, b.p * (b.p - b.q) - 1))) {
          note = "q-fold boundary identity fails at m=" + std::to_string(m);
          return false;
        }
      }
    }
  for (long k = 0; 2 * k <= 15; ++k) {
    RationalBall owens(fib(2 * k + 1), fib(2 * k), +1);
    if (owens != RationalBall(fib(2 * k + 1), fib(2 * k - 1), +1) ||
        owens != family_ball(BallFamily::BPrime, 2 * k)) {
      note = "Owens subfamily mismatch at k=" + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool check_markov(std::string& note) {
  for (long m = 0; m <= 30; ++m)
    if (!is_markov(1, fib(2 * m - 1), fib(2 * m + 1))) {
      note = "markov triple fails at m=" + std::to_string(m);
      return false;
    }
  return true;
}

bool check_mirror_rejection(std::string& note) {
  for (long p = 2; p <= 50; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Int pp = Int(p) * p;
      if (lens_oriented_equal(LensSpace(pp, Int(p) * q - 1), LensSpace(pp, pp - Int(p) * q + 1))) {
        note = "mirror lens spaces compared equal at p=" + std::to_string(p);
        return false;
      }
    }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"bottom-set reproduction", check_bottom_sets},
      {"family coverage at bound 400", check_family_coverage},
      {"emptiness for n in {2,4,5}", check_emptiness},
      {"descent termination and caps", check_descent},
      {"hurwitz engine invariance and search", check_hurwitz_engine},
      {"classification stability under moves", check_classification_stability},
      {"fibonacci and vajda identities", check_fibonacci},
      {"ball-pair tables and route agreement", check_ball_pair_tables},
      {"markov triples", check_markov},
      {"mirror lens rejection", check_mirror_rejection},
  };
  int failures = 0;
  int index = 0;
  double total = 0.0;
  for (const Criterion& c : criteria) {
    ++index;
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = c.run(note);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    std::printf("%s  criterion %2d: %-40s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", index, c.name,
                secs, note.empty() ? "" : "  ", note.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d/10 criteria passed (%.3f s total)\n", 10 - failures, total);
  return failures;
}
