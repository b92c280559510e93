#pragma once

#include "horokit/bigint.hpp"
#include "horokit/classifier.hpp"
#include "horokit/diophantine.hpp"
#include "horokit/families.hpp"
#include "horokit/hurwitz.hpp"
#include "horokit/torus.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace horokit {

struct VerifyConfig {
  long box_bound = 200;       // mutation / descent / emptiness boxes
  long coverage_bound = 400;  // family coverage boxes
  long stability_bound = 100; // solutions classified under moves
  long m_max = 15;            // ball pair indices
  int samples = 1000;         // random property samples
  unsigned long long seed = 20260815ull;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::string detail;  // first failing check, empty when green
};

namespace vdetail {

struct Recorder {
  SuiteResult r;
  explicit Recorder(std::string name) { r.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r.checks;
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what();
    }
  }
  void expect(bool ok, const char* what) {
    expect(ok, [what] { return std::string(what); });
  }
};

inline Curve random_primitive(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    Int p = d(rng), q = d(rng);
    if (gcd(abs(p), abs(q)) == 1) return Curve(p, q);
  }
}

inline Factorization random_factorization(std::mt19937_64& rng, size_t max_len, long bound) {
  std::uniform_int_distribution<size_t> len(1, max_len);
  Factorization f;
  size_t k = len(rng);
  for (size_t i = 0; i < k; ++i)
    f.twists.emplace_back(random_primitive(rng, bound), (rng() & 1) ? +1 : -1);
  return f;
}

// Raw quadratic scan without the gcd side condition.
inline std::set<Solution> quadratic_box(const SolParams& P, long bound) {
  std::set<Solution> out;
  for (Int x = -bound; x <= bound; ++x)
    for (Int y = -bound; y <= bound; ++y)
      if (quadratic_value(P, Solution{x, y}) == P.eps) out.insert(Solution{x, y});
  return out;
}

inline std::vector<SolParams> param_grid(std::initializer_list<long> ns) {
  std::vector<SolParams> out;
  for (long n : ns)
    for (int eps : {-1, +1})
      for (int d1 : {-1, +1})
        for (int d2 : {-1, +1}) out.emplace_back(Int(n), eps, d1, d2);
  return out;
}

inline std::string show(const SolParams& P) {
  std::ostringstream os;
  os << "S^{" << P.d2 << "," << P.d1 << "}_{" << P.n << "," << P.eps << "}";
  return os.str();
}

inline std::string show(const Solution& s) {
  std::ostringstream os;
  os << "(" << s.x << "," << s.y << ")";
  return os.str();
}

// Valid two-component data realizing every box solution of every |n| in {1,3}
// parameter set.
inline std::vector<HorizontalDatum> box_data(long bound) {
  std::vector<HorizontalDatum> out;
  for (const SolParams& P : param_grid({1, -1, 3, -3}))
    for (const Solution& s : enumerate_box(P, bound))
      out.push_back(datum_from_triple(s.x, s.y, P.n, P.d1, P.d2));
  return out;
}

}  // namespace vdetail

inline std::vector<SuiteResult> verify_all(const VerifyConfig& cfg = {}) {
  using vdetail::Recorder;
  std::vector<SuiteResult> results;
  auto run = [&results](const char* name, auto&& body) {
    Recorder rec(name);
    body(rec);
    results.push_back(rec.r);
  };
  unsigned long long seed = cfg.seed;

  run("intersection-antisymmetry", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 1);
    for (int i = 0; i < cfg.samples; ++i) {
      Curve a = vdetail::random_primitive(rng, 50), b = vdetail::random_primitive(rng, 50);
      rec.expect(intersect(a, b) == -intersect(b, a), "a.b != -(b.a)");
      rec.expect(intersect(a, a) == 0, "a.a != 0");
    }
    rec.expect(intersect(mu(), lambda()) == 1, "mu.lambda != 1");
  });

  run("twist-unimodularity", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 2);
    for (int i = 0; i < cfg.samples; ++i) {
      Twist t(vdetail::random_primitive(rng, 50), (rng() & 1) ? +1 : -1);
      rec.expect(twist_matrix(t).det() == 1, "det != 1");
      rec.expect(twist_matrix(t) * twist_matrix(t.inverse()) == Mat2{}, "t * t^{-1} != id");
    }
  });

  run("twist-matrix-consistency", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 3);
    for (int i = 0; i < cfg.samples; ++i) {
      Twist t(vdetail::random_primitive(rng, 50), (rng() & 1) ? +1 : -1);
      Curve a = vdetail::random_primitive(rng, 50);
      rec.expect(twist_matrix(t).apply(a) == twist_apply(t, a), "matrix action != twist action");
    }
  });

  run("twist-preserves-intersection", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 4);
    for (int i = 0; i < cfg.samples; ++i) {
      Twist t(vdetail::random_primitive(rng, 50), (rng() & 1) ? +1 : -1);
      Curve a = vdetail::random_primitive(rng, 50), b = vdetail::random_primitive(rng, 50);
      rec.expect(intersect(twist_apply(t, a), twist_apply(t, b)) == intersect(a, b),
                 "intersection not preserved");
    }
  });

  run("twist-orientation-blind", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 5);
    for (int i = 0; i < cfg.samples; ++i) {
      Curve c = vdetail::random_primitive(rng, 50), a = vdetail::random_primitive(rng, 50);
      int s = (rng() & 1) ? +1 : -1;
      rec.expect(twist_apply(Twist(c, s), a) == twist_apply(Twist(-c, s), a),
                 "tau_c != tau_{-c}");
    }
  });

  run("mutation-closure", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3}))
      for (const Solution& s : enumerate_box(P, cfg.box_bound)) {
        rec.expect(is_member(P, mutate_x(P, s)),
                   [&] { return "x-jump leaves " + vdetail::show(P) + " at " + vdetail::show(s); });
        rec.expect(is_member(P, mutate_y(P, s)),
                   [&] { return "y-jump leaves " + vdetail::show(P) + " at " + vdetail::show(s); });
      }
  });

  run("mutation-involution", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3}))
      for (const Solution& s : enumerate_box(P, cfg.box_bound)) {
        rec.expect(mutate_x(P, mutate_x(P, s)) == s, "x-jump not involutive");
        rec.expect(mutate_y(P, mutate_y(P, s)) == s, "y-jump not involutive");
      }
  });

  run("descent-termination", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3})) {
      std::set<Solution> bottom = bottom_set(P);
      for (const Solution& s : enumerate_box(P, cfg.box_bound)) {
        Descent d = descend(P, s);
        rec.expect(bottom.count(d.bottom) == 1,
                   [&] { return "descent misses bottom set at " + vdetail::show(s); });
        Int big = abs(s.x) > abs(s.y) ? abs(s.x) : abs(s.y);
        double cap = 2 * std::log2(std::max(1.0, static_cast<double>(big))) + 2;
        rec.expect(static_cast<double>(d.moves.size()) <= cap,
                   [&] { return "descent too long at " + vdetail::show(s); });
      }
    }
  });

  run("bottom-set-box-agreement", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3})) {
      Int m = bottom_product(P.n);
      std::set<Solution> expect;
      for (const Solution& s : enumerate_box(P, 5))
        if (abs(s.x * s.y) == m) expect.insert(s);
      rec.expect(bottom_set(P) == expect,
                 [&] { return "closed form differs from box at " + vdetail::show(P); });
    }
  });

  run("empty-sets", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({2, -2, 4, -4, 5, -5}))
      rec.expect(enumerate_box(P, cfg.box_bound).empty(),
                 [&] { return "unexpected member in " + vdetail::show(P); });
  });

  run("member-coprimality", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3}))
      for (const Solution& s : enumerate_box(P, cfg.box_bound))
        rec.expect(gcd(abs(s.x), abs(s.y)) == 1,
                   [&] { return "non-coprime member " + vdetail::show(s); });
  });

  run("gcd-condition-equivalence", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, 3, 5}))
      for (const Solution& s : vdetail::quadratic_box(P, 50)) {
        bool found = false;
        for (Int a = -200; a <= 200 && !found; ++a) {
          if (gcd(abs(s.x), abs(a)) != 1) continue;
          Int bx = a * s.y - P.n;
          if (s.x == 0) {
            if (bx != 0) continue;
            for (Int b = -200; b <= 200 && !found; ++b)
              if (gcd(abs(s.y), abs(b)) == 1) found = true;
          } else if (bx % s.x == 0) {
            Int b = bx / s.x;
            if (abs(b) <= 200 && gcd(abs(s.y), abs(b)) == 1) found = true;
          }
        }
        bool gcd_form = gcd(abs(s.x), abs(P.n)) == 1 && gcd(abs(s.y), abs(P.n)) == 1;
        rec.expect(found == gcd_form,
                   [&] { return "coefficient form mismatch at " + vdetail::show(s) + " in " + vdetail::show(P); });
      }
  });

  run("move-monodromy-invariance", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 6);
    for (int i = 0; i < cfg.samples; ++i) {
      Factorization f = vdetail::random_factorization(rng, 6, 50);
      if (f.size() < 2) { --i; continue; }
      std::uniform_int_distribution<size_t> pick(1, f.size() - 1);
      size_t lvl = pick(rng);
      rec.expect(move_up(f, lvl).monodromy() == f.monodromy(), "move_up changes monodromy");
      rec.expect(move_down(f, lvl).monodromy() == f.monodromy(), "move_down changes monodromy");
    }
  });

  run("move-inversion", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 7);
    for (int i = 0; i < cfg.samples; ++i) {
      Factorization f = vdetail::random_factorization(rng, 6, 50);
      if (f.size() < 2) { --i; continue; }
      std::uniform_int_distribution<size_t> pick(1, f.size() - 1);
      size_t lvl = pick(rng);
      rec.expect(move_down(move_up(f, lvl), lvl) == f, "down does not undo up");
      rec.expect(move_up(move_down(f, lvl), lvl) == f, "up does not undo down");
    }
  });

  run("datum-triple-tracking", [&](Recorder& rec) {
    std::mt19937_64 rng(seed + 8);
    for (int i = 0; i < cfg.samples; ++i) {
      HorizontalDatum d{vdetail::random_primitive(rng, 30), vdetail::random_primitive(rng, 30),
                        (rng() & 1) ? +1 : -1, (rng() & 1) ? +1 : -1};
      SolParams P{d.n(), +1, d.delta1, d.delta2};
      HorizontalDatum u = datum_move_up(d), w = datum_move_down(d);
      rec.expect(u.n() == d.n() && u.x() == d.y() && u.y() == hat_x(P, d.solution()),
                 "up move does not send (x,y,n) to (y,hat_x,n)");
      rec.expect(w.n() == d.n() && w.y() == d.x() && w.x() == hat_y(P, d.solution()),
                 "down move does not send (x,y,n) to (hat_y,x,n)");
      rec.expect(u.factorization() == move_up(d.factorization(), 1), "up move shadow mismatch");
      rec.expect(w.factorization() == move_down(d.factorization(), 1), "down move shadow mismatch");
    }
  });

  run("epsilon-move-invariance", [&](Recorder& rec) {
    for (const HorizontalDatum& d : vdetail::box_data(40)) {
      int e = d.epsilon();
      rec.expect(datum_move_up(d).epsilon() == e, "up move changes epsilon");
      rec.expect(datum_move_down(d).epsilon() == e, "down move changes epsilon");
    }
    std::mt19937_64 rng(seed + 9);
    int done = 0;
    for (int attempt = 0; attempt < 20000 && done < cfg.samples / 4; ++attempt) {
      Factorization f = vdetail::random_factorization(rng, 4, 3);
      if (f.size() < 2 || !gives_s3(f.monodromy())) continue;
      ++done;
      int e = epsilon(f.monodromy(), f.sign_product());
      std::uniform_int_distribution<size_t> pick(1, f.size() - 1);
      size_t lvl = pick(rng);
      Factorization g = (rng() & 1) ? move_up(f, lvl) : move_down(f, lvl);
      rec.expect(epsilon(g.monodromy(), g.sign_product()) == e, "move changes epsilon");
    }
  });

  run("fibonacci-recurrence", [&](Recorder& rec) {
    for (long m = -50; m <= 48; ++m)
      rec.expect(fib(m + 2) == fib(m + 1) + fib(m), "recurrence fails");
    for (long m = 0; m <= 50; ++m) {
      Int expect = m % 2 == 0 ? -fib(m) : fib(m);
      rec.expect(fib(-m) == expect, "negation identity fails");
    }
    rec.expect(fib(-1) == 1 && fib(0) == 0 && fib(1) == 1, "seed values wrong");
  });

  run("vajda-identity", [&](Recorder& rec) {
    for (long r = -20; r <= 20; ++r)
      for (long m = -20; m <= 20; ++m)
        for (long j = -20; j <= 20; ++j)
          rec.expect(vajda(r, m, j), [&] {
            std::ostringstream os;
            os << "vajda(" << r << "," << m << "," << j << ")";
            return os.str();
          });
  });

  run("family-set-membership", [&](Recorder& rec) {
    for (long k = 0; k <= 30; ++k) {
      for (OrbitOp op : {OrbitOp::Id, OrbitOp::Swap, OrbitOp::Neg, OrbitOp::SwapNeg})
        rec.expect(is_member(family_params(FamilyTag::S), family_element({FamilyTag::S, k, op})),
                   "S family escapes its set");
      for (FamilyTag t : {FamilyTag::T1, FamilyTag::T2})
        for (OrbitOp op : {OrbitOp::Id, OrbitOp::Neg}) {
          Solution s = family_element({t, k, op});
          rec.expect(is_member(family_params(t), s), "T family escapes its set");
          rec.expect(is_member(sym_S(family_params(t)), sym_S(s)), "swapped T family escapes");
        }
    }
    for (const Solution& s : finite_family())
      rec.expect(is_member(family_params(FamilyTag::Finite), s), "finite family escapes");
  });

  run("minus-matrix-closed-form", [&](Recorder& rec) {
    for (long k = 0; k <= 30; ++k)
      rec.expect(minus_vs_matrix(k) == Solution{-fib(2 * k - 1), fib(2 * k + 1)},
                 "matrix orbit leaves the Fibonacci form");
  });

  run("family-coverage", [&](Recorder& rec) {
    for (const SolParams& P : vdetail::param_grid({1, -1, 3, -3}))
      rec.expect(family_covers(P, cfg.coverage_bound),
                 [&] { return "box member outside families in " + vdetail::show(P); });
  });

  run("classification-move-stability", [&](Recorder& rec) {
    for (const HorizontalDatum& d : vdetail::box_data(cfg.stability_bound)) {
      Classification c = classify_pair(d);
      for (const HorizontalDatum& e : {datum_move_up(d), datum_move_down(d)}) {
        Classification ce = classify_pair(e);
        rec.expect(ce.kind == c.kind && ce.orientation == c.orientation && ce.epsilon == c.epsilon,
                   [&] { return "classification moved at " + vdetail::show(d.solution()); });
      }
    }
  });

  run("mirror-covariance", [&](Recorder& rec) {
    for (const HorizontalDatum& d : vdetail::box_data(40)) {
      HorizontalDatum mir{Curve(d.gamma1.p, -d.gamma1.q), Curve(d.gamma2.p, -d.gamma2.q),
                          -d.delta1, -d.delta2};
      Classification c = classify_pair(d), cm = classify_pair(mir);
      rec.expect(*cm.epsilon == -*c.epsilon, "mirror does not flip epsilon");
      rec.expect(cm.orientation == -c.orientation, "mirror does not flip orientation");
      rec.expect(c.ball_pair.has_value() == cm.ball_pair.has_value(), "mirror changes pair shape");
      if (c.ball_pair) {
        auto flip = [](const RationalBall& b) {
          return RationalBall(b.p, b.q, b.p == 1 ? +1 : -b.orientation);
        };
        rec.expect(cm.ball_pair->first == flip(c.ball_pair->first) &&
                       cm.ball_pair->second == flip(c.ball_pair->second),
                   "mirror does not negate the balls");
      }
    }
  });

  run("ball-pair-boundary-consistency", [&](Recorder& rec) {
    for (long m = 0; m <= cfg.m_max; ++m)
      for (BallFamily fam : {BallFamily::B, BallFamily::BPrime}) {
        auto [hi, lo] = ball_pairs(m, fam);
        for (const RationalBall& b : {hi, lo}) {
          LensSpace l = lens_boundary(b);
          rec.expect(l.a == b.p * b.p, "lens order is not p^2");
          rec.expect(gcd(l.a, l.b) == 1, "lens parameters not coprime");
        }
      }
  });

  run("lens-fold-identity", [&](Recorder& rec) {
    for (long p = 2; p <= 50; ++p)
      for (long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        Int pp = Int(p) * p;
        rec.expect(mod_floor((Int(p) * q - 1) * (Int(p) * (p - q) - 1), pp) == mod_floor(Int(1), pp),
                   "(pq-1)(p(p-q)-1) != 1 mod p^2");
        rec.expect(lens_oriented_equal(LensSpace(pp, Int(p) * q - 1), LensSpace(pp, Int(p) * (p - q) - 1)),
                   "boundary of the two q-folds differs");
      }
  });

  run("mirror-rejection", [&](Recorder& rec) {
    for (long p = 2; p <= 50; ++p)
      for (long q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        Int pp = Int(p) * p;
        LensSpace plus(pp, Int(p) * q - 1);
        LensSpace minus(pp, pp - Int(p) * q + 1);
        rec.expect(!lens_oriented_equal(plus, minus), "mirror lens spaces compare equal");
      }
  });

  run("route-agreement", [&](Recorder& rec) {
    for (long m = 0; m <= cfg.m_max; ++m)
      for (BallFamily fam : {BallFamily::B, BallFamily::BPrime}) {
        HorizontalDatum d = family_datum(m, fam);
        Classification c = classify_pair(d);
        rec.expect(c.ball_pair.has_value(), "family datum lost its ball pair");
        if (!c.ball_pair) continue;
        auto [hi, lo] = ball_pairs(m, fam);
        std::multiset<std::string> route_a{vdetail::show(Solution{hi.p, hi.q}) + std::to_string(hi.orientation),
                                           vdetail::show(Solution{lo.p, lo.q}) + std::to_string(lo.orientation)};
        std::multiset<std::string> route_b{
            vdetail::show(Solution{c.ball_pair->first.p, c.ball_pair->first.q}) +
                std::to_string(c.ball_pair->first.orientation),
            vdetail::show(Solution{c.ball_pair->second.p, c.ball_pair->second.q}) +
                std::to_string(c.ball_pair->second.orientation)};
        rec.expect(route_a == route_b,
                   [&] { return "routes disagree at m=" + std::to_string(m); });
      }
  });

  run("valid-n-constraint", [&](Recorder& rec) {
    for (const HorizontalDatum& d : vdetail::box_data(60)) {
      Int an = abs(d.n());
      rec.expect(an == 1 || an == 3, "valid datum with |n| outside {1,3}");
    }
  });

  return results;
}

}  // namespace horokit
