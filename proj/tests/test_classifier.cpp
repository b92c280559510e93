#include "horokit/classifier.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace horokit;

TEST_CASE("rational ball canonical form") {
  RationalBall b(2, 1, +1);
  CHECK(b.p == 2);
  CHECK(b.q == 1);
  CHECK(b.orientation == +1);

  CHECK(RationalBall(5, 4, +1) == RationalBall(5, 1, +1));   // q and p-q fold
  CHECK(RationalBall(5, -1, +1) == RationalBall(5, 1, +1));  // q reduced mod p
  CHECK(RationalBall(1, 7, -1) == RationalBall(1, 0, +1));   // B^4 is amphichiral
  CHECK(RationalBall(3, 2, -1).q == 1);

  CHECK_THROWS_AS(RationalBall(4, 2, +1), std::invalid_argument);
  CHECK_THROWS_AS(RationalBall(0, 1, +1), std::invalid_argument);
  CHECK_THROWS_AS(RationalBall(2, 1, 0), std::invalid_argument);
  CHECK(RationalBall(2, 1, +1).is_b4() == false);
  CHECK(RationalBall(1, 0, +1).is_b4());
}

TEST_CASE("single-twist classification") {
  Classification prod = classify_one(Curve(1, 0), -1);
  CHECK(prod.kind == CobordismKind::Product);
  CHECK(prod.orientation == +1);
  CHECK(prod.ball == RationalBall(1, 0, +1));
  CHECK(prod.type == DecompositionType{1, 1, 1, 0});
  CHECK(classify_one(Curve(1, 5), +1).kind == CobordismKind::Product);

  Classification b1 = classify_one(Curve(0, 1), +1);
  CHECK(b1.kind == CobordismKind::NonzeroB1);
  CHECK_FALSE(b1.ball.has_value());

  Classification plus = classify_one(Curve(2, 1), +1);
  CHECK(plus.kind == CobordismKind::BallComplement);
  CHECK(plus.orientation == +1);
  CHECK(plus.ball == RationalBall(2, 1, +1));

  Classification minus = classify_one(Curve(2, 1), -1);
  CHECK(minus.orientation == -1);
  CHECK(minus.ball == RationalBall(2, 1, -1));

  // q enters mod p, orientation of the curve does not matter
  CHECK(classify_one(Curve(5, -3), +1).ball == RationalBall(5, 3, +1));
  CHECK(classify_one(Curve(5, -3), -1).ball == RationalBall(5, 2, -1));
  CHECK(classify_one(Curve(-2, -1), +1).ball == RationalBall(2, 1, +1));
  CHECK(classify_one(Curve(5, 7), -1).ball == RationalBall(5, 2, -1));
}

TEST_CASE("pair classification") {
  HorizontalDatum d{Curve(1, 0), Curve(-1, -3), +1, +1};
  Classification c = classify_pair(d);
  CHECK(c.kind == CobordismKind::Cp2Complement);
  CHECK(c.epsilon == -1);
  CHECK(c.orientation == +1);
  CHECK(c.type == DecompositionType{1, 1, 2, 0});
  REQUIRE(c.triple.has_value());
  CHECK((*c.triple)[0] == 1);
  CHECK((*c.triple)[1] == -1);
  CHECK((*c.triple)[2] == 3);
  REQUIRE(c.ball_pair.has_value());
  CHECK(c.ball_pair->first == RationalBall(1, 0, +1));
  CHECK(c.ball_pair->second == RationalBall(1, 0, +1));

  // the m=1 pair {B_{2,1}, B^4}
  HorizontalDatum d1{Curve(2, 1), Curve(-1, -2), +1, +1};
  Classification c1 = classify_pair(d1);
  REQUIRE(c1.ball_pair.has_value());
  CHECK(c1.ball_pair->first == RationalBall(2, 1, +1));
  CHECK(c1.ball_pair->second == RationalBall(1, 0, +1));

  // cancelling pair: gamma2 = lambda has b_1 > 0 upstairs, no ball pair
  HorizontalDatum canc{Curve(1, 0), Curve(0, 1), -1, -1};
  Classification cc = classify_pair(canc);
  CHECK(cc.kind == CobordismKind::Cp2Complement);
  CHECK(cc.epsilon == -1);
  CHECK(cc.orientation == +1);
  CHECK_FALSE(cc.ball_pair.has_value());

  // no datum with n = 1, delta = (+1,+1) bounds S^3 with eps = -1
  HorizontalDatum inv{Curve(1, 0), Curve(-2, -1), +1, +1};
  CHECK_THROWS_AS(classify_pair(inv), std::domain_error);

  HorizontalDatum parallel{Curve(0, 1), Curve(0, 1), +1, +1};
  CHECK_THROWS_AS(classify_pair(parallel), std::domain_error);
  HorizontalDatum cancel_same{Curve(2, 1), Curve(2, 1), +1, -1};
  CHECK_THROWS_AS(classify_pair(cancel_same), std::domain_error);
}

TEST_CASE("mirror covariance") {
  HorizontalDatum d{Curve(2, 1), Curve(-1, -2), +1, +1};
  HorizontalDatum mir{Curve(2, -1), Curve(-1, 2), -1, -1};
  Classification c = classify_pair(d), cm = classify_pair(mir);
  CHECK(*cm.epsilon == -*c.epsilon);
  CHECK(cm.orientation == -c.orientation);
  REQUIRE(cm.ball_pair.has_value());
  CHECK(cm.ball_pair->first.p == c.ball_pair->first.p);
  CHECK(cm.ball_pair->first.q == c.ball_pair->first.q);
  CHECK(cm.ball_pair->first.orientation == -c.ball_pair->first.orientation);
  CHECK(cm.ball_pair->second.is_b4());
}

TEST_CASE("ball families") {
  CHECK(family_ball(BallFamily::B, 0) == RationalBall(1, 0, +1));
  CHECK(family_ball(BallFamily::B, 2) == RationalBall(2, 1, +1));
  CHECK(family_ball(BallFamily::B, 3) == RationalBall(5, 1, +1));
  CHECK(family_ball(BallFamily::B, 4) == RationalBall(13, 2, +1));
  CHECK(family_ball(BallFamily::BPrime, 2) == RationalBall(2, 1, +1));
  CHECK(family_ball(BallFamily::BPrime, 3) == RationalBall(3, 1, -1));

  auto [hi, lo] = ball_pairs(2, BallFamily::B);
  CHECK(hi == RationalBall(5, 1, +1));
  CHECK(lo == RationalBall(2, 1, +1));
  auto [hip, lop] = ball_pairs(2, BallFamily::BPrime);
  CHECK(hip == RationalBall(3, 1, -1));
  CHECK(lop == RationalBall(2, 1, +1));
  auto [h0, l0] = ball_pairs(0, BallFamily::B);
  CHECK(h0.is_b4());
  CHECK(l0.is_b4());
  CHECK_THROWS_AS(ball_pairs(-1, BallFamily::B), std::invalid_argument);
}

TEST_CASE("q residues") {
  ResiduePair r = q_residues(ResidueCase::N3Up, 3);
  CHECK(r.q1.modulus == 13);
  CHECK(r.q1.plus == 2);
  CHECK(r.q1.minus == 11);
  CHECK(r.q2.modulus == 5);
  CHECK(r.q2.plus == 1);
  CHECK(r.q2.minus == 4);
  CHECK(r.q1.satisfied_by(-2));
  CHECK(r.q1.satisfied_by(15));
  CHECK_FALSE(r.q1.satisfied_by(3));

  ResiduePair a = q_residues(ResidueCase::N1A, 2);
  CHECK(a.q1.modulus == 5);
  CHECK(a.q1.plus == 3);   // F_4 = 3
  CHECK(a.q1.minus == 2);  // also -F_3 mod 5: the two sign families coincide
  CHECK(a.q2.modulus == 3);
  CHECK(a.q2.plus == 2);

  // k = 0: moduli F_{+-1} = 1, constraints vacuous
  ResiduePair z = q_residues(ResidueCase::N3Up, 0);
  CHECK(z.q1.modulus == 1);
  CHECK(z.q1.satisfied_by(12345));
  CHECK_THROWS_AS(q_residues(ResidueCase::N1A, 0), std::invalid_argument);
  CHECK_THROWS_AS(q_residues(ResidueCase::N1B, 0), std::invalid_argument);
  CHECK(q_residues(ResidueCase::N1C, 0).q2.modulus == 1);
}

TEST_CASE("lens space boundaries") {
  CHECK(lens_boundary(RationalBall(2, 1, +1)) == LensSpace(4, 1));
  CHECK(lens_boundary(RationalBall(5, 1, +1)) == LensSpace(25, 4));
  CHECK(lens_boundary(RationalBall(1, 0, +1)) == LensSpace(1, 0));
  CHECK(lens_boundary(RationalBall(3, 1, -1)) == LensSpace(9, 7));

  CHECK(lens_oriented_equal(LensSpace(4, 1), LensSpace(4, 1)));
  CHECK(lens_oriented_equal(LensSpace(25, 4), LensSpace(25, 19)));  // 4*19 = 76 = 3*25+1
  CHECK_FALSE(lens_oriented_equal(LensSpace(25, 4), LensSpace(25, 21)));
  CHECK_FALSE(lens_oriented_equal(LensSpace(25, 4), LensSpace(4, 1)));

  // the two q-folds of the same ball bound the same oriented lens space
  for (long p = 2; p <= 20; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      LensSpace l1(Int(p) * p, Int(p) * q - 1);
      LensSpace l2(Int(p) * p, Int(p) * (p - q) - 1);
      CHECK(lens_oriented_equal(l1, l2));
    }
}

TEST_CASE("kirby records") {
  HorizontalDatum d{Curve(1, 0), Curve(-1, -3), +1, +1};
  KirbyDiagram k = emit_kirby(d);
  CHECK(k.one_handles == 1);
  REQUIRE(k.two_handles.size() == 2);
  CHECK(k.two_handles[0] == KirbyTwoHandle{Curve(1, 0), -1});
  CHECK(k.two_handles[1] == KirbyTwoHandle{Curve(1, 3), 2});

  KirbyDiagram s = emit_kirby(Curve(2, 1), +1, false);
  CHECK(s.one_handles == 0);
  CHECK(s.two_handles[0] == KirbyTwoHandle{Curve(2, 1), 1});
  CHECK_THROWS_AS(emit_kirby(Curve(3, 1), +1, false), std::domain_error);

  KirbyDiagram m = emit_kirby(Curve(1, 0), -1);
  CHECK(m.one_handles == 1);
  CHECK(m.two_handles[0] == KirbyTwoHandle{Curve(1, 0), 1});
}
