#include "horokit/families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace horokit;

TEST_CASE("fibonacci numbers, both directions") {
  std::vector<long> vals{-21, 13, -8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8, 13, 21};
  for (long m = -8; m <= 8; ++m) CHECK(fib(m) == vals[static_cast<size_t>(m + 8)]);
  CHECK(fib(7) == 13);
  CHECK(fib(-5) == 5);
  CHECK(fib(30) == 832040);

  for (long m = -50; m <= 48; ++m) CHECK(fib(m + 2) == fib(m + 1) + fib(m));
  for (long m = 0; m <= 50; ++m) {
    Int expect = fib(m);
    if (m % 2 == 0) expect = -expect;
    CHECK(fib(-m) == expect);
  }
}

TEST_CASE("vajda identity") {
  CHECK(fib(1) * fib(7) - fib(3) * fib(5) == 3);
  CHECK(vajda(1, 3, 4));
  CHECK(fib(3) * fib(5) - fib(4) * fib(4) == 1);
  CHECK(vajda(3, 4, 1));

  for (long r = -10; r <= 10; ++r)
    for (long m = -10; m <= 10; ++m)
      for (long j = -10; j <= 10; ++j) CHECK(vajda(r, m, j));
}

TEST_CASE("family elements") {
  CHECK(family_element({FamilyTag::S, 2, OrbitOp::Id}) == Solution{-2, 5});
  CHECK(family_element({FamilyTag::T1, 0, OrbitOp::Id}) == Solution{1, 0});
  CHECK(family_element({FamilyTag::S, 0, OrbitOp::SwapNeg}) == Solution{-1, 1});
  CHECK(family_element({FamilyTag::T2, 1, OrbitOp::Neg}) == Solution{-2, 3});

  CHECK_THROWS_AS(family_element({FamilyTag::T1, 1, OrbitOp::Swap}), std::invalid_argument);
  CHECK_THROWS_AS(family_element({FamilyTag::Finite, 0, OrbitOp::Id}), std::domain_error);
  CHECK_THROWS_AS(family_element({FamilyTag::S, -1, OrbitOp::Id}), std::invalid_argument);
}

TEST_CASE("family elements are members of their sets") {
  for (long k = 0; k <= 30; ++k) {
    for (OrbitOp op : {OrbitOp::Id, OrbitOp::Swap, OrbitOp::Neg, OrbitOp::SwapNeg})
      CHECK(is_member(family_params(FamilyTag::S), family_element({FamilyTag::S, k, op})));
    for (FamilyTag t : {FamilyTag::T1, FamilyTag::T2})
      for (OrbitOp op : {OrbitOp::Id, OrbitOp::Neg}) {
        Solution s = family_element({t, k, op});
        CHECK(is_member(family_params(t), s));
        CHECK(is_member(sym_S(family_params(t)), sym_S(s)));
      }
  }
  for (const Solution& s : finite_family())
    CHECK(is_member(family_params(FamilyTag::Finite), s));
}

TEST_CASE("matrix form of the minus family") {
  CHECK(minus_vs_matrix(0) == Solution{-1, 1});
  CHECK(minus_vs_matrix(1) == Solution{-1, 2});
  CHECK(minus_vs_matrix(4) == Solution{-13, 34});
  for (long k = 0; k <= 30; ++k)
    CHECK(minus_vs_matrix(k) == Solution{-fib(2 * k - 1), fib(2 * k + 1)});
}

TEST_CASE("markov triples") {
  CHECK(is_markov(1, 1, 1));
  CHECK(is_markov(1, 5, 13));
  CHECK(is_markov(1, 2, 5));
  CHECK_FALSE(is_markov(1, 2, 4));
  CHECK_FALSE(is_markov(0, 0, 0));
  for (long m = 0; m <= 30; ++m) CHECK(is_markov(1, fib(2 * m - 1), fib(2 * m + 1)));
}

TEST_CASE("family coverage of boxes") {
  CHECK(family_covers(SolParams{3, -1, +1, +1}, 400));
  CHECK(family_covers(SolParams{1, -1, +1, -1}, 400));
  CHECK(family_covers(SolParams{1, -1, -1, -1}, 400));
  CHECK(family_covers(SolParams{3, -1, -1, +1}, 100));  // provably empty: vacuous
  CHECK(family_covers(SolParams{5, -1, +1, +1}, 50));

  // the covering pairs at bound 400 reach (-F_11, F_13) = (-89, 233)
  std::set<Solution> fam = family_box(SolParams{3, -1, +1, +1}, 400);
  CHECK(fam.count(Solution{-89, 233}) == 1);
  CHECK(fam.count(Solution{-233, 610}) == 0);
}
