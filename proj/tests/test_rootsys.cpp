#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g2voa/rootsys.hpp"
#include "oracle_eps.hpp"

using namespace g2voa;

TEST_CASE("root set membership") {
  int count = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      if (is_root(Root{a, b})) ++count;
  CHECK(count == 12);
  CHECK(is_positive_root(kTheta));
  CHECK(!is_root(Root{1, 2}));
  CHECK(!is_root(Root{0, 0}));
}

TEST_CASE("inner product values") {
  CHECK(inner_product(kTheta, kTheta) == Q(2));
  CHECK(inner_product(kAlpha, kAlpha) == Q(2, 3));
  CHECK(inner_product(kAlpha, -kAlpha) == Q(-2, 3));
  CHECK(inner_product(kBeta, kBeta) == Q(2));
  CHECK(inner_product(kAlpha, kBeta) == Q(-1));
}

TEST_CASE("inner product matches epsilon realization") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          Root x{a, b}, y{c, d};
          CHECK(inner_product(x, y) ==
                testing::eps_inner(testing::eps_realize(x),
                                   testing::eps_realize(y)));
        }
}

TEST_CASE("inner product symmetry and Weyl invariance") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-10, 10);
  for (int i = 0; i < 200; ++i) {
    Root x{d(rng), d(rng)}, y{d(rng), d(rng)};
    CHECK(inner_product(x, y) == inner_product(y, x));
    CHECK(inner_product(reflect_alpha(x), reflect_alpha(y)) ==
          inner_product(x, y));
    CHECK(inner_product(reflect_beta(x), reflect_beta(y)) ==
          inner_product(x, y));
  }
}

TEST_CASE("coroot expansions") {
  auto expect = [](Root r, int c10, int c01) {
    CorootExpansion e = coroot_expansion(r);
    CHECK(e.c10 == c10);
    CHECK(e.c01 == c01);
  };
  expect(Root{1, 0}, 1, 0);
  expect(Root{0, 1}, 0, 1);
  expect(Root{1, 1}, 1, 3);
  expect(Root{2, 1}, 2, 3);
  expect(Root{3, 1}, 1, 1);
  expect(Root{3, 2}, 1, 2);
  CHECK_THROWS_AS(coroot_expansion(Root{1, 2}), std::domain_error);
}

TEST_CASE("coroot identity H11 + H31 = 2 H32") {
  CorootExpansion h11 = coroot_expansion(Root{1, 1});
  CorootExpansion h31 = coroot_expansion(Root{3, 1});
  CorootExpansion h32 = coroot_expansion(Root{3, 2});
  CHECK(h11.c10 + h31.c10 == 2 * h32.c10);
  CHECK(h11.c01 + h31.c01 == 2 * h32.c01);
}

TEST_CASE("pairing examples") {
  CHECK(pairing(kRhoBar, kAlpha) == Q(1));
  CHECK(pairing(FiniteWeight{Q(1), Q(-4, 3)}, kBeta) == Q(-4, 3));
  CHECK(pairing(FiniteWeight{Q(0), Q(-2, 3)}, Root{2, 1}) == Q(-2));
  CHECK_THROWS_AS(pairing(kRhoBar, Root{2, 2}), std::domain_error);
}

TEST_CASE("pairing matches brute-force coroot computation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int i = 0; i < 40; ++i) {
    FiniteWeight mu{Q(num(rng), 3), Q(num(rng), 3)};
    for (Root gamma : kPositiveRoots) {
      CHECK(pairing(mu, gamma) == testing::eps_pairing(mu, gamma));
      CHECK(pairing(mu, -gamma) == -pairing(mu, gamma));
    }
  }
}

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dimension(FiniteWeight{Q(0), Q(0)}) == 1);
  CHECK(weyl_dimension(kOmega1) == 7);
  CHECK(weyl_dimension(kOmega2) == 14);
  CHECK(weyl_dimension(FiniteWeight{Q(2), Q(0)}) == 27);
  CHECK_THROWS_AS(weyl_dimension(FiniteWeight{Q(-1), Q(0)}),
                  std::domain_error);
  CHECK_THROWS_AS(weyl_dimension(FiniteWeight{Q(1, 2), Q(0)}),
                  std::domain_error);
}
