#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g2voa/affine.hpp"
#include "g2voa/serialize.hpp"
#include "g2voa/singular.hpp"

using namespace g2voa;

namespace {

const AffineAlgebra& alg() {
  static const AffineAlgebra a;
  return a;
}

AffineGen rand_gen(std::mt19937& rng) {
  std::uniform_int_distribution<int> base(0, kBasisCount - 1);
  std::uniform_int_distribution<int> mode(-2, 2);
  return AffineGen{mode(rng), basis_id(base(rng))};
}

AffElem rand_product(std::mt19937& rng, int len) {
  AffElem x = alg().one();
  for (int i = 0; i < len; ++i) {
    AffineGen g = rand_gen(rng);
    x = alg().multiply(x, alg().gen(g.base, g.mode));
  }
  return x;
}

}  // namespace

TEST_CASE("affine bracket examples") {
  AffElem lhs = alg().bracket_pair(AffineGen{-1, BasisId::E32},
                                   AffineGen{1, BasisId::F32});
  AffElem rhs = AffineAlgebra::sub(alg().coroot(kTheta, 0), alg().k_central());
  CHECK(lhs == rhs);

  CHECK(alg()
            .bracket_pair(AffineGen{0, BasisId::H10},
                          AffineGen{0, BasisId::H01})
            .is_zero());

  AffElem lhs2 = alg().bracket_pair(AffineGen{-1, BasisId::E10},
                                    AffineGen{1, BasisId::F10});
  AffElem rhs2 = AffineAlgebra::sub(
      alg().coroot(kAlpha, 0), AffineAlgebra::scale(alg().k_central(), Q(3)));
  CHECK(lhs2 == rhs2);
}

TEST_CASE("multiply examples") {
  std::mt19937 rng(3);
  AffElem x = rand_product(rng, 3);
  CHECK(alg().multiply(alg().one(), x) == x);

  // E10(0) E21(-1) = E21(-1) E10(0) + [E10(0), E21(-1)], and the commutator
  // is [E10, E21](-1) = -3 E31(-1) because E31 = (1/3)[E21, E10].
  AffElem prod = alg().multiply(alg().gen(BasisId::E10, 0),
                                alg().gen(BasisId::E21, -1));
  AffElem want = AffineAlgebra::add(
      alg().multiply(alg().gen(BasisId::E21, -1), alg().gen(BasisId::E10, 0)),
      AffineAlgebra::scale(alg().gen(BasisId::E31, -1), Q(-3)));
  CHECK(prod == want);
  // equivalently, [a, E10(0)] = 3 E31(-1)
  CHECK(alg().commutator(alg().gen(BasisId::E21, -1),
                         alg().gen(BasisId::E10, 0)) ==
        AffineAlgebra::scale(alg().gen(BasisId::E31, -1), Q(3)));

  AffElem prod2 = alg().multiply(alg().gen(BasisId::F21, 0),
                                 alg().gen(BasisId::E21, 0));
  AffElem want2 = AffineAlgebra::sub(
      alg().multiply(alg().gen(BasisId::E21, 0), alg().gen(BasisId::F21, 0)),
      alg().coroot(Root{2, 1}, 0));
  CHECK(prod2 == want2);
}

TEST_CASE("associativity on random small elements") {
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    AffElem x = rand_product(rng, 2);
    AffElem y = rand_product(rng, 2);
    AffElem z = rand_product(rng, 2);
    CHECK(alg().multiply(alg().multiply(x, y), z) ==
          alg().multiply(x, alg().multiply(y, z)));
  }
}

TEST_CASE("canonical form is idempotent and round-trips") {
  std::mt19937 rng(23);
  for (int i = 0; i < 10; ++i) {
    AffElem x = rand_product(rng, 3);
    typename PbwEngine<AffineCtx>::Work work(x.terms.begin(), x.terms.end());
    CHECK(alg().engine().normalize(work) == x);
    CHECK(parse_affine(to_string(x), alg()) == x);
  }
  CHECK(parse_affine("0", alg()).is_zero());
}

TEST_CASE("Lie consistency of multiply and bracket") {
  std::mt19937 rng(29);
  for (int i = 0; i < 60; ++i) {
    AffineGen x = rand_gen(rng), y = rand_gen(rng);
    AffElem via_mult =
        alg().commutator(alg().gen(x.base, x.mode), alg().gen(y.base, y.mode));
    CHECK(via_mult == alg().bracket_pair(x, y));
  }
}

TEST_CASE("grading is additive under multiplication") {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    AffineGen x = rand_gen(rng), y = rand_gen(rng);
    AffElem prod =
        alg().multiply(alg().gen(x.base, x.mode), alg().gen(y.base, y.mode));
    if (prod.is_zero()) continue;
    auto w = AffineAlgebra::weight_of(prod);
    REQUIRE(w.has_value());
    CHECK(w->finite == weight_of_basis(x.base) + weight_of_basis(y.base));
    CHECK(w->delta == x.mode + y.mode);
  }
}

TEST_CASE("weight_of the singular generators") {
  SingularGenerators s = build_generators(alg());
  auto wu = AffineAlgebra::weight_of(s.u);
  REQUIRE(wu.has_value());
  CHECK(wu->finite == Root{4, 2});
  CHECK(wu->delta == -2);

  CHECK(AffineAlgebra::weight_of(alg().one()).value() ==
        HWeight{Root{0, 0}, 0});

  // a itself has weight (2a+b, -1); a^2 and b share (4a+2b, -2), so a^2 + b
  // is homogeneous while a + b is not.
  auto wa = AffineAlgebra::weight_of(s.a);
  REQUIRE(wa.has_value());
  CHECK(wa->finite == Root{2, 1});
  CHECK(wa->delta == -1);
  CHECK(!AffineAlgebra::weight_of(AffineAlgebra::add(s.a, s.b)).has_value());

  auto wab = AffineAlgebra::weight_of(
      AffineAlgebra::add(alg().multiply(s.a, s.a), s.b));
  REQUIRE(wab.has_value());
  CHECK(wab->finite == Root{4, 2});
  CHECK(wab->delta == -2);
}

TEST_CASE("vacuum application") {
  CHECK(alg().apply_to_vacuum(alg().gen(BasisId::E10, 0), Q(1)).is_zero());

  // H10(0) E10(-1) 1 = 2 E10(-1) 1
  AffElem x = alg().multiply(alg().gen(BasisId::H10, 0),
                             alg().gen(BasisId::E10, -1));
  VacuumState s = alg().apply_to_vacuum(x, Q(-5, 3));
  VacuumState want = alg().apply_to_vacuum(
      AffineAlgebra::scale(alg().gen(BasisId::E10, -1), Q(2)), Q(-5, 3));
  CHECK(s == want);

  // u.1 at k = -5/3 is annihilated by F32(1)
  SingularGenerators g = build_generators(alg());
  VacuumState u1 = alg().apply_to_vacuum(g.u, Q(-5, 3));
  CHECK(!u1.is_zero());
  CHECK(alg().act(alg().gen(BasisId::F32, 1), u1).is_zero());
}

TEST_CASE("vacuum application agrees with factorwise action") {
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<int> len(1, 4);
    int n = len(rng);
    std::vector<AffineGen> gens;
    for (int j = 0; j < n; ++j) gens.push_back(rand_gen(rng));
    Q level(-4, 3);
    AffElem prod = alg().one();
    for (const AffineGen& gg : gens)
      prod = alg().multiply(prod, alg().gen(gg.base, gg.mode));
    VacuumState direct = alg().apply_to_vacuum(prod, level);
    VacuumState acc = alg().apply_to_vacuum(alg().one(), level);
    for (size_t j = gens.size(); j-- > 0;)
      acc = alg().act(alg().gen(gens[j].base, gens[j].mode), acc);
    CHECK(direct == acc);
  }
}
