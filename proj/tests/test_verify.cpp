#include "doctest.h"

#include "vak/fock.hpp"
#include "vak/verify.hpp"

using namespace vak;

TEST_CASE("axiom suite passes on the Heisenberg model") {
  auto m = HeisenbergModel::make(Rational(0), 3);
  Report r = verify_axioms(*m, 3, 40, 7);
  INFO(r.witness);
  CHECK(r.passed);
  CHECK(r.checks > 1000);
  CHECK(r.skipped == 0);

  auto m1 = HeisenbergModel::make(Rational(1), 3);
  Report r1 = verify_axioms(*m1, 3, 40, 7);
  INFO(r1.witness);
  CHECK(r1.passed);
}

TEST_CASE("axiom suite passes on the A1 lattice model") {
  auto m = LatticeModel::make({{"g"}, {{-2}}}, 2, 1);
  Report r = verify_axioms(*m, 2, 40, 11);
  INFO(r.witness);
  CHECK(r.passed);
  CHECK(r.skipped == 0);
}

TEST_CASE("associativity and quasi-symmetry suites") {
  auto m = HeisenbergModel::make(Rational(1, 2), 3);
  Report ra = verify_assoc(*m, 3, 30, 5);
  INFO(ra.witness);
  CHECK(ra.passed);
  Report rq = verify_quasisym(*m, 3, 30, 5);
  INFO(rq.witness);
  CHECK(rq.passed);

  auto lat = LatticeModel::make({{"g"}, {{-2}}}, 2, 1);
  Report la = verify_assoc(*lat, 2, 20, 5);
  INFO(la.witness);
  CHECK(la.passed);
  Report lq = verify_quasisym(*lat, 2, 20, 5);
  INFO(lq.witness);
  CHECK(lq.passed);
}

TEST_CASE("corrupted cocycle fails the axiom suite with a witness") {
  // On a lattice with an odd off-diagonal pairing, dropping the cocycle sign
  // breaks the commutator condition, so locality/commutator checks must fail.
  auto bad = LatticeModel::make({{"g1", "g2"}, {{-2, 1}, {1, -2}}}, 1, 2,
                                /*corrupt_cocycle=*/true);
  Report r = verify_axioms(*bad, 1, 20, 3);
  CHECK(!r.passed);
  CHECK(!r.witness.empty());

  auto good = LatticeModel::make({{"g1", "g2"}, {{-2, 1}, {1, -2}}}, 1, 2);
  Report g = verify_axioms(*good, 1, 20, 3);
  INFO(g.witness);
  CHECK(g.passed);
}

TEST_CASE("sl2 suite") {
  auto m0 = HeisenbergModel::make(Rational(0), 4);
  Report r0 = verify_sl2(*m0, 4);
  INFO(r0.witness);
  CHECK(r0.passed);

  auto m1 = HeisenbergModel::make(Rational(1), 4);
  Report r1 = verify_sl2(*m1, 4);
  INFO(r1.witness);
  CHECK(r1.passed);

  auto lat = LatticeModel::make({{"g"}, {{-2}}}, 2, 1);
  Report rl = verify_sl2(*lat, 2);
  INFO(rl.witness);
  CHECK(rl.passed);
}

TEST_CASE("negative-degree components are D*-images (Prop sl2)") {
  // N(g,g) = 2 gives deg e^g = -1
  auto m = LatticeModel::make({{"g"}, {{2}}}, 2, 2);
  Report r1 = verify_prop_sl2(*m, {1}, 2);
  INFO(r1.witness);
  CHECK(r1.passed);
  CHECK(r1.checks >= 1);

  Report r2 = verify_prop_sl2(*m, {2}, 0);  // d_min(2g) = -4: d in -4..-1
  INFO(r2.witness);
  CHECK(r2.passed);
  CHECK(r2.checks == 4);

  // Heisenberg has no negative degrees: vacuous pass
  auto h = HeisenbergModel::make(Rational(0), 3);
  Report rh = verify_prop_sl2(*h, {1}, 3);
  CHECK(rh.passed);
  CHECK(rh.checks == 0);
}

TEST_CASE("central charges") {
  // golden values fixed by the bracket oracle: c = 1 - 12 k^2
  auto m0 = HeisenbergModel::make(Rational(0), 3);
  auto [r0, c0] = verify_virasoro(*m0, m0->omega(), 3);
  INFO(r0.witness);
  CHECK(r0.passed);
  CHECK(c0 == Rational(1));

  auto m1 = HeisenbergModel::make(Rational(1), 3);
  auto [r1, c1] = verify_virasoro(*m1, m1->omega(), 3);
  INFO(r1.witness);
  CHECK(r1.passed);
  CHECK(c1 == Rational(-11));

  auto mh = HeisenbergModel::make(Rational(1, 2), 3);
  auto [rh, ch] = verify_virasoro(*mh, mh->omega(), 3);
  INFO(rh.witness);
  CHECK(rh.passed);
  CHECK(ch == Rational(-2));

  auto lat = LatticeModel::make({{"g"}, {{-2}}}, 2, 1);
  auto [rl, cl] = verify_virasoro(*lat, lat->conformal_vector(), 2);
  INFO(rl.witness);
  CHECK(rl.passed);
  CHECK(cl == Rational(1));
}

TEST_CASE("product block invariant on homogeneous inputs") {
  auto m = HeisenbergModel::make(Rational(0), 4);
  Rng rng(99);
  auto basis = basis_elements(*m, 4);
  for (int t = 0; t < 30; ++t) {
    Element a = random_homogeneous(*m, rng, basis);
    Element b = random_homogeneous(*m, rng, basis);
    int n = static_cast<int>(rng.range(-3, 3));
    Element p = m->product(a, n, b);
    if (p.zero()) continue;
    CHECK(degree_of(*m, p) == degree_of(*m, a) + degree_of(*m, b) - n - 1);
  }
}
