#include "doctest.h"

#include "vak/fock.hpp"
#include "vak/partitions.hpp"

using namespace vak;

namespace {

FockState pstate(std::vector<int> parts) {
  FockState s;
  s.alpha = {0};
  s.parts = {std::move(parts)};
  return s;
}

}  // namespace

TEST_CASE("fock basis enumerates partitions in reverse-lex order") {
  auto m = HeisenbergModel::make(Rational(0), 6);
  CHECK(m->fock_basis(0).size() == 1);
  CHECK(m->fock_basis(0)[0] == m->unit());

  auto b2 = m->fock_basis(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0] == Element::single(pstate({2})));
  CHECK(b2[1] == Element::single(pstate({1, 1})));

  CHECK(m->fock_basis(4).size() == 5);
  CHECK(m->fock_basis(-1).empty());
}

TEST_CASE("degree-d dimension equals p(d)") {
  auto m = HeisenbergModel::make(Rational(0), 8);
  // oracle: independent partition counter
  std::vector<long long> expect;
  for (int d = 0; d <= 8; ++d) expect.push_back(partition_count(d));
  CHECK(expect == std::vector<long long>{1, 1, 2, 3, 5, 7, 11, 15, 22});
  for (int d = 0; d <= 8; ++d)
    CHECK(static_cast<long long>(m->fock_basis(d).size()) == expect[d]);
  // blocks by partition length
  for (int d = 0; d <= 6; ++d) {
    long long total = 0;
    for (int r = 0; r <= d; ++r) total += m->block_dim(BlockKey{{r}, d});
    CHECK(total == expect[d]);
  }
}

TEST_CASE("mode action on the Fock space") {
  auto m = HeisenbergModel::make(Rational(0), 6);
  Element a = m->generator_elements()[0];

  CHECK(m->act_mode(1, a) == m->unit());              // a(1)a = 1
  CHECK(m->act_mode(0, a).zero());                    // a(0)a = 0
  CHECK(m->act_mode(-3, m->unit()) == Element::single(pstate({3})));

  // [a(1), a(-1)] x = x for x = a(-1)1
  Element x = a;
  Element lhs = m->act_mode(1, m->act_mode(-1, x)) -
                m->act_mode(-1, m->act_mode(1, x));
  CHECK(lhs == x);
}

TEST_CASE("products through the engine agree with the mode action") {
  auto m = HeisenbergModel::make(Rational(0), 6);
  Element a = m->generator_elements()[0];

  CHECK(m->product(a, 1, a) == m->unit());
  CHECK(m->product(a, 0, a).zero());

  // 1(n)x = delta_{n,-1} x
  Element x = Element::single(pstate({2, 1}));
  CHECK(m->product(m->unit(), -1, x) == x);
  CHECK(m->product(m->unit(), 0, x).zero());
  CHECK(m->product(m->unit(), -2, x).zero());

  // composite states act like their normal-ordered mode words
  Element aa = Element::single(pstate({1, 1}));  // a(-1)a
  for (int n = -2; n <= 3; ++n) {
    Element via_engine = m->product(aa, n, x);
    // (a(-1)a)(n) = sum_{s>=0} a(-1-s)a(n+s) + sum_{s<=-1} a(n+s)a(-1-s)
    Element direct;
    for (int s = 0; s <= 12; ++s)
      direct += m->act_mode(-1 - s, m->act_mode(n + s, x));
    for (int s = -1; s >= -12; --s)
      direct += m->act_mode(n + s, m->act_mode(-1 - s, x));
    CHECK(via_engine == direct);
  }
}

TEST_CASE("translation operator") {
  auto m = HeisenbergModel::make(Rational(0), 6);
  Element a = m->generator_elements()[0];

  CHECK(m->d(m->unit()).zero());
  // D(a(-1)1) = a(-2)1, via the commutator [D, a(m)] = -m a(m-1) on the
  // Fock action as an independent route.
  CHECK(m->d(a) == Element::single(pstate({2})));
  Element via_comm = m->act_mode(-2, m->unit());  // [D,a(-1)]1 + a(-1)D1
  CHECK(m->d(a) == via_comm);

  // a(n)1 = D^(-n-1) a
  for (int n = -1; n >= -4; --n)
    CHECK(m->product(a, n, m->unit()) == divided_d(*m, -n - 1, a));
  CHECK(divided_d(*m, 2, m->unit()).zero());
}

TEST_CASE("omega_k and the induced D*") {
  auto m0 = HeisenbergModel::make(Rational(0), 6);
  auto m1 = HeisenbergModel::make(Rational(1), 6);
  auto mh = HeisenbergModel::make(Rational(1, 2), 6);

  CHECK(HeisenbergModel::omega_element(Rational(0)) ==
        Element::single(pstate({1, 1}), Rational(1, 2)));
  // coefficient of (2) in omega_k is k (from D(a) = a(-2)1)
  Element w1 = HeisenbergModel::omega_element(Rational(1));
  CHECK(w1.terms().at(pstate({2})) == Rational(1));

  Element a0 = m0->generator_elements()[0];
  CHECK(m0->dstar(a0).zero());                       // k = 0: D*a = 0
  Element a1 = m1->generator_elements()[0];
  CHECK(m1->dstar(a1) == Element::single(pstate({}), Rational(-2)));
  Element ah = mh->generator_elements()[0];
  CHECK(mh->dstar(ah) == Element::single(pstate({}), Rational(-1)));
  CHECK(m1->dstar(m1->unit()).zero());               // D*1 = 0

  // omega(1) acts as the degree on every block
  for (int d = 0; d <= 4; ++d)
    for (auto& x : m1->fock_basis(d))
      CHECK(m1->product(m1->omega(), 1, x) == Rational(d) * x);
  // omega(0) acts as D
  for (int d = 0; d <= 4; ++d)
    for (auto& x : m1->fock_basis(d))
      CHECK(m1->product(m1->omega(), 0, x) == m1->d(x));
}

TEST_CASE("ord") {
  auto m0 = HeisenbergModel::make(Rational(0), 6);
  auto m1 = HeisenbergModel::make(Rational(1), 6);
  CHECK(ord(*m0, m0->unit()) == 0);
  CHECK(ord(*m0, m0->generator_elements()[0]) == 0);
  CHECK(ord(*m1, m1->generator_elements()[0]) == 1);
  CHECK_THROWS_AS(ord(*m0, Element{}), std::invalid_argument);
  // ord(D* a) = ord(a) - 1 for ord(a) >= 1
  Element y = Element::single(pstate({2, 1}));
  int o = ord(*m1, y);
  if (o >= 1) CHECK(ord(*m1, m1->dstar(y)) == o - 1);
}

TEST_CASE("locality") {
  auto m = HeisenbergModel::make(Rational(0), 6);
  Element a = m->generator_elements()[0];
  CHECK(locality(*m, a, a) == 2);  // N(a,a) = 2
  Element x = Element::single(pstate({2, 1}));
  CHECK(locality(*m, m->unit(), x) == 0);
}

TEST_CASE("cutoff violations report the minimal extension") {
  auto m = std::make_shared<HeisenbergModel>(Rational(0), Cutoffs{4, 4},
                                             Cutoffs{4, 4});
  Element a = m->generator_elements()[0];
  Element top = Element::single(pstate({4}));
  try {
    m->product(a, -2, top);  // degree 6 > 4
    CHECK(false);
  } catch (const CutoffExceeded& e) {
    CHECK(e.needed_degree == 6);
  }
}
