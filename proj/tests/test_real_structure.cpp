#include "doctest.h"
#include "support.hpp"

#include "qiso/real_structure.hpp"

#include <random>

using namespace qiso;

namespace {

// Four-term coefficient with full normal forms, no length shortcuts.
long t_oracle(const Group& G, const Element& g, const Element& h, const Element& a) {
  auto l = [&](const Element& x) { return static_cast<long>(G.length(x)); };
  Element ha = G.multiply(h, a), ag = G.multiply(a, g);
  return l(ha) - l(a) - l(G.multiply(ha, g)) + l(ag);
}

BallVector random_vector(std::mt19937_64& rng, const Group& g, int radius) {
  BallVector v(g, radius);
  for (const auto& x : g.ball(radius))
    if (rng() % 3 == 0) v.add(x, testing::random_cyclotomic(rng, testing::random_order(rng)));
  return v;
}

}  // namespace

TEST_CASE("J on basis vectors") {
  Group f2 = Group::free(2);
  BallVector e = BallVector::delta(f2, 2, f2.identity());
  CHECK(j_apply(e) == e);
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  BallVector v = BallVector::delta(f2, 2, f2.parse_element("ab"), i);
  BallVector w = j_apply(v);
  REQUIRE(w.entries().size() == 1);
  CHECK(w.entries().begin()->first == f2.parse_element("BA"));
  CHECK(w.entries().begin()->second == -i);
}

TEST_CASE("J is an involution commuting with D") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"free:2", "freeabelian:2", "s3:dihedral"}) {
    Group g = Group::from_spec(spec);
    int radius = g.is_finite() ? g.diameter() : (g.family() == GroupFamily::Free ? 6 : 4);
    for (const auto& x : g.ball(radius)) {
      BallVector d = BallVector::delta(g, radius, x);
      CHECK(j_apply(j_apply(d)) == d);
      CHECK(j_apply(dirac_apply(d)) == dirac_apply(j_apply(d)));
    }
    for (int trial = 0; trial < 20; ++trial) {
      BallVector v = random_vector(rng, g, radius);
      CHECK(j_apply(j_apply(v)) == v);
      CHECK((j_apply(dirac_apply(v)) - dirac_apply(j_apply(v))).is_zero());
    }
  }
}

TEST_CASE("T operator matches the four-term coefficient") {
  for (const char* spec : {"free:2", "freeabelian:2", "s3:transpositions", "cyclic:6"}) {
    CAPTURE(spec);
    Group G = Group::from_spec(spec);
    int r = G.is_finite() ? G.diameter() : 2;
    auto small = G.ball(r);
    auto probe = G.ball(G.is_finite() ? G.diameter() : 4);
    for (const auto& g : small)
      for (const auto& h : small) {
        BasisOperator T = t_operator(G, g, h);
        for (const auto& a : probe) {
          long c = t_oracle(G, g, h, a);
          CHECK(t_coefficient(G, g, h, a) == c);
          auto img = T.apply(a);
          if (c == 0) {
            CHECK(img.empty());
          } else {
            REQUIRE(img.size() == 1);
            CHECK(img.begin()->first == G.multiply(G.multiply(h, a), g));
            CHECK(img.begin()->second == Rational(c));
          }
        }
      }
  }
}

TEST_CASE("T operator special cases") {
  Group f2 = Group::free(2);
  Element a = f2.parse_element("a"), A = f2.parse_element("A");
  // l(a A) - l(A) - l(a A a) + l(A a) = 0 - 1 - 1 + 0
  CHECK(t_coefficient(f2, a, a, A) == -2);
  auto img = t_operator(f2, a, a).apply(A);
  REQUIRE(img.size() == 1);
  CHECK(img.begin()->first == a);
  for (const auto& x : f2.ball(3))
    for (const auto& k : f2.ball(3)) {
      CHECK(t_operator(f2, f2.identity(), x).apply(k).empty());
      CHECK(t_operator(f2, x, f2.identity()).apply(k).empty());
    }
}

TEST_CASE("support certificates on the free group") {
  Group f2 = Group::free(2);
  for (const auto& g : f2.ball(2))
    for (const auto& h : f2.ball(2)) {
      int r0 = f2.length(g) + f2.length(h);
      SupportCertificate c = support_certificate(f2, g, h, r0, r0 + 4);
      CHECK(c.stable);
      CHECK(c.within_bound);
      for (const auto& p : c.support) {
        CHECK(f2.length(p.a) <= r0);
        CHECK(p.coefficient == t_oracle(f2, g, h, p.a));
        CHECK(p.target == f2.multiply(f2.multiply(h, p.a), g));
      }
    }
  SupportCertificate empty = support_certificate(f2, f2.identity(), f2.identity(), 0, 3);
  CHECK(empty.support.empty());
  CHECK(empty.stable);
  Element ab = f2.parse_element("ab");
  CHECK_THROWS_AS(support_certificate(f2, ab, ab, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(support_certificate(f2, ab, ab, 4, 4), std::invalid_argument);

  TSweep s = t_sweep(f2, 2, 3, 4);
  CHECK(s.pairs == 17 * 17);
  CHECK(s.ok());
  CHECK(s.failures.empty());
}

TEST_CASE("the free abelian group has infinite T support") {
  // g = h = (1,0): the coefficient at a = (-1,k) is |k| - (1+|k|) - (1+|k|) + |k| = -2 for every k.
  Group z2 = Group::free_abelian(2);
  Element g({1, 0});
  for (int k = -5; k <= 5; ++k) CHECK(t_oracle(z2, g, g, Element({-1, k})) == -2);
  SupportCertificate c = support_certificate(z2, g, g, 2, 6);
  CHECK_FALSE(c.stable);
  CHECK(c.within_bound);
  std::size_t column = 0;
  for (const auto& p : c.support) {
    if (p.a.code()[0] == -1) ++column;
    CHECK(p.coefficient == t_oracle(z2, g, g, p.a));
  }
  CHECK(column == 11);  // (-1, k) for |k| <= 5
  TSweep s = t_sweep(z2, 1, 3, 2);
  CHECK_FALSE(s.ok());
  CHECK(s.unstable > 0);
  CHECK(s.out_of_bound == 0);
  CHECK(s.failures.size() == 2);
}

TEST_CASE("left and right translations commute") {
  for (const char* spec : {"free:2", "freeabelian:2"}) {
    Group G = Group::from_spec(spec);
    for (const auto& g : G.ball(2))
      for (const auto& h : G.ball(2)) {
        CommutantReport r = commutant_check(G, g, h, 3);
        CHECK(r.zero);
        CHECK(r.checked == G.ball(3).size());
      }
  }
  for (const char* spec : {"s3:transpositions", "s3:dihedral"}) {
    Group G = Group::from_spec(spec);
    std::size_t pairs = 0;
    for (const auto& g : G.elements())
      for (const auto& h : G.elements()) {
        ++pairs;
        CHECK(commutant_check(G, g, h, 5).zero);
      }
    CHECK(pairs == 36);
  }
  // lambda_g against lambda_h does not commute in general; the check is sensitive.
  Group f2 = Group::free(2);
  BasisOperator c = commutator(BasisOperator::lambda(f2, f2.parse_element("a")),
                               BasisOperator::lambda(f2, f2.parse_element("b")));
  CHECK_FALSE(c.apply(f2.identity()).empty());
}

TEST_CASE("real structure extension") {
  for (const char* name : {"s3_transpositions", "s3_dihedral", "zn:5", "f2_torus:8:1:3"}) {
    CAPTURE(name);
    Preset p = make_preset(name);
    RealExtensionReport r = check_real_extension(p);
    CAPTURE(r.first_failure);
    CHECK(r.ok());
    CHECK(r.action_entries > 0);
    CHECK(r.model.dim == 2 * p.model.dim);
    const Matrix& q = r.model.at("q");
    CHECK(q * q == Matrix::identity(q.rows()));
    CHECK_FALSE(q == Matrix::identity(q.rows()));
    RealExtensionReport t = check_real_extension(p, true);
    CHECK(t.ok());
    CHECK(t.model.at("q") == Matrix::identity(q.rows()));
  }
  MatrixModel m;
  m.dim = 1;
  m.assign["q"] = Matrix::identity(1);
  CHECK_THROWS_AS(real_extension(m), std::invalid_argument);

  Preset broken = zn_preset(5);
  broken.model.assign["B"] = broken.model.at("A");
  RealExtensionReport r = check_real_extension(broken);
  CHECK(r.q_commutes_with_action);
  CHECK_FALSE(r.relations.ok());
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.first_failure.empty());
}
