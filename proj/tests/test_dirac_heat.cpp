#include "doctest.h"
#include "support.hpp"

#include "qiso/dirac_heat.hpp"

#include <cmath>

using namespace qiso;

namespace {

// sum_{n>=0} |W_n| e^{-t n^2} for free:2, summed far past double precision.
double free2_series(double t) {
  double s = 1;
  for (int n = 1; n < 80; ++n) s += 4 * std::pow(3.0, n - 1) * std::exp(-t * n * n);
  return s;
}

}  // namespace

TEST_CASE("dirac operator") {
  Group f2 = Group::free(2);
  CHECK(dirac_apply(BallVector::delta(f2, 3, f2.identity())).is_zero());
  Element ab = f2.parse_element("ab");
  CHECK(dirac_apply(BallVector::delta(f2, 3, ab)) == BallVector::delta(f2, 3, ab, Cyclotomic(2)));

  Group s3 = Group::s3_transpositions();
  Element s = s3.parse_element("s"), st = s3.parse_element("st");
  BallVector v(s3, 3);
  v.add(s, 1);
  v.add(st, 1);
  BallVector expected(s3, 3);
  expected.add(s, 1);
  expected.add(st, 2);
  CHECK(dirac_apply(v) == expected);

  CHECK_THROWS_AS(BallVector::delta(f2, 1, ab), std::out_of_range);
  BallVector w = BallVector::delta(f2, 2, ab);
  w.add(ab, -1);
  CHECK(w.is_zero());
}

TEST_CASE("spectrum") {
  auto flat = [](const std::vector<SpectrumEntry>& s) {
    std::vector<std::pair<int, std::size_t>> out;
    for (const auto& e : s) out.emplace_back(e.eigenvalue, e.multiplicity);
    return out;
  };
  using V = std::vector<std::pair<int, std::size_t>>;
  CHECK(flat(spectrum(Group::cyclic(4), 5)) == V{{0, 1}, {1, 2}, {2, 1}});
  CHECK(flat(spectrum(Group::free(2), 3)) == V{{0, 1}, {1, 4}, {2, 12}, {3, 36}});
  CHECK(flat(spectrum(Group::cyclic(2), 3)) == V{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(spectrum(Group::free(2).with_ball_cap(2), 3), std::out_of_range);
}

TEST_CASE("heat trace") {
  HeatTrace c3 = heat_trace(Group::cyclic(3), 1.0, 10);
  CHECK(std::abs(c3.value - (1 + 2 * std::exp(-1.0))) < 1e-12);
  CHECK(c3.tail_bound == 0);

  for (double t : {0.5, 1.0, 2.0}) {
    CAPTURE(t);
    HeatTrace h = heat_trace(Group::free(2), t, 3);
    double exact = free2_series(t);
    CHECK(h.value < exact);
    CHECK(exact <= h.value + h.tail_bound + 1e-12);
    CHECK(h.tail_bound > 0);
  }

  HeatTrace f = heat_trace(Group::free(2), 1.0, 10);
  CHECK(std::abs(f.value - free2_series(1.0)) <= f.tail_bound + 1e-12);

  CHECK(std::abs(heat_trace(Group::free(2), 60.0, 4).value - 1) < 1e-20);
  CHECK_THROWS_AS(heat_trace(Group::cyclic(3), 0.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(heat_trace(Group::cyclic(3), -1.0, 3), std::invalid_argument);
}

TEST_CASE("heat trace decreases in t") {
  for (const char* spec : {"cyclic:5", "free:2", "s3:dihedral", "freeabelian:2"}) {
    CAPTURE(spec);
    Group g = Group::from_spec(spec);
    double prev = heat_trace(g, 0.05, 8).value;
    for (int i = 2; i <= 40; ++i) {
      double cur = heat_trace(g, 0.05 * i, 8).value;
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("gaussian tail") {
  // direct summation oracle
  double direct = 0;
  for (int n = 4; n < 200; ++n) direct += std::exp(n * std::log(4.0) - 0.1 * n * n);
  CHECK(std::abs(gaussian_tail(4.0, 0.1, 3) - direct) < 1e-9 * direct);
}
