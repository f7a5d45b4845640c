#pragma once

// Random generators shared by the property tests and the acceptance suite.

#include "doctest.h"
#include "qiso/cyclotomic.hpp"
#include "qiso/group.hpp"
#include "qiso/matrix.hpp"
#include "qiso/relation_engine.hpp"

#include <random>
#include <vector>

namespace qiso::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_abs = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline int random_order(std::mt19937_64& rng) {
  static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> pick(0, 7);
  return orders[pick(rng)];
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int order) {
  const int d = cyclotomic_field(order).degree;
  std::vector<Rational> c;
  std::bernoulli_distribution sparse(0.3);
  for (int k = 0; k < d; ++k) c.push_back(sparse(rng) ? Rational() : random_rational(rng));
  return Cyclotomic(order, std::move(c));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int order) {
  std::vector<Cyclotomic> e;
  std::bernoulli_distribution zero(0.4);
  for (std::size_t i = 0; i < rows * cols; ++i)
    e.push_back(zero(rng) ? Cyclotomic::zero(order) : random_cyclotomic(rng, order));
  return Matrix(rows, cols, std::move(e));
}

inline Element random_element(std::mt19937_64& rng, const Group& g, int max_len) {
  std::uniform_int_distribution<std::size_t> gen(0, g.generator_count() - 1);
  std::uniform_int_distribution<int> len(0, max_len);
  FormalWord w;
  for (int i = 0, n = len(rng); i < n; ++i) w.letters.push_back(gen(rng));
  return g.reduce(w);
}

inline StarPolynomial random_polynomial(std::mt19937_64& rng) {
  static const char* labels[] = {"A", "B", "C", "X1", "u_2"};
  static const int orders[] = {1, 3, 4, 8, 12};
  std::uniform_int_distribution<int> terms(0, 4), len(0, 4), label(0, 4), order(0, 4);
  std::bernoulli_distribution star(0.4);
  StarPolynomial p;
  for (int t = 0, n = terms(rng); t < n; ++t) {
    StarPolynomial term = StarPolynomial::constant(random_cyclotomic(rng, orders[order(rng)]));
    for (int i = 0, l = len(rng); i < l; ++i) term = term * StarPolynomial::atom(labels[label(rng)], star(rng));
    p += term;
  }
  return p;
}

}  // namespace qiso::testing

namespace doctest {
template <>
struct StringMaker<qiso::Rational> {
  static String convert(const qiso::Rational& r) { return r.to_string().c_str(); }
};
template <>
struct StringMaker<qiso::Cyclotomic> {
  static String convert(const qiso::Cyclotomic& c) { return c.to_string().c_str(); }
};
}  // namespace doctest
