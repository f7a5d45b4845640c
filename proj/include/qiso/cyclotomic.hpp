#pragma once

#include "qiso/rational.hpp"

#include <string>
#include <vector>

namespace qiso {

/// Largest N for which Q(zeta_N) is supported.
inline constexpr int kMaxCyclotomicOrder = 360;

/// The field Q(zeta_N), presented as Q[x] / Phi_N(x).
struct CyclotomicField {
  int order = 1;
  int degree = 1;
  /// Phi_N, lowest coefficient first; monic.
  std::vector<mpz_class> modulus;
  /// powers[k] = x^k mod Phi_N for 0 <= k < N, each of length `degree`.
  std::vector<std::vector<mpz_class>> powers;
};

/// Returns the (cached, immutable) field Q(zeta_n). Throws std::domain_error
/// for n < 1 or n > kMaxCyclotomicOrder.
const CyclotomicField& cyclotomic_field(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// An exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(d-1),
/// d = deg Phi_N. Zero is stored without coefficients; every other value
/// carries exactly d of them, so equal values of equal order have equal
/// representations.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(int order, std::vector<Rational> coeffs);

  static Cyclotomic zero(int order = 1);
  static Cyclotomic one(int order = 1);
  /// zeta_n^k (k may be negative).
  static Cyclotomic root_of_unity(int n, long k);

  int order() const { return field_->order; }
  const CyclotomicField& field() const { return *field_; }
  /// Full power-basis coefficient vector of length deg Phi_N.
  std::vector<Rational> coefficients() const;
  const Rational& coefficient(int k) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  /// Only valid when is_rational().
  Rational rational_value() const;

  /// Same value viewed in Q(zeta_n); n must be a multiple of order().
  Cyclotomic lifted(int n) const;

  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Scalar literal syntax, e.g. "1/2", "z(8,1) + z(8,3)", "-3/2*z(4,1)".
  std::string to_string() const;

 private:
  static Cyclotomic from_poly(const CyclotomicField& f, std::vector<Rational> poly);
  void normalize();

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

/// Smallest common order of two fields, checked against kMaxCyclotomicOrder.
int common_order(int a, int b);

}  // namespace qiso
