#include "qiso/cyclotomic.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qiso {
namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor b; the remainder must vanish.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("cyclotomic division: degree too small");
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

std::unique_ptr<CyclotomicField> build_field(int n) {
  auto f = std::make_unique<CyclotomicField>();
  f->order = n;
  f->modulus = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  const int d = f->degree;
  f->powers.assign(n, std::vector<mpz_class>(d, 0));
  std::vector<mpz_class> cur(d, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->powers[k] = cur;
    // cur <- x * cur mod Phi_n
    mpz_class top = cur[d - 1];
    for (int j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (int j = 0; j < d; ++j) cur[j] -= top * f->modulus[j];
  }
  return f;
}

std::mutex g_fields_mutex;
std::array<std::unique_ptr<CyclotomicField>, kMaxCyclotomicOrder + 1> g_fields;

const Rational& zero_rational() {
  static const Rational z;
  return z;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::domain_error("cyclotomic order must be positive");
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

const CyclotomicField& cyclotomic_field(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder)
    throw std::domain_error("unsupported cyclotomic order " + std::to_string(n) + " (supported: 1.." +
                            std::to_string(kMaxCyclotomicOrder) + ")");
  std::lock_guard lock(g_fields_mutex);
  if (!g_fields[n]) g_fields[n] = build_field(n);
  return *g_fields[n];
}

int common_order(int a, int b) {
  long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
  if (l > kMaxCyclotomicOrder)
    throw std::domain_error("unsupported cyclotomic order " + std::to_string(l) + " (lcm of " + std::to_string(a) +
                            " and " + std::to_string(b) + ")");
  return static_cast<int>(l);
}

Cyclotomic::Cyclotomic() : field_(&cyclotomic_field(1)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(const Rational& value) : field_(&cyclotomic_field(1)) {
  if (!value.is_zero()) coeffs_ = {value};
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : field_(&cyclotomic_field(order)) {
  if (static_cast<int>(coeffs.size()) > field_->degree) {
    *this = from_poly(*field_, std::move(coeffs));
    return;
  }
  coeffs.resize(field_->degree);
  coeffs_ = std::move(coeffs);
  normalize();
}

Cyclotomic Cyclotomic::zero(int order) {
  Cyclotomic c;
  c.field_ = &cyclotomic_field(order);
  return c;
}

Cyclotomic Cyclotomic::one(int order) {
  Cyclotomic c = zero(order);
  c.coeffs_.assign(c.field_->degree, Rational());
  c.coeffs_[0] = Rational(1);
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  const CyclotomicField& f = cyclotomic_field(n);
  long e = ((k % n) + n) % n;
  Cyclotomic c = zero(n);
  c.coeffs_.reserve(f.degree);
  for (const auto& v : f.powers[e]) c.coeffs_.emplace_back(mpq_class(v));
  c.normalize();
  return c;
}

std::vector<Rational> Cyclotomic::coefficients() const {
  if (coeffs_.empty()) return std::vector<Rational>(field_->degree);
  return coeffs_;
}

const Rational& Cyclotomic::coefficient(int k) const {
  if (coeffs_.empty() || k < 0 || k >= field_->degree) return zero_rational();
  return coeffs_[k];
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not rational: " + to_string());
  return coeffs_.empty() ? Rational() : coeffs_[0];
}

bool Cyclotomic::is_one() const { return !coeffs_.empty() && is_rational() && coeffs_[0] == Rational(1); }

void Cyclotomic::normalize() {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return;
  coeffs_.clear();
}

Cyclotomic Cyclotomic::from_poly(const CyclotomicField& f, std::vector<Rational> poly) {
  Cyclotomic out = zero(f.order);
  std::vector<Rational> acc(f.degree);
  bool any = false;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k].is_zero()) continue;
    any = true;
    std::size_t e = k % static_cast<std::size_t>(f.order);
    if (e < static_cast<std::size_t>(f.degree)) {
      acc[e] += poly[k];
      continue;
    }
    const auto& pw = f.powers[e];
    for (int j = 0; j < f.degree; ++j)
      if (pw[j] != 0) acc[j] += poly[k] * Rational(mpq_class(pw[j]));
  }
  if (!any) return out;
  out.coeffs_ = std::move(acc);
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (n == order()) return *this;
  if (n % order() != 0)
    throw std::domain_error("cannot lift Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" + std::to_string(n) + ")");
  const CyclotomicField& target = cyclotomic_field(n);
  if (coeffs_.empty()) return zero(n);
  const int step = n / order();
  std::vector<Rational> poly(static_cast<std::size_t>(step) * coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
  return from_poly(target, std::move(poly));
}

Cyclotomic Cyclotomic::conj() const {
  if (coeffs_.empty() || is_rational()) return *this;
  const int n = order();
  std::vector<Rational> poly(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) poly[(n - static_cast<int>(k)) % n] = coeffs_[k];
  return from_poly(*field_, std::move(poly));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.coeffs_.empty()) {
    if (o.order() != order() && order() % o.order() != 0) *this = lifted(common_order(order(), o.order()));
    return *this;
  }
  if (o.order() != order()) {
    int n = common_order(order(), o.order());
    Cyclotomic rhs = o.lifted(n);
    *this = lifted(n);
    return *this += rhs;
  }
  if (coeffs_.empty()) {
    coeffs_ = o.coeffs_;
    return *this;
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    int n = common_order(a.order(), b.order());
    return a.lifted(n) * b.lifted(n);
  }
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Cyclotomic::zero(a.order());
  if (b.is_rational()) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c *= b.coeffs_[0];
    return r;
  }
  if (a.is_rational()) return b * a;
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> poly(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!b.coeffs_[j].is_zero()) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic::from_poly(*a.field_, std::move(poly));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  int n = common_order(a.order(), b.order());
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.to_string();
    } else {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += "z(" + std::to_string(order()) + "," + std::to_string(k) + ")";
    }
  }
  return out;
}

}  // namespace qiso
