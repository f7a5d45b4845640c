#include "qiso/dirac_heat.hpp"

#include <cmath>
#include <stdexcept>

namespace qiso {

BallVector BallVector::delta(const Group& group, int radius, const Element& g, const Cyclotomic& coeff) {
  BallVector v(group, radius);
  v.add(g, coeff);
  return v;
}

void BallVector::add(const Element& g, const Cyclotomic& c) {
  if (group_.length(g) > radius_)
    throw std::out_of_range("element " + group_.format(g) + " lies outside ball(" + std::to_string(radius_) + ")");
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) entries_.erase(it);
}

Cyclotomic BallVector::at(const Element& g) const {
  auto it = entries_.find(g);
  return it == entries_.end() ? Cyclotomic() : it->second;
}

BallVector operator-(const BallVector& a, const BallVector& b) {
  BallVector r = a;
  r.radius_ = std::max(a.radius_, b.radius_);
  for (const auto& [g, c] : b.entries_) r.add(g, -c);
  return r;
}

BallVector dirac_apply(const BallVector& v) {
  BallVector out(v.group(), v.radius());
  for (const auto& [g, c] : v.entries()) out.add(g, Cyclotomic(v.group().length(g)) * c);
  return out;
}

std::vector<SpectrumEntry> spectrum(const Group& group, int max_n) {
  std::vector<SpectrumEntry> out;
  for (int n = 0; n <= max_n; ++n) {
    if (group.is_finite() && n > group.diameter()) break;
    std::size_t size = group.sphere(n).size();
    if (size > 0) out.push_back({n, size});
  }
  return out;
}

double gaussian_tail(double base, double t, int max_n) {
  const double log_base = std::log(base);
  const double peak = log_base / (2 * t);
  double sum = 0;
  for (long n = max_n + 1;; ++n) {
    double term = std::exp(n * log_base - t * static_cast<double>(n) * n);
    sum += term;
    if (n > peak && term < 1e-30) break;
  }
  return sum;
}

HeatTrace heat_trace(const Group& group, double t, int max_n) {
  if (!(t > 0)) throw std::invalid_argument("heat trace needs t > 0");
  if (max_n < 0) throw std::invalid_argument("heat trace needs max_n >= 0");
  HeatTrace h;
  const int last = group.is_finite() ? std::min(max_n, group.diameter()) : max_n;
  for (int n = 0; n <= last; ++n) {
    double term = static_cast<double>(group.sphere(n).size()) * std::exp(-t * n * n);
    h.terms.push_back(term);
  }
  // sum the smallest terms first
  for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it) h.value += *it;
  if (!group.is_finite() || max_n < group.diameter())
    h.tail_bound = gaussian_tail(static_cast<double>(group.generator_count()), t, max_n);
  return h;
}

}  // namespace qiso
