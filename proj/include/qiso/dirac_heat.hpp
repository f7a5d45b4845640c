#pragma once

#include "qiso/cyclotomic.hpp"
#include "qiso/group.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace qiso {

/// Finitely supported vector in l2(G) with support in ball(radius).
/// Zero coefficients are never stored.
class BallVector {
 public:
  BallVector(Group group, int radius) : group_(std::move(group)), radius_(radius) {}

  static BallVector delta(const Group& group, int radius, const Element& g,
                          const Cyclotomic& coeff = Cyclotomic(1));

  const Group& group() const { return group_; }
  int radius() const { return radius_; }
  const std::map<Element, Cyclotomic>& entries() const { return entries_; }

  /// Adds c to the coefficient at g. Throws std::out_of_range if l(g) > radius.
  void add(const Element& g, const Cyclotomic& c);
  Cyclotomic at(const Element& g) const;
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const BallVector& a, const BallVector& b) { return a.entries_ == b.entries_; }
  friend BallVector operator-(const BallVector& a, const BallVector& b);

 private:
  Group group_;
  int radius_;
  std::map<Element, Cyclotomic> entries_;
};

/// (D v)(g) = l(g) v(g).
BallVector dirac_apply(const BallVector& v);

struct SpectrumEntry {
  int eigenvalue;
  std::size_t multiplicity;
};

/// Eigenvalues n <= max_n of D with multiplicity |W_n|; empty spheres skipped.
std::vector<SpectrumEntry> spectrum(const Group& group, int max_n);

struct HeatTrace {
  double value = 0;       // sum over n <= N of |W_n| exp(-t n^2)
  double tail_bound = 0;  // sum over n > N of |S|^n exp(-t n^2)
  std::vector<double> terms;
};

/// Truncated Tr exp(-t D^2). Throws std::invalid_argument if t <= 0.
HeatTrace heat_trace(const Group& group, double t, int max_n);

/// Sum over n > max_n of base^n exp(-t n^2), until terms past the peak drop below 1e-30.
double gaussian_tail(double base, double t, int max_n);

}  // namespace qiso
