#pragma once

#include "qiso/group.hpp"
#include "qiso/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qiso {

/// Sum over all k in G of |l(gk) - l(k)|^2, divided by |G|. Finite groups only.
Rational coeff_finite(const Group& group, const Element& gamma);

/// r_{n,gamma}: average of |l(gamma k) - l(k)|^2 over the sphere W_n.
/// Free groups use reduced prefixes of length min(n, l(gamma)+1) weighted by the
/// number of reduced continuations; other groups enumerate the sphere.
Rational ratio_r(const Group& group, const Element& gamma, int n);

/// Sum over k in W_n of |l(gamma k) - l(k)|^2 (the unnormalised numerator of ratio_r).
Rational sphere_sum(const Group& group, const Element& gamma, int n);

/// Formal-word reading for free groups: k ranges over all |S|^n words, letters of
/// k never cancel among themselves, and only the junction between gamma and k
/// cancels. The squared difference is (l(gamma) - 2j)^2 where j is the number of
/// junction cancellations.
Rational ratio_r_formal(const Group& group, const Element& gamma, int n);

struct FreeRReport {
  int rank = 0;
  int m = 0;
  int probe_depth = 0;
  Rational reduced;   // common value of ratio_r for n in [m, probe_depth]
  Rational formal;    // common value of ratio_r_formal over the same range
  std::vector<Rational> reduced_by_n;  // index n - m
  std::vector<Rational> formal_by_n;
  std::size_t representatives = 0;
  bool reduced_stable = true;
  bool formal_stable = true;
  bool representative_independent = true;
  bool reduced_in_bounds = true;  // in [(2r-1)/(2r) m^2, m^2]
  bool formal_in_bounds = true;
  std::optional<std::string> failure;  // first stabilisation/independence failure
};

/// Stabilised value R_m for free:rank, probing n in [m, probe_depth].
FreeRReport free_R(int rank, int m, int probe_depth);

/// Truncated c_{t,gamma} with both sums cut at max_n. Throws if t <= 0.
double c_t_gamma(const Group& group, const Element& gamma, double t, int max_n);

struct LengthClass {
  int length = 0;
  Rational coefficient;
  std::size_t representatives = 0;
  bool constant = true;
};

struct LaplacianReport {
  std::string group;
  std::vector<LengthClass> classes;
  std::vector<FreeRReport> free_evidence;  // free groups only
  bool constant_on_spheres = true;
  bool injective_across_lengths = true;
  bool kernel_dim_one = true;
  bool increasing = true;
  bool within_bounds = true;  // 0 <= c <= l^2
  bool ok() const {
    return constant_on_spheres && injective_across_lengths && kernel_dim_one && increasing && within_bounds;
  }
};

/// Coefficient table per length up to max_length with the admissibility flags.
/// Finite groups use coeff_finite on every element; free groups use free_R.
LaplacianReport admissibility_report(const Group& group, int max_length, int probe_extra = 4);

}  // namespace qiso
