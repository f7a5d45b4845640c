#include "qiso/laplacian.hpp"

#include <cmath>
#include <stdexcept>

namespace qiso {
namespace {

mpz_class pow_z(long base, long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

mpz_class free_sphere_size(int rank, int n) {
  if (n == 0) return 1;
  return 2 * rank * pow_z(2 * rank - 1, n - 1);
}

void require_free(const Group& g, const char* what) {
  if (g.family() != GroupFamily::Free)
    throw std::invalid_argument(std::string(what) + " is defined for free groups only, got " + g.name());
}

Group with_radius(const Group& g, int radius) {
  return radius > g.ball_cap() ? g.with_ball_cap(radius) : g;
}

}  // namespace

Rational coeff_finite(const Group& group, const Element& gamma) {
  if (!group.is_finite()) throw std::invalid_argument("coeff_finite needs a finite group, got " + group.name());
  group.check(gamma);
  long total = 0;
  for (const auto& k : group.elements()) {
    long d = group.length_of_product({&gamma, &k}) - group.length(k);
    total += d * d;
  }
  return Rational(total, static_cast<long>(group.order()));
}

Rational sphere_sum(const Group& group, const Element& gamma, int n) {
  if (n < 0) throw std::invalid_argument("sphere index must be nonnegative");
  group.check(gamma);
  if (group.family() == GroupFamily::Free) {
    // Only the first l(gamma)+1 letters of k can interact with gamma; every
    // reduced prefix of length p extends in (2r-1)^(n-p) ways.
    const int m = group.length(gamma);
    const int p = std::min(n, m + 1);
    Group g = with_radius(group, p);
    mpz_class total = 0;
    for (const auto& prefix : g.sphere(p)) {
      long d = g.length_of_product({&gamma, &prefix}) - p;
      total += d * d;
    }
    return Rational(mpq_class(total * pow_z(2 * group.rank() - 1, n - p)));
  }
  mpz_class total = 0;
  for (const auto& k : group.sphere(n)) {
    long d = group.length_of_product({&gamma, &k}) - n;
    total += d * d;
  }
  return Rational(mpq_class(total));
}

Rational ratio_r(const Group& group, const Element& gamma, int n) {
  mpz_class size = group.family() == GroupFamily::Free ? free_sphere_size(group.rank(), n)
                                                       : mpz_class(group.sphere(n).size());
  if (size == 0) throw std::invalid_argument("sphere W_" + std::to_string(n) + " of " + group.name() + " is empty");
  return sphere_sum(group, gamma, n) / Rational(mpq_class(size));
}

Rational ratio_r_formal(const Group& group, const Element& gamma, int n) {
  require_free(group, "the formal-word ratio");
  if (n < 0) throw std::invalid_argument("word length must be nonnegative");
  group.check(gamma);
  const auto& letters = gamma.code();
  const int m = static_cast<int>(letters.size());
  const int p = std::min(n, m);
  const long s = static_cast<long>(group.generator_count());
  mpz_class total = 0;
  group.for_each_formal_word(p, [&](const FormalWord& w) {
    int j = 0;
    while (j < p && group.generator(w.letters[j]).code()[0] == -letters[m - 1 - j]) ++j;
    long d = m - 2 * j;
    total += d * d;
  });
  return Rational(mpq_class(total, pow_z(s, p)));
}

FreeRReport free_R(int rank, int m, int probe_depth) {
  if (rank < 1) throw std::invalid_argument("free rank must be positive");
  if (m < 0) throw std::invalid_argument("length must be nonnegative");
  if (probe_depth < m) throw std::invalid_argument("probe depth must be at least the length");
  Group g = with_radius(Group::free(rank), m + 1);
  FreeRReport rep;
  rep.rank = rank;
  rep.m = m;
  rep.probe_depth = probe_depth;

  const auto& sphere = g.sphere(m);
  std::vector<Element> reps;
  if (sphere.size() <= 64) {
    reps = sphere;
  } else {
    const std::size_t count = 16;
    for (std::size_t i = 0; i < count; ++i) reps.push_back(sphere[i * (sphere.size() - 1) / (count - 1)]);
  }
  rep.representatives = reps.size();

  auto note = [&](std::string msg) {
    if (!rep.failure) rep.failure = std::move(msg);
  };
  for (int n = m; n <= probe_depth; ++n) {
    Rational red = ratio_r(g, reps.front(), n);
    Rational formal = ratio_r_formal(g, reps.front(), n);
    rep.reduced_by_n.push_back(red);
    rep.formal_by_n.push_back(formal);
    for (std::size_t i = 1; i < reps.size(); ++i) {
      if (ratio_r(g, reps[i], n) != red || ratio_r_formal(g, reps[i], n) != formal) {
        rep.representative_independent = false;
        note("r_{" + std::to_string(n) + "} differs between " + g.format(reps.front()) + " and " + g.format(reps[i]));
      }
    }
    if (red != rep.reduced_by_n.front()) {
      rep.reduced_stable = false;
      note("reduced ratio at n=" + std::to_string(n) + " differs from n=" + std::to_string(m));
    }
    if (formal != rep.formal_by_n.front()) {
      rep.formal_stable = false;
      note("formal ratio at n=" + std::to_string(n) + " differs from n=" + std::to_string(m));
    }
  }
  rep.reduced = rep.reduced_by_n.front();
  rep.formal = rep.formal_by_n.front();
  const Rational top(static_cast<long>(m) * m);
  const Rational low = Rational(2L * rank - 1, 2L * rank) * top;
  rep.reduced_in_bounds = low <= rep.reduced && rep.reduced <= top;
  rep.formal_in_bounds = low <= rep.formal && rep.formal <= top;
  return rep;
}

double c_t_gamma(const Group& group, const Element& gamma, double t, int max_n) {
  if (!(t > 0)) throw std::invalid_argument("c_t needs t > 0");
  group.check(gamma);
  const int last = group.is_finite() ? std::min(max_n, group.diameter()) : max_n;
  double num = 0, den = 0;
  for (int n = last; n >= 0; --n) {
    double w = std::exp(-t * n * n);
    double size = group.family() == GroupFamily::Free ? free_sphere_size(group.rank(), n).get_d()
                                                      : static_cast<double>(group.sphere(n).size());
    num += w * sphere_sum(group, gamma, n).to_double();
    den += w * size;
  }
  return num / den;
}

LaplacianReport admissibility_report(const Group& group, int max_length, int probe_extra) {
  if (max_length < 0) throw std::invalid_argument("max length must be nonnegative");
  LaplacianReport rep;
  rep.group = group.name();
  if (group.is_finite()) {
    for (int n = 0; n <= std::min(max_length, group.diameter()); ++n) {
      LengthClass cls;
      cls.length = n;
      const auto& sphere = group.sphere(n);
      cls.representatives = sphere.size();
      for (std::size_t i = 0; i < sphere.size(); ++i) {
        Rational c = coeff_finite(group, sphere[i]);
        if (i == 0)
          cls.coefficient = c;
        else if (c != cls.coefficient)
          cls.constant = false;
      }
      rep.classes.push_back(cls);
    }
  } else if (group.family() == GroupFamily::Free) {
    for (int m = 0; m <= max_length; ++m) {
      FreeRReport r = free_R(group.rank(), m, m + probe_extra);
      LengthClass cls;
      cls.length = m;
      cls.coefficient = r.reduced;
      cls.representatives = r.representatives;
      cls.constant = r.representative_independent && r.reduced_stable;
      rep.classes.push_back(cls);
      rep.free_evidence.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("admissibility is computed for finite and free groups, got " + group.name());
  }

  for (std::size_t i = 0; i < rep.classes.size(); ++i) {
    const auto& c = rep.classes[i];
    rep.constant_on_spheres = rep.constant_on_spheres && c.constant;
    const Rational l2(static_cast<long>(c.length) * c.length);
    rep.within_bounds = rep.within_bounds && c.coefficient.sign() >= 0 && c.coefficient <= l2;
    if (c.coefficient.is_zero() != (c.length == 0)) rep.kernel_dim_one = false;
    for (std::size_t j = 0; j < i; ++j)
      if (rep.classes[j].coefficient == c.coefficient) rep.injective_across_lengths = false;
    if (i > 0 && !(rep.classes[i - 1].coefficient < c.coefficient)) rep.increasing = false;
  }
  return rep;
}

}  // namespace qiso
