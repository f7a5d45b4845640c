#include "qiso/real_structure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qiso {

BallVector j_apply(const BallVector& v) {
  BallVector out(v.group(), v.radius());
  for (const auto& [g, c] : v.entries()) out.add(v.group().inverse(g), c.conj());
  return out;
}

namespace {

void accumulate(BasisOperator::Image& img, const Element& g, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = img.emplace(g, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) img.erase(it);
}

}  // namespace

BasisOperator BasisOperator::lambda(const Group& group, const Element& g) {
  return BasisOperator(group, [group, g](const Element& a) { return Image{{group.multiply(g, a), Rational(1)}}; });
}

BasisOperator BasisOperator::rho(const Group& group, const Element& h) {
  const Element hinv = group.inverse(h);
  return BasisOperator(group, [group, hinv](const Element& a) { return Image{{group.multiply(a, hinv), Rational(1)}}; });
}

BasisOperator BasisOperator::dirac(const Group& group) {
  return BasisOperator(group, [group](const Element& a) {
    Image img;
    accumulate(img, a, Rational(group.length(a)));
    return img;
  });
}

BasisOperator BasisOperator::after(const BasisOperator& other) const {
  Rule outer = rule_, inner = other.rule_;
  return BasisOperator(group_, [outer, inner](const Element& a) {
    Image img;
    for (const auto& [b, c] : inner(a))
      for (const auto& [x, d] : outer(b)) accumulate(img, x, c * d);
    return img;
  });
}

BasisOperator BasisOperator::operator-(const BasisOperator& other) const {
  Rule lhs = rule_, rhs = other.rule_;
  return BasisOperator(group_, [lhs, rhs](const Element& a) {
    Image img = lhs(a);
    for (const auto& [x, c] : rhs(a)) accumulate(img, x, -c);
    return img;
  });
}

BasisOperator commutator(const BasisOperator& a, const BasisOperator& b) { return a.after(b) - b.after(a); }

BasisOperator t_operator(const Group& group, const Element& g, const Element& h) {
  BasisOperator d = BasisOperator::dirac(group);
  BasisOperator inner = commutator(d, BasisOperator::lambda(group, h));
  return commutator(BasisOperator::rho(group, group.inverse(g)), inner);
}

long t_coefficient(const Group& G, const Element& g, const Element& h, const Element& a) {
  return static_cast<long>(G.length_of_product({&h, &a})) - G.length(a) - G.length_of_product({&h, &a, &g}) +
         G.length_of_product({&a, &g});
}

SupportCertificate support_certificate(const Group& G, const Element& g, const Element& h, int r0, int r) {
  const int lg = G.length(g), lh = G.length(h);
  if (r0 < lg + lh) throw std::invalid_argument("r0 must be at least l(g) + l(h)");
  if (r <= r0) throw std::invalid_argument("r must exceed r0");
  SupportCertificate cert;
  cert.g = g;
  cert.h = h;
  cert.r0 = r0;
  cert.r = r;
  const long bound = 2L * std::min(lg, lh);
  for (int n = 0; n <= r; ++n)
    for (const auto& a : G.sphere(n)) {
      ++cert.probed;
      long c = t_coefficient(G, g, h, a);
      if (c == 0) continue;
      cert.support.push_back({a, G.multiply(G.multiply(h, a), g), c});
      if (n > r0) cert.stable = false;
      if (std::labs(c) > bound) cert.within_bound = false;
    }
  return cert;
}

TSweep t_sweep(const Group& G, int max_len, int extra, std::size_t keep) {
  if (extra < 1) throw std::invalid_argument("probe window must be at least 1");
  const auto ball = G.ball(max_len);
  G.sphere(2 * max_len + extra);  // fill the shared cache before the workers start
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) pairs.emplace_back(i, j);

  TSweep sweep;
  sweep.max_len = max_len;
  sweep.extra = extra;
  sweep.pairs = pairs.size();
  std::atomic<std::size_t> next{0}, unstable{0}, out_of_bound{0};
  std::mutex mu;
  std::vector<std::pair<std::size_t, SupportCertificate>> failures;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
      const Element& g = ball[pairs[k].first];
      const Element& h = ball[pairs[k].second];
      int r0 = G.length(g) + G.length(h);
      SupportCertificate c = support_certificate(G, g, h, r0, r0 + extra);
      if (!c.stable) ++unstable;
      if (!c.within_bound) ++out_of_bound;
      if (!c.stable || !c.within_bound) {
        std::lock_guard<std::mutex> lock(mu);
        failures.emplace_back(k, std::move(c));
      }
    }
  };
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> threads;
  for (unsigned i = 0; i < n; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  std::sort(failures.begin(), failures.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < failures.size() && i < keep; ++i) sweep.failures.push_back(std::move(failures[i].second));
  sweep.unstable = unstable;
  sweep.out_of_bound = out_of_bound;
  return sweep;
}

CommutantReport commutant_check(const Group& G, const Element& g, const Element& h, int radius) {
  CommutantReport rep;
  rep.g = g;
  rep.h = h;
  rep.radius = radius;
  const BasisOperator lg = BasisOperator::lambda(G, g), rh = BasisOperator::rho(G, h);
  const BasisOperator left = lg.after(rh), right = rh.after(lg);
  const BasisOperator comm = commutator(lg, rh);
  const Element hinv = G.inverse(h);
  for (int n = 0; n <= radius; ++n)
    for (const auto& a : G.sphere(n)) {
      ++rep.checked;
      const BasisOperator::Image expected{{G.multiply(G.multiply(g, a), hinv), Rational(1)}};
      if (!comm.apply(a).empty() || left.apply(a) != expected || right.apply(a) != expected) {
        if (rep.zero) rep.counterexample = "a = " + G.format(a);
        rep.zero = false;
      }
    }
  return rep;
}

MatrixModel real_extension(const MatrixModel& model, bool trivial) {
  if (model.assign.count("q")) throw std::invalid_argument("model already assigns the label q");
  MatrixModel out;
  out.name = model.name + (trivial ? " (+) trivial q" : " (+) q");
  out.root_order = model.root_order;
  out.dim = 2 * model.dim;
  for (const auto& [label, m] : model.assign) out.assign.emplace(label, direct_sum(m, m));
  const Matrix id = Matrix::identity(model.dim, model.root_order);
  out.assign.emplace("q", direct_sum(id, trivial ? id : -id));
  return out;
}

bool RealExtensionReport::ok() const {
  return q_self_adjoint && q_unitary && q_commutes_with_generators && q_commutes_with_action && relations.ok();
}

RealExtensionReport check_real_extension(const Preset& preset, bool trivial) {
  RealExtensionReport rep;
  rep.model = real_extension(preset.model, trivial);
  const Matrix& q = rep.model.at("q");
  auto note = [&](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };
  MatrixFlags flags = classify(q);
  rep.q_self_adjoint = flags.is_self_adjoint;
  rep.q_unitary = flags.is_unitary;
  if (!rep.q_self_adjoint) note("q is not self-adjoint");
  if (!rep.q_unitary) note("q is not unitary");
  rep.q_commutes_with_generators = true;
  for (const auto& [label, m] : rep.model.assign)
    if (!(m * q == q * m)) {
      rep.q_commutes_with_generators = false;
      note("q does not commute with " + label);
    }
  ActionTable t = build_action(preset.group, evaluate_grid(preset.grid, rep.model), default_action_radius(preset.group));
  rep.q_commutes_with_action = true;
  for (const auto& [w, row] : t.rows)
    for (const auto& [gp, m] : row) {
      ++rep.action_entries;
      if (!(m * q == q * m)) {
        rep.q_commutes_with_action = false;
        note("q does not commute with q_{" + preset.group.format(gp) + "," + preset.group.format(w) + "}");
      }
    }
  rep.relations = check(preset.presentation, rep.model);
  if (!rep.relations.ok()) note("a relation fails on the doubled model");
  return rep;
}

}  // namespace qiso
