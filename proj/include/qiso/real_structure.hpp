#pragma once

#include "qiso/dirac_heat.hpp"
#include "qiso/group.hpp"
#include "qiso/qiso_models.hpp"
#include "qiso/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qiso {

/// J(sum c_g delta_g) = sum conj(c_g) delta_{g^-1}.
BallVector j_apply(const BallVector& v);

/// A finite-image operator on l2(G) described by its action on basis labels.
/// Composition and commutators are computed label by label, so no truncation
/// boundary ever enters.
class BasisOperator {
 public:
  using Image = std::map<Element, Rational>;
  using Rule = std::function<Image(const Element&)>;

  BasisOperator(Group group, Rule rule) : group_(std::move(group)), rule_(std::move(rule)) {}

  static BasisOperator lambda(const Group& group, const Element& g);
  /// rho_h delta_a = delta_{a h^-1}.
  static BasisOperator rho(const Group& group, const Element& h);
  static BasisOperator dirac(const Group& group);

  const Group& group() const { return group_; }
  /// Image of delta_a; zero coefficients are dropped.
  Image apply(const Element& a) const { return rule_(a); }

  /// (this o other)
  BasisOperator after(const BasisOperator& other) const;
  BasisOperator operator-(const BasisOperator& other) const;

 private:
  Group group_;
  Rule rule_;
};

BasisOperator commutator(const BasisOperator& a, const BasisOperator& b);

/// [rho_{g^-1}, [D, lambda_h]].
BasisOperator t_operator(const Group& group, const Element& g, const Element& h);

/// l(ha) - l(a) - l(hag) + l(ag), the coefficient of delta_{hag} in T_{g,h} delta_a.
long t_coefficient(const Group& group, const Element& g, const Element& h, const Element& a);

struct SupportPoint {
  Element a;
  Element target;  // h a g
  long coefficient = 0;
};

struct SupportCertificate {
  Element g, h;
  int r0 = 0, r = 0;
  std::size_t probed = 0;
  std::vector<SupportPoint> support;  // labels a in ball(r) with nonzero coefficient, shortlex by sphere
  bool stable = true;                 // no support outside ball(r0)
  bool within_bound = true;           // |coefficient| <= 2 min(l(g), l(h)) everywhere
};

/// Throws std::invalid_argument unless r > r0 >= l(g) + l(h).
SupportCertificate support_certificate(const Group& group, const Element& g, const Element& h, int r0, int r);

struct TSweep {
  int max_len = 0;
  int extra = 0;
  std::size_t pairs = 0;
  std::size_t unstable = 0;
  std::size_t out_of_bound = 0;
  /// First unstable certificate, if any.
  std::vector<SupportCertificate> failures;
  bool ok() const { return unstable == 0 && out_of_bound == 0; }
};

/// support_certificate(g, h, l(g)+l(h), l(g)+l(h)+extra) for all g, h in ball(max_len),
/// spread over worker threads. At most `keep` failing certificates are kept.
TSweep t_sweep(const Group& group, int max_len, int extra, std::size_t keep = 1);

struct CommutantReport {
  Element g, h;
  int radius = 0;
  std::size_t checked = 0;
  bool zero = true;
  std::string counterexample;
};

/// [lambda_g, rho_h] delta_a = 0 for all a in ball(radius), with both compositions
/// landing on delta_{g a h^-1} with coefficient 1.
CommutantReport commutant_check(const Group& group, const Element& g, const Element& h, int radius);

/// Doubles every generator (M -> M + M) and adjoins q = I + (-I), or q = I when
/// `trivial`. Throws std::invalid_argument if the model already uses the label q.
MatrixModel real_extension(const MatrixModel& model, bool trivial = false);

struct RealExtensionReport {
  MatrixModel model;
  bool q_self_adjoint = false;
  bool q_unitary = false;
  bool q_commutes_with_generators = false;
  bool q_commutes_with_action = false;
  std::size_t action_entries = 0;
  CheckReport relations;
  std::string first_failure;
  bool ok() const;
};

RealExtensionReport check_real_extension(const Preset& preset, bool trivial = false);

}  // namespace qiso
