#pragma once

#include "qiso/group.hpp"
#include "qiso/matrix.hpp"
#include "qiso/relation_engine.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// lambda_g delta_h = delta_{gh}, in the basis group.elements(). Finite groups only.
std::map<Element, Matrix> regular_representation(const Group& group);

/// Coefficients q_{x,z} of alpha(lambda_x) = sum_z lambda_z (x) q_{x,z}, rows and
/// columns in the generator order of the group.
using CoefficientGrid = std::vector<std::vector<StarPolynomial>>;

struct Preset {
  std::string name;  // canonical, parameters joined with ':'
  Group group;
  Presentation presentation;
  MatrixModel model;
  CoefficientGrid grid;
  std::string note;
};

struct PresetInfo {
  std::string name;
  std::string parameters;
  std::string description;
};

/// Accepts "zn:5", "z4_commutative", "z4_pauli", "z_torus:M:k:p", "s3_transpositions",
/// "s3_dihedral", "f2_classical:<sigma>", "f2_torus:M:j:k". Throws std::invalid_argument.
Preset make_preset(std::string_view spec);
std::vector<PresetInfo> preset_catalog();

Preset zn_preset(int n);
Preset z4_commutative_preset();
Preset z4_pauli_preset();
/// U = zeta_M^k, P = p (0 or 1); A = UP, B = U(1 - P), acting on Z.
Preset z_torus_preset(int M, int k, int p);
Preset s3_transpositions_preset();
Preset s3_dihedral_preset();
/// sigma is given by the images of a and b, e.g. "ba" (swap), "Ab" (a <-> a^-1).
/// The names identity, swap and invert stand for "ab", "ba" and "Ab".
Preset f2_classical_preset(std::string_view sigma);
Preset f2_torus_preset(int M, int j, int k);

/// Evaluates every grid entry in the model.
std::vector<std::vector<Matrix>> evaluate_grid(const CoefficientGrid& grid, const MatrixModel& model);

/// The P/Q grid of range and initial projections of A..H (free group presets).
std::vector<std::vector<Matrix>> magic_grid(const MatrixModel& model);

struct ActionTable {
  Group group;
  int radius = 0;
  std::size_t dim = 0;
  int order = 1;
  std::vector<std::vector<Matrix>> grid;
  /// rows[w][gamma'] = q_{gamma',w}; zero coefficients are not stored.
  std::map<Element, std::map<Element, Matrix>> rows;

  const std::map<Element, Matrix>& row(const Element& w) const;
};

using ActionRow = std::map<Element, Matrix>;

/// Row w is the sum over all formal words x_1..x_n of the geodesic word of w
/// of lambda_{x_1...x_n} (x) q_{w_1,x_1} ... q_{w_n,x_n}. Throws std::out_of_range
/// past the ball cap and std::invalid_argument on a malformed grid.
ActionTable build_action(const Group& group, const std::vector<std::vector<Matrix>>& grid, int radius);

/// Product of two rows as elements of C[G] (x) M_d.
ActionRow multiply_rows(const Group& group, const ActionRow& a, const ActionRow& b);

struct SubCheck {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;  // empty when passing
};

struct ActionReport {
  std::vector<SubCheck> checks;
  bool ok() const;
  const SubCheck& get(std::string_view name) const;
};

/// Sub-checks homomorphism, star, dhat_commutation, trace, corep_unitary, cancellation.
ActionReport check_action(const ActionTable& table);

/// Recomputes row w as row(u) * row(x) along the geodesic word w = u x.
ActionRow derive_word_coefficients(const ActionTable& table, const Element& w);

/// For cyclic:n tables: alpha(lambda_k) = lambda_k (x) A^k + lambda_{n-k} (x) B^k for 1 <= k < n.
bool matches_zn_closed_form(const ActionTable& table, const Matrix& A, const Matrix& B);

struct PresetVerification {
  CheckReport relations;
  CoproductReport coproduct;
  std::optional<MagicUnitaryReport> magic;
  std::optional<bool> noncommutative;  // AB != BA, z4_pauli only
  bool ok() const;
};

PresetVerification verify_preset(const Preset& preset);

/// Radius used for action checks: the diameter for finite groups, 3 for free
/// groups, 8 for Z.
int default_action_radius(const Group& group);

struct CoproductDivergence {
  Matrix transposition_delta;    // Delta_1(A + C)
  Matrix transposition_square;   // (A + C) (x) (A + C)
  Matrix dihedral_delta;         // Delta_2(L)
  Matrix dihedral_square;        // L (x) L
  bool transposition_grouplike = false;
  bool dihedral_grouplike = false;
};

/// lambda_s (+) lambda_s in both S3 models under their coproducts.
CoproductDivergence coproduct_divergence();

}  // namespace qiso
