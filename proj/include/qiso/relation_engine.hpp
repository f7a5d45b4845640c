#pragma once

#include "qiso/cyclotomic.hpp"
#include "qiso/matrix.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// A generator label, possibly starred.
struct Atom {
  std::string label;
  bool adjoint = false;
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using Word = std::vector<Atom>;

/// Degree first, then atom-wise lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative *-polynomial with cyclotomic coefficients, kept canonical:
/// equal words merged, zero terms dropped. The empty word is the unit.
class StarPolynomial {
 public:
  StarPolynomial() = default;
  static StarPolynomial constant(const Cyclotomic& c);
  static StarPolynomial atom(std::string label, bool adjoint = false);

  const std::map<Word, Cyclotomic, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True for c * unit (including zero).
  bool is_constant() const;
  Cyclotomic constant_term() const;
  /// The atom when the polynomial is exactly 1 * X (unstarred), else nullopt.
  std::optional<std::string> plain_atom() const;
  std::set<std::string> labels() const;

  StarPolynomial& operator+=(const StarPolynomial& o);
  StarPolynomial& operator-=(const StarPolynomial& o);
  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) { return a += b; }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) { return a -= b; }
  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b);
  friend StarPolynomial operator*(const Cyclotomic& c, const StarPolynomial& p);
  StarPolynomial operator-() const;
  StarPolynomial adjoint() const;
  StarPolynomial power(unsigned k) const;

  friend bool operator==(const StarPolynomial& a, const StarPolynomial& b);

  /// DSL text; parse_polynomial(to_string()) reproduces the polynomial.
  std::string to_string() const;

 private:
  void add_term(const Word& w, const Cyclotomic& c);
  std::map<Word, Cyclotomic, WordLess> terms_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        message_(message),
        line_(line),
        column_(column) {}
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := factor (['*'] factor)*
/// factor := primary ['*'] ['^' int]     -- '*' glued to an identifier or ')' is the adjoint
/// primary:= scalar | ident | '(' expr ')'
/// scalar := int | int '/' int | 'z(' int ',' int ')'
/// A '*' separated from the preceding token by whitespace, or following a scalar,
/// is a product. `A*^2` is (A*)^2. `line` is used for error positions.
StarPolynomial parse_polynomial(std::string_view text, int line = 1);

/// A scalar literal (sums/products of p/q and z(N,k)); no generators allowed.
Cyclotomic parse_scalar(std::string_view text);

struct MatrixModel {
  std::string name;
  int root_order = 1;
  std::size_t dim = 0;
  std::map<std::string, Matrix> assign;
  /// Throws std::invalid_argument for unassigned labels.
  const Matrix& at(const std::string& label) const;
};

/// Homomorphic evaluation: X* maps to the adjoint of X, the unit to the identity.
/// Throws std::invalid_argument on unassigned labels or non-square/mismatched matrices.
Matrix evaluate(const StarPolynomial& p, const MatrixModel& model);

struct Relation {
  std::string text;  // as written (lhs or "lhs = rhs")
  StarPolynomial poly;  // lhs - rhs
  int line = 0;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::vector<std::vector<StarPolynomial>> corep;  // empty when absent

  bool has_corep() const { return !corep.empty(); }
  /// Checks declared labels and grid shape. Throws std::invalid_argument.
  void validate() const;
  /// Adds a relation from DSL text, optionally "lhs = rhs".
  void add_relation(std::string_view text, int line = 0);
};

/// Presentation text format:
///   # comment
///   name: zn3                      (optional)
///   generators: A, B
///   corep:                         (optional, one comma-separated row per line)
///     A, B
///     B*, A*
///   relations:
///     A B = 0
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

/// {"root_order": N, "dim": d, "assign": {label: [[entry, ...], ...]}} with
/// entries in scalar literal syntax (strings) or integers.
MatrixModel parse_model_json(std::string_view text);
MatrixModel load_model(const std::string& path);

struct RelationResult {
  std::string text;
  bool pass = false;
  Cyclotomic residual_norm_sq;  // sum of |entry|^2 of lhs - rhs
};

struct CheckReport {
  std::vector<RelationResult> relations;
  bool has_corep = false;
  bool corep_unitary = true;
  std::string corep_detail;
  bool ok() const;
  std::size_t failures() const;
};

CheckReport check(const Presentation& pres, const MatrixModel& model);

struct GridEntryResult {
  std::size_t row = 0, col = 0;
  bool pass = false;
};

struct CoproductReport {
  /// generator -> (row, col) of the grid entry it occupies as a plain atom
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::string> problems;  // missing or inconsistent positions
  CheckReport relations;              // all relations under the induced assignment
  std::vector<GridEntryResult> grid;  // every grid entry evaluated under Delta
  bool ok() const;
};

/// Delta(u_ij) = sum_k model(u_ik) (x) model(u_kj) for every generator sitting at a
/// plain grid position; all relations are re-checked under that assignment.
CoproductReport coproduct_check(const Presentation& pres, const MatrixModel& model);

/// The induced Delta-model itself (dimension dim^2).
MatrixModel coproduct_model(const Presentation& pres, const MatrixModel& model);

/// Grid entry (i, j) of Delta: sum_k M(u_ik) (x) M(u_kj).
Matrix coproduct_entry(const Presentation& pres, const MatrixModel& model, std::size_t i, std::size_t j);

}  // namespace qiso
