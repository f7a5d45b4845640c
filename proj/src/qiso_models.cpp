#include "qiso/qiso_models.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qiso {

std::map<Element, Matrix> regular_representation(const Group& group) {
  if (!group.is_finite()) throw std::invalid_argument("regular representation needs a finite group");
  const auto elems = group.elements();
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::map<Element, Matrix> out;
  for (const auto& g : elems) {
    Matrix m(elems.size(), elems.size());
    for (std::size_t h = 0; h < elems.size(); ++h) m.set(index.at(group.multiply(g, elems[h])), h, Cyclotomic(1));
    out.emplace(g, std::move(m));
  }
  return out;
}

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::vector<std::vector<StarPolynomial>> parse_grid(const Rows& rows) {
  std::vector<std::vector<StarPolynomial>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const auto& e : r) out.back().push_back(parse_polynomial(e));
  }
  return out;
}

Preset assemble(std::string name, Group group, std::vector<std::string> generators,
                const std::vector<std::string>& relations, const Rows& corep, const Rows& grid,
                MatrixModel model) {
  Preset p{std::move(name), std::move(group), {}, std::move(model), {}, {}};
  p.presentation.name = p.name;
  p.presentation.generators = std::move(generators);
  for (const auto& r : relations) p.presentation.add_relation(r);
  p.presentation.corep = parse_grid(corep);
  p.grid = parse_grid(grid);
  p.model.name = p.name;
  p.presentation.validate();
  return p;
}

std::string pw(const std::string& x, int k) { return k == 1 ? x : x + "^" + std::to_string(k); }

const Rows kAdjointPairGrid = {{"A", "B"}, {"B*", "A*"}};

MatrixModel block_pair_model(const Matrix& lambda1) {
  const std::size_t n = lambda1.rows();
  MatrixModel m;
  m.root_order = 1;
  m.dim = 2 * n;
  m.assign["A"] = direct_sum(lambda1, Matrix::zeros(n, n));
  m.assign["B"] = direct_sum(Matrix::zeros(n, n), lambda1);
  return m;
}

Matrix regular_of(const Group& g, std::string_view word) {
  return regular_representation(g).at(g.parse_element(word));
}

std::vector<std::string> z4_relations() {
  return {"A A* = A* A",
          "B B* = B* B",
          "A B + B A = 0",
          "A B* + B A* = 0",
          "A* B + B A* = 0",
          "A^2 + B^2 = A*^2 + B*^2",
          "A^2 B + B^3 = B*",
          "B^2 A + A^3 = A*",
          "A^4 + B^4 + 2 A^2 B^2 = 1",
          "A A* + B B* = 1"};
}

const std::vector<std::string> kF2Labels = {"A", "B", "C", "D", "E", "F", "G", "H"};
const Rows kF2Grid = {{"A", "B", "C", "D"}, {"B*", "A*", "D*", "C*"}, {"E", "F", "G", "H"}, {"F*", "E*", "H*", "G*"}};

std::vector<std::string> f2_relations() {
  std::vector<std::string> rel;
  for (const auto& x : kF2Labels) rel.push_back(x + " " + x + "* " + x + " = " + x);
  auto P = [](const std::string& x) { return x + " " + x + "*"; };
  auto Q = [](const std::string& x) { return x + "* " + x; };
  auto sum = [](std::vector<std::string> t) {
    std::string s;
    for (const auto& x : t) s += (s.empty() ? "" : " + ") + x;
    return s + " = 1";
  };
  // rows of the P/Q grid
  rel.push_back(sum({P("A"), P("B"), P("C"), P("D")}));
  rel.push_back(sum({P("E"), P("F"), P("G"), P("H")}));
  rel.push_back(sum({Q("B"), Q("A"), Q("D"), Q("C")}));
  rel.push_back(sum({Q("F"), Q("E"), Q("H"), Q("G")}));
  // columns
  rel.push_back(sum({P("A"), P("E"), Q("B"), Q("F")}));
  rel.push_back(sum({P("B"), P("F"), Q("A"), Q("E")}));
  rel.push_back(sum({P("C"), P("G"), Q("D"), Q("H")}));
  rel.push_back(sum({P("D"), P("H"), Q("C"), Q("G")}));
  for (int block = 0; block < 2; ++block) {
    const std::string* l = kF2Labels.data() + 4 * block;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        rel.push_back(l[i] + " " + l[j] + "* = 0");
        rel.push_back(l[i] + "* " + l[j] + " = 0");
      }
  }
  return rel;
}

Preset f2_preset(std::string name, MatrixModel model, std::string note) {
  Preset p = assemble(std::move(name), Group::free(2), kF2Labels, f2_relations(), kF2Grid, kF2Grid, std::move(model));
  p.note = std::move(note);
  return p;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + s + "'");
  }
}

void check_root_order(int M) {
  if (M < 1 || M > kMaxCyclotomicOrder)
    throw std::invalid_argument("root order must lie in [1, " + std::to_string(kMaxCyclotomicOrder) + "]");
}

const char* kCommutativeNote = "classical model; no noncommutative finite-dimensional model is known for the free group";

}  // namespace

Preset zn_preset(int n) {
  if (n == 4) throw std::invalid_argument("zn excludes n = 4; use z4_commutative or z4_pauli");
  if (n < 3 || n > 64) throw std::invalid_argument("zn needs 3 <= n <= 64");
  Group g = Group::cyclic(n);
  std::vector<std::string> rel = {"A A* = A* A",
                                  "B B* = B* B",
                                  "A B + B A = 0",
                                  pw("A", n - 1) + " = A*",
                                  pw("B", n - 1) + " = B*",
                                  "A B = 0",
                                  "B A = 0",
                                  "A* B = 0",
                                  "B A* = 0",
                                  "A A* + B B* = 1",
                                  pw("A", n) + " + " + pw("B", n) + " = 1"};
  if (n == 3) {
    rel.push_back("A B* = 0");
    rel.push_back("B A* = 0");
  } else {
    rel.push_back("A^2 B = 0");
    rel.push_back("B^2 A = 0");
  }
  return assemble("zn:" + std::to_string(n), g, {"A", "B"}, rel, kAdjointPairGrid, kAdjointPairGrid,
                  block_pair_model(regular_of(g, "1")));
}

Preset z4_commutative_preset() {
  Group g = Group::cyclic(4);
  return assemble("z4_commutative", g, {"A", "B"}, z4_relations(), kAdjointPairGrid, kAdjointPairGrid,
                  block_pair_model(regular_of(g, "1")));
}

Preset z4_pauli_preset() {
  const Cyclotomic r = parse_scalar("1/2*z(8,1) - 1/2*z(8,3)");  // 1/sqrt 2
  const Cyclotomic i = Cyclotomic::root_of_unity(8, 2);
  MatrixModel m;
  m.root_order = 8;
  m.dim = 2;
  m.assign["A"] = Matrix::from_rows({{Cyclotomic::zero(8), r}, {r, Cyclotomic::zero(8)}});
  m.assign["B"] = Matrix::from_rows({{Cyclotomic::zero(8), -(r * i)}, {r * i, Cyclotomic::zero(8)}});
  Preset p = assemble("z4_pauli", Group::cyclic(4), {"A", "B"}, z4_relations(), kAdjointPairGrid, kAdjointPairGrid,
                      std::move(m));
  p.note = "A and B are Pauli matrices scaled by 1/sqrt(2)";
  return p;
}

Preset z_torus_preset(int M, int k, int p) {
  check_root_order(M);
  if (p != 0 && p != 1) throw std::invalid_argument("z_torus projection must be 0 or 1");
  const Cyclotomic u = Cyclotomic::root_of_unity(M, k);
  MatrixModel m;
  m.root_order = M;
  m.dim = 1;
  m.assign["A"] = Matrix::scalar(p == 1 ? u : Cyclotomic::zero(M));
  m.assign["B"] = Matrix::scalar(p == 0 ? u : Cyclotomic::zero(M));
  Preset out = assemble("z_torus:" + std::to_string(M) + ":" + std::to_string(k) + ":" + std::to_string(p),
                        Group::free_abelian(1), {"A", "B"},
                        {"A A* = A* A", "B B* = B* B", "A B = 0", "B A = 0", "A* A + B* B = 1"}, kAdjointPairGrid,
                        kAdjointPairGrid, std::move(m));
  out.note = "one-dimensional point of the circle-times-reflection family; action checked on a truncated ball";
  return out;
}

Preset s3_transpositions_preset() {
  Group g = Group::s3_transpositions();
  const Matrix ls = regular_of(g, "s"), lt = regular_of(g, "t"), z = Matrix::zeros(6, 6);
  MatrixModel m;
  m.root_order = 1;
  m.dim = 12;
  m.assign["A"] = direct_sum(ls, z);
  m.assign["B"] = direct_sum(z, lt);
  m.assign["C"] = direct_sum(z, ls);
  m.assign["D"] = direct_sum(lt, z);
  const Rows grid = {{"A", "B"}, {"C", "D"}};
  return assemble("s3_transpositions", g, {"A", "B", "C", "D"},
                  {"A^2 + B^2 = 1", "A B = 0", "B A = 0", "C^2 + D^2 = 1", "C D = 0", "D C = 0", "A C + B D = 0",
                   "C A + D B = 0", "D A C = 0", "C B D = 0", "A D B = 0", "B C A = 0",
                   "D A D + C B C = A D A + B C B", "A* = A", "B* = B", "C* = C", "D* = D", "D A D = A D A",
                   "B C B = C B C"},
                  grid, grid, std::move(m));
}

Preset s3_dihedral_preset() {
  Group g = Group::s3_dihedral();
  const Matrix ls = regular_of(g, "s"), lt = regular_of(g, "t"), z = Matrix::zeros(6, 6);
  MatrixModel m;
  m.root_order = 1;
  m.dim = 12;
  m.assign["E"] = direct_sum(lt, z);
  m.assign["F"] = direct_sum(z, lt);
  m.assign["L"] = direct_sum(ls, ls);
  Preset p = assemble("s3_dihedral", g, {"E", "F", "L"},
                      {"E E* + F F* = 1", "E F + F E = 0", "F* F + E* E = 1", "E* E + F F* = 1", "E* F + F E* = 0",
                       "F* E + E F* = 0", "F* F + E E* = 1", "E^2 F = 0", "F^2 E = 0", "E^3 + F^3 = 1",
                       "E L = L E^2", "F L = L F^2", "L = L*", "E^2 = E*", "F^2 = F*", "L* L = 1", "L L* = 1"},
                      {{"E", "F", "0"}, {"F^2", "E^2", "0"}, {"0", "0", "L"}},
                      {{"L", "0", "0"}, {"0", "E", "F"}, {"0", "F^2", "E^2"}}, std::move(m));
  p.note = "G = H = K = 0; corep grid in the order t, t^-1, s";
  return p;
}

Preset f2_classical_preset(std::string_view sigma) {
  std::string s(sigma);
  if (s == "identity") s = "ab";
  else if (s == "swap") s = "ba";
  else if (s == "invert") s = "Ab";
  const std::string letters = "aAbB";
  auto idx = [&](char c) -> int {
    auto p = letters.find(c);
    if (p == std::string::npos) throw std::invalid_argument("f2_classical: unknown letter in '" + std::string(sigma) + "'");
    return static_cast<int>(p);
  };
  if (s.size() != 2) throw std::invalid_argument("f2_classical: sigma must give the images of a and b");
  int ia = idx(s[0]), ib = idx(s[1]);
  if (ia / 2 == ib / 2) throw std::invalid_argument("f2_classical: images of a and b must be independent");
  // image of each generator in the order a, A, b, B
  int image[4] = {ia, ia ^ 1, ib, ib ^ 1};
  MatrixModel m;
  m.root_order = 1;
  m.dim = 1;
  for (int x : {0, 2})
    for (int z = 0; z < 4; ++z)
      m.assign[kF2Labels[(x / 2) * 4 + z]] = Matrix::scalar(Cyclotomic(image[x] == z ? 1 : 0));
  return f2_preset("f2_classical:" + s, std::move(m), kCommutativeNote);
}

Preset f2_torus_preset(int M, int j, int k) {
  check_root_order(M);
  MatrixModel m;
  m.root_order = M;
  m.dim = 1;
  for (const auto& x : kF2Labels) m.assign[x] = Matrix::scalar(Cyclotomic::zero(M));
  m.assign["A"] = Matrix::scalar(Cyclotomic::root_of_unity(M, j));
  m.assign["G"] = Matrix::scalar(Cyclotomic::root_of_unity(M, k));
  return f2_preset("f2_torus:" + std::to_string(M) + ":" + std::to_string(j) + ":" + std::to_string(k), std::move(m),
                   kCommutativeNote);
}

Preset make_preset(std::string_view spec) {
  std::vector<std::string> parts;
  std::stringstream ss{std::string(spec)};
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty preset name");
  const std::string& name = parts[0];
  auto need = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("preset " + name + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (name == "zn") {
    need(1);
    return zn_preset(parse_int(parts[1], "n"));
  }
  if (name == "z4_commutative") {
    need(0);
    return z4_commutative_preset();
  }
  if (name == "z4_pauli") {
    need(0);
    return z4_pauli_preset();
  }
  if (name == "s3_transpositions") {
    need(0);
    return s3_transpositions_preset();
  }
  if (name == "s3_dihedral") {
    need(0);
    return s3_dihedral_preset();
  }
  if (name == "z_torus") {
    need(3);
    return z_torus_preset(parse_int(parts[1], "M"), parse_int(parts[2], "k"), parse_int(parts[3], "p"));
  }
  if (name == "f2_classical") {
    need(1);
    return f2_classical_preset(parts[1]);
  }
  if (name == "f2_torus") {
    need(3);
    return f2_torus_preset(parse_int(parts[1], "M"), parse_int(parts[2], "j"), parse_int(parts[3], "k"));
  }
  throw std::invalid_argument("unknown preset '" + std::string(spec) + "'");
}

std::vector<PresetInfo> preset_catalog() {
  return {
      {"zn", "n (3 <= n <= 64, n != 4)", "A = lambda_1 + 0, B = 0 + lambda_1 on C*(Z_n) + C*(Z_n)"},
      {"z4_commutative", "", "the zn shape for n = 4"},
      {"z4_pauli", "", "A = sigma_1/sqrt(2), B = sigma_2/sqrt(2); noncommutative"},
      {"z_torus", "M:k:p (p in {0,1})", "A = zeta_M^k p, B = zeta_M^k (1 - p) acting on Z"},
      {"s3_transpositions", "", "A, B, C, D in C*(S3) + C*(S3), S = {(12), (23)}"},
      {"s3_dihedral", "", "E, F, L in C*(S3) + C*(S3), S = {(12), (123), (132)}"},
      {"f2_classical", "sigma: images of a and b, or identity/swap/invert", "0/1 coefficients of a signed permutation"},
      {"f2_torus", "M:j:k", "A = zeta_M^j, G = zeta_M^k, others 0"},
  };
}

std::vector<std::vector<Matrix>> evaluate_grid(const CoefficientGrid& grid, const MatrixModel& model) {
  std::vector<std::vector<Matrix>> out;
  for (const auto& row : grid) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(evaluate(e, model));
  }
  return out;
}

std::vector<std::vector<Matrix>> magic_grid(const MatrixModel& model) {
  auto P = [&](const char* x) { return model.at(x) * model.at(x).adjoint(); };
  auto Q = [&](const char* x) { return model.at(x).adjoint() * model.at(x); };
  return {{P("A"), P("B"), P("C"), P("D")},
          {P("E"), P("F"), P("G"), P("H")},
          {Q("B"), Q("A"), Q("D"), Q("C")},
          {Q("F"), Q("E"), Q("H"), Q("G")}};
}

// ---------------------------------------------------------------------------
// Action tables

const std::map<Element, Matrix>& ActionTable::row(const Element& w) const {
  auto it = rows.find(w);
  if (it == rows.end()) throw std::out_of_range("element " + group.format(w) + " is outside the action table");
  return it->second;
}

namespace {

void add_entry(ActionRow& row, const Element& g, const Matrix& m) {
  if (m.is_zero()) return;
  auto it = row.find(g);
  if (it == row.end()) {
    row.emplace(g, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) row.erase(it);
}

}  // namespace

ActionTable build_action(const Group& group, const std::vector<std::vector<Matrix>>& grid, int radius) {
  const std::size_t k = group.generator_count();
  if (grid.size() != k) throw std::invalid_argument("coefficient grid must be indexed by the generating set");
  for (const auto& r : grid)
    if (r.size() != k) throw std::invalid_argument("coefficient grid must be square");
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  ActionTable t{group, radius, grid[0][0].rows(), grid[0][0].order(), grid, {}};
  for (const auto& r : grid)
    for (const auto& m : r) {
      if (!m.square() || m.rows() != t.dim) throw std::invalid_argument("grid entries must share one square shape");
      t.order = common_order(t.order, m.order());
    }
  for (const auto& w : group.ball(radius)) {
    const FormalWord word = group.geodesic_word(w);
    ActionRow row;
    std::function<void(std::size_t, const Element&, const Matrix&)> walk = [&](std::size_t i, const Element& at,
                                                                                 const Matrix& acc) {
      if (i == word.size()) {
        add_entry(row, at, acc);
        return;
      }
      for (std::size_t z = 0; z < k; ++z) {
        const Matrix& q = grid[word.letters[i]][z];
        if (q.is_zero()) continue;
        Matrix next = acc * q;
        if (next.is_zero()) continue;
        walk(i + 1, group.multiply(at, group.generator(z)), next);
      }
    };
    walk(0, group.identity(), Matrix::identity(t.dim, t.order));
    t.rows.emplace(w, std::move(row));
  }
  return t;
}

ActionRow multiply_rows(const Group& group, const ActionRow& a, const ActionRow& b) {
  ActionRow out;
  for (const auto& [g, m] : a)
    for (const auto& [h, n] : b) add_entry(out, group.multiply(g, h), m * n);
  return out;
}

bool ActionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return !c.applicable || c.pass; });
}

const SubCheck& ActionReport::get(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no sub-check named " + std::string(name));
}

namespace {

void fail(SubCheck& c, const std::string& what) {
  if (c.pass) c.counterexample = what;
  c.pass = false;
}

bool rows_equal(const ActionRow& a, const ActionRow& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [g, m] : a) {
    auto it = b.find(g);
    if (it == b.end() || !(it->second == m)) return false;
  }
  return true;
}

}  // namespace

ActionReport check_action(const ActionTable& t) {
  const Group& G = t.group;
  const Matrix id = Matrix::identity(t.dim, t.order);
  auto named = [](const char* n) {
    SubCheck c;
    c.name = n;
    return c;
  };
  SubCheck hom = named("homomorphism"), star = named("star"), dhat = named("dhat_commutation"),
           trace = named("trace"), corep = named("corep_unitary"), cancel = named("cancellation");
  const bool all_pairs = G.is_finite() && t.radius >= G.diameter();

  for (const auto& [g, rg] : t.rows)
    for (const auto& [h, rh] : t.rows) {
      if (!all_pairs && G.length(g) + G.length(h) > t.radius) continue;
      ++hom.checked;
      if (!rows_equal(multiply_rows(G, rg, rh), t.row(G.multiply(g, h))))
        fail(hom, "g = " + G.format(g) + ", h = " + G.format(h));
    }

  for (const auto& [w, row] : t.rows) {
    const ActionRow& inv = t.row(G.inverse(w));
    for (const auto& [gp, m] : row) {
      ++star.checked;
      auto it = inv.find(G.inverse(gp));
      if (it == inv.end() || !(it->second == m.adjoint()))
        fail(star, "w = " + G.format(w) + ", gamma' = " + G.format(gp));
      ++dhat.checked;
      if (G.length(gp) != G.length(w)) fail(dhat, "w = " + G.format(w) + ", gamma' = " + G.format(gp));
    }
    ++trace.checked;
    auto e = row.find(G.identity());
    bool good = G.is_identity(w) ? (e != row.end() && e->second == id) : e == row.end();
    if (!good) fail(trace, "w = " + G.format(w));
  }

  ++corep.checked;
  {
    Matrix u = block_matrix(t.grid);
    Matrix uid = Matrix::identity(u.rows(), u.order());
    if (!(u.adjoint() * u == uid && u * u.adjoint() == uid)) fail(corep, "[q_{t,s}] is not unitary");
  }

  cancel.applicable = G.family() == GroupFamily::Free;
  if (cancel.applicable) {
    const std::size_t k = G.generator_count();
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z) {
        if (z == G.generator_inverse(y)) continue;
        ++cancel.checked;
        Matrix sum = Matrix::zeros(t.dim, t.dim, t.order);
        for (std::size_t x = 0; x < k; ++x) sum += t.grid[y][x] * t.grid[z][G.generator_inverse(x)];
        if (!sum.is_zero()) fail(cancel, "y = " + G.generator_label(y) + ", z = " + G.generator_label(z));
      }
  }
  return {{hom, star, dhat, trace, corep, cancel}};
}

ActionRow derive_word_coefficients(const ActionTable& t, const Element& w) {
  const Group& G = t.group;
  if (G.length(w) > t.radius) throw std::out_of_range("word is longer than the table radius");
  if (G.is_identity(w)) return {{G.identity(), Matrix::identity(t.dim, t.order)}};
  FormalWord word = G.geodesic_word(w);
  const std::size_t last = word.letters.back();
  word.letters.pop_back();
  return multiply_rows(G, t.row(G.reduce(word)), t.row(G.generator(last)));
}

bool matches_zn_closed_form(const ActionTable& t, const Matrix& A, const Matrix& B) {
  const Group& G = t.group;
  if (G.family() != GroupFamily::Cyclic) throw std::invalid_argument("closed form applies to cyclic groups");
  const int n = G.rank();
  for (int k = 1; k < n; ++k) {
    ActionRow expected;
    add_entry(expected, Element({k}), power(A, k));
    add_entry(expected, Element({n - k}), power(B, k));
    if (!rows_equal(expected, t.row(Element({k})))) return false;
  }
  return true;
}

bool PresetVerification::ok() const {
  return relations.ok() && coproduct.ok() && (!magic || magic->ok) && noncommutative.value_or(true);
}

PresetVerification verify_preset(const Preset& p) {
  PresetVerification v;
  v.relations = check(p.presentation, p.model);
  v.coproduct = coproduct_check(p.presentation, p.model);
  if (p.group.family() == GroupFamily::Free) v.magic = is_magic_unitary(magic_grid(p.model));
  if (p.name == "z4_pauli") v.noncommutative = !evaluate(parse_polynomial("A B - B A"), p.model).is_zero();
  return v;
}

int default_action_radius(const Group& g) {
  if (g.is_finite()) return g.diameter();
  if (g.family() == GroupFamily::FreeAbelian && g.rank() == 1) return 8;
  return 3;
}

CoproductDivergence coproduct_divergence() {
  CoproductDivergence d;
  Preset t = s3_transpositions_preset();
  Matrix ac = t.model.at("A") + t.model.at("C");
  d.transposition_delta = coproduct_entry(t.presentation, t.model, 0, 0) + coproduct_entry(t.presentation, t.model, 1, 0);
  d.transposition_square = kronecker(ac, ac);
  d.transposition_grouplike = d.transposition_delta == d.transposition_square;
  Preset h = s3_dihedral_preset();
  const Matrix& L = h.model.at("L");
  d.dihedral_delta = coproduct_entry(h.presentation, h.model, 2, 2);
  d.dihedral_square = kronecker(L, L);
  d.dihedral_grouplike = d.dihedral_delta == d.dihedral_square;
  return d;
}

}  // namespace qiso
