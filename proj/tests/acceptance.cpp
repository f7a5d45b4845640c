// Acceptance suite: one PASS/FAIL line per criterion. Every expected value is
// recomputed here by an independent brute-force oracle or stated as a literal.
//
// Two criteria are known to fail (see README, "Known failures"). The exit status
// is 0 when exactly the known criteria fail, so a newly failing criterion or a
// known failure that starts passing both turn the run red.

#define DOCTEST_CONFIG_DISABLE
#include "support.hpp"

#include "qiso/dirac_heat.hpp"
#include "qiso/laplacian.hpp"
#include "qiso/qiso_models.hpp"
#include "qiso/real_structure.hpp"
#include "qiso/relation_engine.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace qiso;

namespace {

const std::set<int> kKnownFailures = {1, 3};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

// ---------------------------------------------------------------- free words

char inv(char c) { return std::islower(static_cast<unsigned char>(c)) ? std::toupper(c) : std::tolower(c); }

std::string freely_reduce(const std::string& w) {
  std::string s;
  for (char c : w) {
    if (!s.empty() && s.back() == inv(c)) s.pop_back();
    else s.push_back(c);
  }
  return s;
}

std::string letters(int rank) {
  std::string l;
  for (int i = 0; i < rank; ++i) {
    l.push_back(static_cast<char>('a' + i));
    l.push_back(static_cast<char>('A' + i));
  }
  return l;
}

void all_words(const std::string& alphabet, int n, bool reduced, const std::function<void(const std::string&)>& f) {
  std::string w;
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == n) return f(w);
    for (char c : alphabet) {
      if (reduced && !w.empty() && w.back() == inv(c)) continue;
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
}

// average of (l(gamma k) - l(k))^2 over reduced k of length n
Rational oracle_reduced(int rank, const std::string& gamma, int n) {
  long sum = 0, count = 0;
  all_words(letters(rank), n, true, [&](const std::string& k) {
    long d = static_cast<long>(freely_reduce(gamma + k).size()) - n;
    sum += d * d;
    ++count;
  });
  return Rational(sum, count);
}

// average over all formal words k of length n; only the junction cancels
Rational oracle_formal(int rank, const std::string& gamma, int n) {
  long sum = 0, count = 0;
  all_words(letters(rank), n, false, [&](const std::string& k) {
    long j = 0;
    while (j < static_cast<long>(gamma.size()) && j < n && k[j] == inv(gamma[gamma.size() - 1 - j])) ++j;
    long d = static_cast<long>(gamma.size()) - 2 * j;
    sum += d * d;
    ++count;
  });
  return Rational(sum, count);
}

// ---------------------------------------------------------------- S3 by permutations

using Perm = std::array<int, 3>;

Perm compose(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }

std::map<Perm, int> bfs_lengths(const std::vector<Perm>& gens) {
  std::map<Perm, int> dist{{{0, 1, 2}, 0}};
  std::vector<Perm> frontier{{0, 1, 2}};
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<Perm> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        Perm q = compose(p, s);
        if (dist.emplace(q, d).second) next.push_back(q);
      }
    frontier = next;
  }
  return dist;
}

// length -> set of coefficient values
std::map<int, std::set<Rational>> s3_oracle(const std::vector<Perm>& gens) {
  auto l = bfs_lengths(gens);
  std::map<int, std::set<Rational>> table;
  for (const auto& [g, lg] : l) {
    long sum = 0;
    for (const auto& [k, lk] : l) {
      long d = l.at(compose(g, k)) - lk;
      sum += d * d;
    }
    table[lg].insert(Rational(sum, static_cast<long>(l.size())));
  }
  return table;
}

// ---------------------------------------------------------------- matrices

Matrix power(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Matrix blocks(const std::vector<std::vector<Matrix>>& grid) {
  const std::size_t d = grid[0][0].rows();
  std::vector<std::vector<Cyclotomic>> rows(grid.size() * d, std::vector<Cyclotomic>(grid[0].size() * d));
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) rows[i * d + r][j * d + c] = grid[i][j](r, c);
  return Matrix::from_rows(rows);
}

std::map<Element, Matrix> drop_zero(const std::map<Element, Matrix>& row) {
  std::map<Element, Matrix> out;
  for (const auto& [k, m] : row)
    if (!m.is_zero()) out.emplace(k, m);
  return out;
}

bool same_row(const std::map<Element, Matrix>& a, const std::map<Element, Matrix>& b) {
  auto x = drop_zero(a), y = drop_zero(b);
  if (x.size() != y.size()) return false;
  for (const auto& [k, m] : x)
    if (!y.count(k) || !(y.at(k) == m)) return false;
  return true;
}

const char* kAllPresets[] = {"zn:3", "zn:5", "zn:6", "z4_commutative", "z4_pauli", "z_torus:8:1:1", "z_torus:6:1:0",
                             "s3_transpositions", "s3_dihedral", "f2_classical:ab", "f2_classical:ba",
                             "f2_classical:Ab", "f2_torus:8:1:3"};

// ---------------------------------------------------------------- criteria

void criterion1(Outcome& o) {
  const std::map<int, std::vector<std::string>> reps = {{1, {"a", "B"}}, {2, {"ab", "aa", "Ba"}}, {3, {"aBa", "bAA", "abb"}}};
  std::ostringstream vals;
  for (int m = 1; m <= 3; ++m) {
    FreeRReport r = free_R(2, m, m + 4);
    o.require(r.reduced_stable && r.formal_stable, "R_" + std::to_string(m) + " not stable on [m, m+4]");
    o.require(r.representative_independent, "R_" + std::to_string(m) + " depends on the representative");
    for (const auto& g : reps.at(m))
      for (int n = m; n <= m + 4; ++n) {
        o.require(r.reduced_by_n[n - m] == oracle_reduced(2, g, n),
                  "reduced r_{" + std::to_string(n) + "," + g + "} differs from the oracle");
        o.require(r.formal_by_n[n - m] == oracle_formal(2, g, n),
                  "formal r_{" + std::to_string(n) + "," + g + "} differs from the oracle");
      }
    vals << " R" << m << "=" << r.reduced.to_string() << "/" << r.formal.to_string();
    if (m >= 2) o.require(r.reduced != r.formal, "readings agree at m=" + std::to_string(m) + ", no discrepancy to flag");
    if (m == 1) o.require(r.reduced == Rational(1) && r.formal == Rational(1), "R_1 != 1");
    if (m == 2) o.require(r.formal == Rational(13, 16) * Rational(4), "formal R_2 = " + r.formal.to_string() + ", expected 13/4");
    if (m == 3)
      o.require(r.formal == Rational(200, 256) * Rational(9),
                "formal R_3 = " + r.formal.to_string() + ", expected 225/32");
  }
  if (o.pass) o.detail << "reduced/formal:" << vals.str();
  else o.detail << " (reduced/formal:" << vals.str() << ")";
}

void criterion2(Outcome& o) {
  std::size_t checked = 0;
  for (int rank : {2, 3})
    for (int m = 1; m <= 3; ++m) {
      FreeRReport r = free_R(rank, m, m + 4);
      Rational lo = Rational(2L * rank - 1, 2L * rank) * Rational(long(m) * m), hi(long(m) * m);
      for (const Rational& v : {r.reduced, r.formal}) {
        ++checked;
        o.require(lo <= v && v <= hi, "rank " + std::to_string(rank) + " R_" + std::to_string(m) + " = " +
                                          v.to_string() + " outside [" + lo.to_string() + ", " + hi.to_string() + "]");
      }
      o.require(r.reduced_in_bounds && r.formal_in_bounds, "library bound flag disagrees");
    }
  if (o.pass) o.detail << checked << " values in [(2r-1)/(2r) m^2, m^2] for r = 2, 3 and m = 1..3";
}

void criterion3(Outcome& o) {
  struct Case {
    const char* spec;
    std::vector<Perm> gens;
  };
  const Case cases[] = {{"s3:transpositions", {{1, 0, 2}, {0, 2, 1}}},
                        {"s3:dihedral", {{1, 0, 2}, {1, 2, 0}, {2, 0, 1}}}};
  std::ostringstream summary;
  for (const auto& c : cases) {
    auto oracle = s3_oracle(c.gens);
    LaplacianReport r = admissibility_report(Group::from_spec(c.spec), 3);
    summary << " " << c.spec << " {";
    bool first = true;
    for (const auto& [len, vals] : oracle)
      for (const auto& v : vals) summary << (first ? "" : ", ") << "l" << len << ":" << v.to_string(), first = false;
    summary << "}";
    std::set<Rational> seen;
    bool distinct = true, zero_only_e = true, oracle_constant = true;
    for (const auto& [len, vals] : oracle) {
      if (vals.size() != 1) oracle_constant = false;
      for (const auto& v : vals) {
        if (!seen.insert(v).second) distinct = false;
        if (v.is_zero() != (len == 0)) zero_only_e = false;
      }
    }
    o.require(r.constant_on_spheres == oracle_constant, std::string(c.spec) + ": library and oracle disagree on constancy");
    for (const auto& cl : r.classes)
      if (cl.constant)
        o.require(oracle.at(cl.length) == std::set<Rational>{cl.coefficient},
                  std::string(c.spec) + ": coefficient at length " + std::to_string(cl.length) + " differs from the oracle");
    o.require(oracle_constant, std::string(c.spec) + " coefficients are not constant on spheres");
    o.require(distinct, std::string(c.spec) + " coefficients collide across lengths");
    o.require(zero_only_e, std::string(c.spec) + " has a zero coefficient off e");
    if (std::string(c.spec) == "s3:transpositions") {
      std::map<int, std::set<Rational>> expected{{0, {Rational(0)}}, {1, {Rational(1)}}, {2, {Rational(8, 3)}}, {3, {Rational(11, 3)}}};
      o.require(oracle == expected, "transposition table is not {0, 1, 8/3, 11/3}");
    }
  }
  o.detail << (o.pass ? "" : " (") << "oracle:" << summary.str() << (o.pass ? "" : ")");
}

void criterion4(Outcome& o) {
  const char* names[] = {"zn:3", "zn:5", "zn:6", "z4_commutative", "z4_pauli", "s3_transpositions",
                         "s3_dihedral", "f2_classical:ba", "f2_classical:Ab", "f2_torus:8:1:3"};
  std::size_t relations = 0;
  for (const char* name : names) {
    Preset p = make_preset(name);
    PresetVerification v = verify_preset(p);
    for (const auto& r : v.relations.relations) {
      ++relations;
      o.require(r.pass && r.residual_norm_sq.is_zero(), std::string(name) + ": " + r.text);
    }
    o.require(v.relations.has_corep && v.relations.corep_unitary, std::string(name) + ": corepresentation not unitary");
    o.require(v.coproduct.ok(), std::string(name) + ": coproduct check fails");
    o.require(v.ok(), std::string(name) + ": verification not ok");
  }
  Preset pauli = make_preset("z4_pauli");
  const Matrix &a = pauli.model.at("A"), &b = pauli.model.at("B");
  o.require(!(a * b == b * a), "z4_pauli: A B = B A");
  o.require((a * b + b * a).is_zero(), "z4_pauli: A B + B A != 0");
  if (o.pass) o.detail << "10 presets, " << relations << " relations exact, coreps unitary, coproducts ok, Pauli A B != B A";
}

void criterion5(Outcome& o) {
  std::size_t rows = 0;
  for (const char* name : kAllPresets) {
    Preset p = make_preset(name);
    ActionTable t = build_action(p.group, evaluate_grid(p.grid, p.model), default_action_radius(p.group));
    ActionReport rep = check_action(t);
    for (const char* check : {"homomorphism", "star", "dhat_commutation", "trace", "corep_unitary"}) {
      const SubCheck& s = rep.get(check);
      o.require(s.applicable && s.pass, std::string(name) + ": " + check + " " + s.counterexample);
    }
    if (p.group.family() == GroupFamily::Free) {
      o.require(t.radius == 3, std::string(name) + ": free action not at radius 3");
      const SubCheck& s = rep.get("cancellation");
      o.require(s.applicable && s.pass && s.checked > 0, std::string(name) + ": cancellation " + s.counterexample);
    } else if (p.group.is_finite()) {
      o.require(t.rows.size() == p.group.elements().size(), std::string(name) + ": action does not cover the group");
    }
    rows += t.rows.size();
    if (std::string(name).rfind("zn:", 0) == 0) {
      const int n = std::stoi(std::string(name).substr(3));
      const Matrix &A = p.model.at("A"), &B = p.model.at("B");
      for (int k = 0; k < n; ++k) {
        std::map<Element, Matrix> expected;
        if (k == 0) {
          expected.emplace(Element({0}), Matrix::identity(A.rows()));
        } else {
          expected.emplace(Element({k}), power(A, k));
          auto [it, fresh] = expected.emplace(Element({n - k}), power(B, k));
          if (!fresh) it->second = it->second + power(B, k);
        }
        o.require(same_row(t.row(Element({k})), expected), std::string(name) + ": row " + std::to_string(k) + " is not lambda_k (x) A^k + lambda_{n-k} (x) B^k");
      }
    }
  }
  if (o.pass) o.detail << "13 presets, " << rows << " action rows, Z_n closed form exact";
}

void criterion6(Outcome& o) {
  for (const char* name : {"f2_classical:ab", "f2_classical:ba", "f2_classical:Ab", "f2_torus:8:1:3"}) {
    Preset p = make_preset(name);
    auto u = evaluate_grid(p.grid, p.model);
    Matrix U = blocks(u);
    Matrix I = Matrix::identity(U.rows());
    o.require(U * U.adjoint() == I && U.adjoint() * U == I, std::string(name) + ": U is not unitary");
    // P row from X X*, Q row from X* X with the columns permuted by inversion.
    std::vector<Matrix> X = {u[0][0], u[0][1], u[0][2], u[0][3], u[2][0], u[2][1], u[2][2], u[2][3]};
    auto P = [&](int i) { return X[i] * X[i].adjoint(); };
    auto Q = [&](int i) { return X[i].adjoint() * X[i]; };
    std::vector<std::vector<Matrix>> grid = {{P(0), P(1), P(2), P(3)},
                                             {P(4), P(5), P(6), P(7)},
                                             {Q(1), Q(0), Q(3), Q(2)},
                                             {Q(5), Q(4), Q(7), Q(6)}};
    auto lib = magic_grid(p.model);
    bool same = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) same = same && lib[i][j] == grid[i][j];
    o.require(same, std::string(name) + ": library P/Q grid differs from the hand assembly");
    MagicUnitaryReport m = is_magic_unitary(grid);
    o.require(m.ok, std::string(name) + ": " + m.first_failure);
    for (std::size_t i = 0; i < 4; ++i) {
      Matrix row = Matrix::zeros(I.rows() / 4, I.rows() / 4), col = row;
      for (std::size_t j = 0; j < 4; ++j) {
        row = row + grid[i][j];
        col = col + grid[j][i];
      }
      o.require(row == Matrix::identity(row.rows()) && col == Matrix::identity(col.rows()),
                std::string(name) + ": a row or column of P/Q does not sum to 1");
    }
  }
  if (o.pass) o.detail << "4 f2 presets: P/Q grids magic, 4-block U unitary";
}

void criterion7(Outcome& o) {
  CoproductDivergence d = coproduct_divergence();
  Preset tr = make_preset("s3_transpositions"), di = make_preset("s3_dihedral");
  const Matrix &A = tr.model.at("A"), &B = tr.model.at("B"), &C = tr.model.at("C"), &D = tr.model.at("D");
  const Matrix& L = di.model.at("L");
  // Delta(u_ij) = sum_k u_ik (x) u_kj on [[A, B], [C, D]]; A + C = u_00 + u_10.
  Matrix delta1 = kronecker(A, A) + kronecker(B, C) + kronecker(C, A) + kronecker(D, C);
  Matrix square1 = kronecker(A + C, A + C);
  Matrix square2 = kronecker(L, L);
  o.require(d.transposition_delta == delta1, "Delta_1(A + C) differs from the hand expansion");
  o.require(d.transposition_square == square1 && d.dihedral_square == square2, "squares differ");
  o.require(d.dihedral_delta == square2, "Delta_2(L) != L (x) L");
  o.require(!(delta1 == square1), "Delta_1(A + C) = (A + C) (x) (A + C)");
  o.require(!d.transposition_grouplike && d.dihedral_grouplike, "library group-like flags are wrong");
  if (o.pass) o.detail << "Delta_2(L) = L (x) L exactly, Delta_1(A + C) != (A + C) (x) (A + C)";
}

void criterion8(Outcome& o, std::ostringstream& notes) {
  Group f2 = Group::free(2);
  std::size_t basis = 0;
  for (const auto& x : f2.ball(6)) {
    ++basis;
    BallVector d = BallVector::delta(f2, 6, x);
    o.require(j_apply(j_apply(d)) == d, "J^2 != I at " + f2.format(x));
    o.require(j_apply(dirac_apply(d)) == dirac_apply(j_apply(d)), "J D != D J at " + f2.format(x));
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    BallVector v(f2, 6);
    for (const auto& x : f2.ball(6))
      if (rng() % 5 == 0) v.add(x, testing::random_cyclotomic(rng, testing::random_order(rng)));
    o.require(j_apply(j_apply(v)) == v && j_apply(dirac_apply(v)) == dirac_apply(j_apply(v)), "J fails on a random vector");
  }

  std::size_t pairs = 0;
  for (const char* spec : {"free:2", "freeabelian:2", "s3:transpositions", "s3:dihedral"}) {
    Group G = Group::from_spec(spec);
    auto elems = G.is_finite() ? G.elements() : G.ball(3);
    for (const auto& g : elems)
      for (const auto& h : elems) {
        ++pairs;
        CommutantReport r = commutant_check(G, g, h, 3);
        o.require(r.zero, std::string(spec) + ": [lambda_g, rho_h] != 0 for " + G.format(g) + ", " + G.format(h));
      }
  }

  // spot-check the closed coefficient against operator composition
  for (const auto& g : f2.ball(2))
    for (const auto& h : f2.ball(2)) {
      BasisOperator T = t_operator(f2, g, h);
      for (const auto& a : f2.ball(3)) {
        auto l = [&](const Element& x) { return static_cast<long>(f2.length(x)); };
        long c = l(f2.multiply(h, a)) - l(a) - l(f2.multiply(f2.multiply(h, a), g)) + l(f2.multiply(a, g));
        auto img = T.apply(a);
        bool ok = c == 0 ? img.empty()
                         : img.size() == 1 && img.begin()->first == f2.multiply(f2.multiply(h, a), g) &&
                               img.begin()->second == Rational(c);
        o.require(ok && t_coefficient(f2, g, h, a) == c, "T coefficient mismatch");
      }
    }
  auto start = std::chrono::steady_clock::now();
  TSweep s = t_sweep(f2, 3, 4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(s.ok(), "free:2 T sweep: " + std::to_string(s.unstable) + " unstable, " + std::to_string(s.out_of_bound) +
                        " out of bound");
  o.require(secs <= 60, "free:2 T sweep took " + std::to_string(secs) + " s");

  TSweep z2 = t_sweep(Group::free_abelian(2), 1, 3);
  notes << "  note: freeabelian:2 T sweep (l <= 1, window 3): " << z2.unstable << " of " << z2.pairs
        << " pairs have support outside ball(l(g)+l(h))\n";

  for (const char* name : {"zn:5", "s3_transpositions", "s3_dihedral"}) {
    RealExtensionReport r = check_real_extension(make_preset(name));
    o.require(r.ok(), std::string(name) + ": real extension " + r.first_failure);
    Matrix q = r.model.at("q");
    o.require(!(q == Matrix::identity(q.rows())) && q * q == Matrix::identity(q.rows()), "q is not a nontrivial symmetry");
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    o.detail << "J on " << basis << " basis vectors, " << pairs << " commutant pairs, " << s.pairs
             << " T certificates in " << buf << " s, 3 real extensions";
  }
}

double series_free2(double t) {
  double s = 1;
  for (int n = 1; n < 100; ++n) s += 4 * std::pow(3.0, n - 1) * std::exp(-t * n * n);
  return s;
}

void criterion9(Outcome& o) {
  HeatTrace c3 = heat_trace(Group::cyclic(3), 1.0, 5);
  o.require(std::abs(c3.value - (1 + 2 * std::exp(-1.0))) < 1e-12, "cyclic:3 trace off");
  for (double t : {0.5, 1.0, 2.0})
    for (int n : {2, 4, 8}) {
      HeatTrace h = heat_trace(Group::free(2), t, n);
      double exact = series_free2(t);
      double slack = 1e-12 * exact;
      o.require(h.value <= exact + slack && exact <= h.value + h.tail_bound + slack,
                "free:2 bracket misses the series at t = " + std::to_string(t) + ", N = " + std::to_string(n));
    }
  if (o.pass) o.detail << "cyclic:3 exact to 1e-12, free:2 brackets hold at t = 0.5, 1, 2";
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(2026);
  std::size_t field = 0, matrix = 0, length = 0, parser = 0;
  for (int i = 0; i < 1000; ++i) {
    int n = testing::random_order(rng);
    auto x = testing::random_cyclotomic(rng, n), y = testing::random_cyclotomic(rng, testing::random_order(rng)),
         w = testing::random_cyclotomic(rng, n);
    bool ok = (x * y) * w == x * (y * w) && x * (y + w) == x * y + x * w && x + y == y + x && x * y == y * x &&
              (x * y).conj() == x.conj() * y.conj() && x.conj().conj() == x && (x - x).is_zero();
    field += ok;
  }
  for (int i = 0; i < 1000; ++i) {
    int order = testing::random_order(rng);
    std::size_t n = 1 + i % 3;
    auto a = testing::random_matrix(rng, n, n, order), b = testing::random_matrix(rng, n, n, order);
    auto c = testing::random_matrix(rng, 2, 2, order), d = testing::random_matrix(rng, 2, 2, order);
    bool ok = (a * b).adjoint() == b.adjoint() * a.adjoint() && a.adjoint().adjoint() == a &&
              kronecker(a, c) * kronecker(b, d) == kronecker(a * b, c * d) &&
              kronecker(a, c).adjoint() == kronecker(a.adjoint(), c.adjoint());
    matrix += ok;
  }
  const char* specs[] = {"cyclic:6", "cyclic:7", "free:2", "freeabelian:2", "s3:transpositions", "s3:dihedral"};
  for (int i = 0; i < 1000; ++i) {
    Group g = Group::from_spec(specs[i % 6]);
    Element a = testing::random_element(rng, g, 8), b = testing::random_element(rng, g, 8);
    bool ok = g.length(g.multiply(a, b)) <= g.length(a) + g.length(b) && g.length(g.inverse(a)) == g.length(a) &&
              (g.length(a) == 0) == g.is_identity(a);
    length += ok;
  }
  for (int i = 0; i < 1000; ++i) {
    StarPolynomial p = testing::random_polynomial(rng);
    parser += parse_polynomial(p.to_string()) == p;
  }
  o.require(field == 1000, "field axioms: " + std::to_string(1000 - field) + " failures");
  o.require(matrix == 1000, "adjoint/kronecker: " + std::to_string(1000 - matrix) + " failures");
  o.require(length == 1000, "length axioms: " + std::to_string(1000 - length) + " failures");
  o.require(parser == 1000, "parser round trip: " + std::to_string(1000 - parser) + " failures");
  if (o.pass) o.detail << "4 suites x 1000 random cases, 0 failures";
}

}  // namespace

int main() {
  std::ostringstream notes;
  std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, [&](Outcome& o) { criterion8(o, notes); }},
      {9, criterion9}, {10, criterion10}};
  int unexpected = 0;
  for (auto& [id, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const bool known = kKnownFailures.count(id) > 0;
    const char* tag = o.pass ? (known ? "PASS (listed as a known failure)" : "PASS") : (known ? "FAIL (known)" : "FAIL");
    std::printf("criterion %2d: %s: %s\n", id, tag, o.detail.str().c_str());
    if (o.pass == known) ++unexpected;
  }
  std::printf("%s", notes.str().c_str());
  std::printf("%s\n", unexpected ? "acceptance: unexpected result" : "acceptance: only known failures");
  return unexpected ? 1 : 0;
}
