#include "qiso/relation_engine.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qiso {

// ---------------------------------------------------------------------------
// StarPolynomial

StarPolynomial StarPolynomial::constant(const Cyclotomic& c) {
  StarPolynomial p;
  p.add_term({}, c);
  return p;
}

StarPolynomial StarPolynomial::atom(std::string label, bool adjoint) {
  StarPolynomial p;
  p.add_term({Atom{std::move(label), adjoint}}, Cyclotomic(1));
  return p;
}

void StarPolynomial::add_term(const Word& w, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool StarPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic StarPolynomial::constant_term() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::optional<std::string> StarPolynomial::plain_atom() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [w, c] = *terms_.begin();
  if (w.size() != 1 || w[0].adjoint || !c.is_one()) return std::nullopt;
  return w[0].label;
}

std::set<std::string> StarPolynomial::labels() const {
  std::set<std::string> out;
  for (const auto& [w, c] : terms_)
    for (const auto& a : w) out.insert(a.label);
  return out;
}

StarPolynomial& StarPolynomial::operator+=(const StarPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

StarPolynomial& StarPolynomial::operator-=(const StarPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
  StarPolynomial r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

StarPolynomial operator*(const Cyclotomic& c, const StarPolynomial& p) {
  StarPolynomial r;
  for (const auto& [w, pc] : p.terms_) r.add_term(w, c * pc);
  return r;
}

StarPolynomial StarPolynomial::operator-() const { return Cyclotomic(-1) * *this; }

StarPolynomial StarPolynomial::adjoint() const {
  StarPolynomial r;
  for (const auto& [w, c] : terms_) {
    Word rw(w.rbegin(), w.rend());
    for (auto& a : rw) a.adjoint = !a.adjoint;
    r.add_term(rw, c.conj());
  }
  return r;
}

StarPolynomial StarPolynomial::power(unsigned k) const {
  StarPolynomial r = constant(Cyclotomic(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const StarPolynomial& a, const StarPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (w != ib->first || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

namespace {

bool multi_term(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
}

std::string word_text(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += ' ';
    out += w[i].label;
    if (w[i].adjoint) out += '*';
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

std::string StarPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string coeff = c.to_string();
    std::string term;
    if (w.empty()) {
      term = multi_term(coeff) ? "(" + coeff + ")" : coeff;
    } else {
      if (c.is_one())
        coeff.clear();
      else if (c == Cyclotomic(-1))
        coeff = "-";
      else if (multi_term(coeff))
        coeff = "(" + coeff + ")";
      term = coeff;
      if (!coeff.empty() && coeff != "-") term += ' ';
      term += word_text(w);
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(term[1] == ' ' ? 2 : 1);
    else
      out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset)
      : s_(text), line_(line), col0_(column_offset) {}

  StarPolynomial parse_all() {
    skip_ws();
    if (at_end()) fail("empty expression");
    StarPolynomial p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  enum class Kind { Scalar, Ident, Group };

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + static_cast<int>(pos_) + 1);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  bool root_ahead() const { return peek() == 'z' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '('; }
  bool factor_ahead() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || ident_start(c) || c == '(';
  }

  StarPolynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    StarPolynomial p = term();
    if (negate) p = -p;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      bool minus = peek() == '-';
      ++pos_;
      StarPolynomial t = term();
      if (minus)
        p -= t;
      else
        p += t;
    }
    return p;
  }

  StarPolynomial term() {
    StarPolynomial p = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!factor_ahead()) fail("expected a factor after '*'");
        p = p * factor();
      } else if (factor_ahead()) {
        p = p * factor();
      } else {
        break;
      }
    }
    return p;
  }

  StarPolynomial factor() {
    skip_ws();
    Kind kind;
    StarPolynomial p = primary(kind);
    if (kind != Kind::Scalar && peek() == '*') {
      ++pos_;
      p = p.adjoint();
    }
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned k = 0;
      auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, k);
      if (ec != std::errc() || k > 64) {
        pos_ = start;
        fail("exponent out of range");
      }
      (void)ptr;
      p = p.power(k);
    } else {
      pos_ = save;
    }
    return p;
  }

  std::string digits(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  StarPolynomial primary(Kind& kind) {
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      kind = Kind::Scalar;
      std::string num = digits(false);
      if (peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        std::string den = digits(false);
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = at;
          fail("zero denominator");
        }
        num += "/" + den;
      }
      return StarPolynomial::constant(Cyclotomic(Rational::parse(num)));
    }
    if (root_ahead()) {
      kind = Kind::Scalar;
      pos_ += 2;
      skip_ws();
      std::size_t at = pos_;
      long n = std::stol(digits(false));
      if (n < 1 || n > kMaxCyclotomicOrder) {
        pos_ = at;
        fail("unsupported root of unity order " + std::to_string(n));
      }
      skip_ws();
      if (peek() != ',') fail("expected ',' in z(N,k)");
      ++pos_;
      skip_ws();
      std::string k = digits(true);
      skip_ws();
      if (peek() != ')') fail("expected ')' closing z(N,k)");
      ++pos_;
      long kv = 0;
      try {
        kv = std::stol(k);
      } catch (const std::out_of_range&) {
        fail("root of unity exponent out of range");
      }
      return StarPolynomial::constant(Cyclotomic::root_of_unity(static_cast<int>(n), kv));
    }
    if (ident_start(c)) {
      kind = Kind::Ident;
      std::size_t start = pos_;
      while (ident_char(peek())) ++pos_;
      return StarPolynomial::atom(std::string(s_.substr(start, pos_ - start)));
    }
    if (c == '(') {
      kind = Kind::Group;
      ++pos_;
      StarPolynomial p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

StarPolynomial parse_at(std::string_view text, int line, int column_offset) {
  return Parser(text, line, column_offset).parse_all();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

StarPolynomial parse_polynomial(std::string_view text, int line) { return parse_at(text, line, 0); }

Cyclotomic parse_scalar(std::string_view text) {
  StarPolynomial p = parse_polynomial(text);
  if (!p.is_constant())
    throw std::invalid_argument("scalar literal '" + std::string(text) + "' mentions a generator");
  return p.constant_term();
}

// ---------------------------------------------------------------------------
// Evaluation

const Matrix& MatrixModel::at(const std::string& label) const {
  auto it = assign.find(label);
  if (it == assign.end()) throw std::invalid_argument("label '" + label + "' is not assigned in model " + name);
  return it->second;
}

Matrix evaluate(const StarPolynomial& p, const MatrixModel& model) {
  std::size_t dim = model.dim;
  std::map<Atom, Matrix> cache;
  auto lookup = [&](const Atom& a) -> const Matrix& {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const Matrix& m = model.at(a.label);
    if (!m.square()) throw std::invalid_argument("assignment of '" + a.label + "' is not square");
    if (dim == 0) dim = m.rows();
    if (m.rows() != dim)
      throw std::invalid_argument("assignment of '" + a.label + "' has dimension " + std::to_string(m.rows()) +
                                  ", expected " + std::to_string(dim));
    return cache.emplace(a, a.adjoint ? m.adjoint() : m).first->second;
  };
  for (const auto& [w, c] : p.terms())
    for (const auto& a : w) lookup(a);
  if (dim == 0) throw std::invalid_argument("model dimension is unknown");
  Matrix total(dim, dim, model.root_order);
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      total += Matrix::scalar(c, dim);
      continue;
    }
    Matrix prod = cache.at(w[0]);
    for (std::size_t i = 1; i < w.size() && !prod.is_zero(); ++i) prod = prod * cache.at(w[i]);
    if (!prod.is_zero()) total += c * prod;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Presentations

void Presentation::add_relation(std::string_view text, int line) {
  std::string t = trim(text);
  auto eq = t.find('=');
  Relation r;
  r.text = t;
  r.line = line;
  if (eq == std::string::npos) {
    r.poly = parse_polynomial(t, line);
  } else {
    if (t.find('=', eq + 1) != std::string::npos) throw ParseError("more than one '='", line, int(eq) + 1);
    StarPolynomial lhs = parse_at(std::string_view(t).substr(0, eq), line, 0);
    StarPolynomial rhs = parse_at(std::string_view(t).substr(eq + 1), line, int(eq) + 1);
    r.poly = lhs - rhs;
  }
  relations.push_back(std::move(r));
}

void Presentation::validate() const {
  if (generators.empty()) throw std::invalid_argument("presentation declares no generators");
  std::set<std::string> declared;
  for (const auto& g : generators)
    if (!declared.insert(g).second) throw std::invalid_argument("generator '" + g + "' declared twice");
  auto require = [&](const StarPolynomial& p, const std::string& where) {
    for (const auto& l : p.labels())
      if (!declared.count(l)) throw std::invalid_argument("undeclared generator '" + l + "' in " + where);
  };
  for (const auto& r : relations) require(r.poly, "relation '" + r.text + "'");
  for (std::size_t i = 0; i < corep.size(); ++i) {
    if (corep[i].size() != corep.size())
      throw std::invalid_argument("corep grid must be square: row " + std::to_string(i) + " has " +
                                  std::to_string(corep[i].size()) + " entries, expected " +
                                  std::to_string(corep.size()));
    for (const auto& e : corep[i]) require(e, "corep row " + std::to_string(i));
  }
}

Presentation parse_presentation(std::string_view text) {
  Presentation pres;
  enum class Section { None, Corep, Relations } section = Section::None;
  bool saw_generators = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty()) continue;
    std::size_t indent = line.find_first_not_of(" \t");
    auto colon = line.find(':');
    std::string key = colon == std::string::npos ? "" : trim(std::string_view(line).substr(0, colon));
    std::string rest = colon == std::string::npos ? "" : trim(std::string_view(line).substr(colon + 1));
    if (key == "name") {
      pres.name = rest;
      section = Section::None;
    } else if (key == "generators") {
      std::string names = rest;
      std::replace(names.begin(), names.end(), ',', ' ');
      std::istringstream ns(names);
      for (std::string g; ns >> g;) {
        if (!std::isalpha(static_cast<unsigned char>(g[0])) && g[0] != '_')
          throw ParseError("invalid generator name '" + g + "'", line_no, int(colon) + 2);
        pres.generators.push_back(g);
      }
      saw_generators = true;
      section = Section::None;
    } else if (key == "corep") {
      if (!rest.empty()) throw ParseError("corep rows go on the following lines", line_no, int(colon) + 2);
      section = Section::Corep;
    } else if (key == "relations") {
      if (!rest.empty()) throw ParseError("relations go on the following lines", line_no, int(colon) + 2);
      section = Section::Relations;
    } else if (section == Section::Corep) {
      std::vector<StarPolynomial> row;
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = line.find(',', start);
        std::string_view cell = std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                                 : comma - start);
        row.push_back(parse_at(cell, line_no, int(start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      pres.corep.push_back(std::move(row));
    } else if (section == Section::Relations) {
      std::string t = trim(line);
      try {
        pres.add_relation(t, line_no);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_no, e.column() + int(indent));
      }
    } else {
      throw ParseError("expected a section header (name:, generators:, corep:, relations:)", line_no,
                       int(indent) + 1);
    }
  }
  if (!saw_generators) throw ParseError("missing 'generators:' line", line_no, 1);
  pres.validate();
  return pres;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }

MatrixModel parse_model_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("model is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("model lacks \"") + key + "\"");
    return j.at(key);
  };
  MatrixModel m;
  const auto& order = need("root_order");
  const auto& dim = need("dim");
  if (!order.is_number_integer() || order.get<long>() < 1 || order.get<long>() > kMaxCyclotomicOrder)
    throw std::invalid_argument("root_order must be an integer in [1, " + std::to_string(kMaxCyclotomicOrder) + "]");
  if (!dim.is_number_integer() || dim.get<long>() < 1) throw std::invalid_argument("dim must be a positive integer");
  m.root_order = order.get<int>();
  m.dim = dim.get<std::size_t>();
  if (j.contains("name") && j.at("name").is_string()) m.name = j.at("name").get<std::string>();
  const auto& assign = need("assign");
  if (!assign.is_object()) throw std::invalid_argument("\"assign\" must be an object");
  for (const auto& [label, rows] : assign.items()) {
    auto where = [&](std::size_t r, std::size_t c) {
      return "assign." + label + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
    };
    if (!rows.is_array() || rows.size() != m.dim)
      throw std::invalid_argument("assign." + label + " must have " + std::to_string(m.dim) + " rows");
    Matrix mat(m.dim, m.dim, m.root_order);
    for (std::size_t r = 0; r < m.dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != m.dim)
        throw std::invalid_argument("assign." + label + "[" + std::to_string(r) + "] must have " +
                                    std::to_string(m.dim) + " entries");
      for (std::size_t c = 0; c < m.dim; ++c) {
        const auto& e = rows[r][c];
        Cyclotomic v;
        if (e.is_number_integer()) {
          v = Cyclotomic(e.get<long>());
        } else if (e.is_string()) {
          try {
            v = parse_scalar(e.get<std::string>());
          } catch (const std::exception& ex) {
            throw std::invalid_argument(where(r, c) + ": " + ex.what());
          }
        } else {
          throw std::invalid_argument(where(r, c) + " must be a string or an integer");
        }
        if (m.root_order % v.order() != 0)
          throw std::invalid_argument(where(r, c) + " needs root order " + std::to_string(v.order()) +
                                      ", model declares " + std::to_string(m.root_order));
        mat.set(r, c, v);
      }
    }
    m.assign.emplace(label, std::move(mat));
  }
  return m;
}

MatrixModel load_model(const std::string& path) {
  MatrixModel m = parse_model_json(read_file(path));
  if (m.name.empty()) m.name = path;
  return m;
}

// ---------------------------------------------------------------------------
// Checks

bool CheckReport::ok() const { return failures() == 0 && (!has_corep || corep_unitary); }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(),
                                                [](const RelationResult& r) { return !r.pass; }));
}

namespace {

std::vector<std::vector<Matrix>> evaluate_grid(const Presentation& pres, const MatrixModel& model) {
  std::vector<std::vector<Matrix>> grid;
  for (const auto& row : pres.corep) {
    grid.emplace_back();
    for (const auto& e : row) grid.back().push_back(evaluate(e, model));
  }
  return grid;
}

Matrix delta_entry(const std::vector<std::vector<Matrix>>& g, std::size_t i, std::size_t j) {
  const std::size_t d = g[0][0].rows();
  Matrix sum(d * d, d * d, g[0][0].order());
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!g[i][k].is_zero() && !g[k][j].is_zero()) sum += kronecker(g[i][k], g[k][j]);
  return sum;
}

}  // namespace

CheckReport check(const Presentation& pres, const MatrixModel& model) {
  pres.validate();
  CheckReport rep;
  for (const auto& r : pres.relations) {
    Matrix residual = evaluate(r.poly, model);
    RelationResult res;
    res.text = r.text;
    res.pass = residual.is_zero();
    res.residual_norm_sq = residual.frobenius_norm_sq();
    rep.relations.push_back(std::move(res));
  }
  if (pres.has_corep()) {
    rep.has_corep = true;
    Matrix u = block_matrix(evaluate_grid(pres, model));
    Matrix id = Matrix::identity(u.rows(), u.order());
    Matrix ua = u.adjoint();
    bool left = ua * u == id, right = u * ua == id;
    rep.corep_unitary = left && right;
    if (!left) rep.corep_detail = "U* U is not the identity";
    else if (!right) rep.corep_detail = "U U* is not the identity";
  }
  return rep;
}

Matrix coproduct_entry(const Presentation& pres, const MatrixModel& model, std::size_t i, std::size_t j) {
  if (!pres.has_corep()) throw std::invalid_argument("presentation has no corep grid");
  return delta_entry(evaluate_grid(pres, model), i, j);
}

namespace {

struct DeltaBuild {
  MatrixModel model;
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::string> problems;
  std::vector<std::vector<Matrix>> base_grid;
};

DeltaBuild build_delta(const Presentation& pres, const MatrixModel& model) {
  if (!pres.has_corep()) throw std::invalid_argument("coproduct check needs a corep grid");
  pres.validate();
  DeltaBuild b;
  b.base_grid = evaluate_grid(pres, model);
  const std::size_t d = b.base_grid[0][0].rows();
  b.model.name = "delta(" + model.name + ")";
  b.model.root_order = model.root_order;
  b.model.dim = d * d;
  for (std::size_t i = 0; i < pres.corep.size(); ++i)
    for (std::size_t j = 0; j < pres.corep.size(); ++j) {
      auto label = pres.corep[i][j].plain_atom();
      if (!label) continue;
      Matrix img = delta_entry(b.base_grid, i, j);
      auto it = b.model.assign.find(*label);
      if (it == b.model.assign.end()) {
        b.model.assign.emplace(*label, std::move(img));
        b.positions[*label] = {i, j};
      } else if (!(it->second == img)) {
        b.problems.push_back("generator " + *label + " sits at several grid positions with different coproducts");
      }
    }
  for (const auto& g : pres.generators)
    if (!b.model.assign.count(g)) b.problems.push_back("generator " + g + " has no plain grid position");
  return b;
}

}  // namespace

MatrixModel coproduct_model(const Presentation& pres, const MatrixModel& model) {
  DeltaBuild b = build_delta(pres, model);
  if (!b.problems.empty()) throw std::invalid_argument(b.problems.front());
  return b.model;
}

bool CoproductReport::ok() const {
  if (!problems.empty() || !relations.ok()) return false;
  return std::all_of(grid.begin(), grid.end(), [](const GridEntryResult& g) { return g.pass; });
}

CoproductReport coproduct_check(const Presentation& pres, const MatrixModel& model) {
  DeltaBuild b = build_delta(pres, model);
  CoproductReport rep;
  rep.positions = b.positions;
  rep.problems = b.problems;
  if (!rep.problems.empty()) return rep;
  Presentation plain = pres;
  plain.corep.clear();
  rep.relations = check(plain, b.model);
  for (std::size_t i = 0; i < pres.corep.size(); ++i)
    for (std::size_t j = 0; j < pres.corep.size(); ++j) {
      Matrix expected = delta_entry(b.base_grid, i, j);
      bool pass = evaluate(pres.corep[i][j], b.model) == expected;
      rep.grid.push_back({i, j, pass});
    }
  return rep;
}

}  // namespace qiso
