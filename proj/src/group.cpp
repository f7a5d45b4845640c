#include "qiso/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace qiso {
namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

std::string letter_label(int index, bool inverse) {
  char c = static_cast<char>('a' + index);
  if (inverse) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return std::string(1, c);
}

using Perm = std::array<int, 3>;

// (g o h)(x) = g(h(x))
Perm compose(const Perm& g, const Perm& h) { return {g[h[0]], g[h[1]], g[h[2]]}; }

std::string cycle_name(const Perm& p) {
  std::string out;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Group s3_with(std::string name, const std::vector<Perm>& gens, std::vector<std::string> labels) {
  std::vector<Perm> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(cycle_name(p));
  auto index = [&](const Perm& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) table[i][j] = index(compose(perms[i], perms[j]));
  std::vector<int> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index(g));
  return Group::finite_table(std::move(name), std::move(names), std::move(table), std::move(gen_idx),
                             std::move(labels));
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : e.code()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 1099511628211ULL;
  }
  return h;
}

int default_ball_cap() {
  if (const char* env = std::getenv("QISO_BALL_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

Group Group::cyclic(int n) {
  if (n < 2) throw std::invalid_argument("cyclic group needs n >= 2");
  if (n == 2) return cyclic(2, {1});
  Group g = cyclic(n, {1, n - 1});
  g.d_->name = "cyclic:" + std::to_string(n);
  g.d_->standard = true;
  return g;
}

Group Group::cyclic(int n, std::vector<int> generators) {
  if (n < 2) throw std::invalid_argument("cyclic group needs n >= 2");
  auto d = std::make_shared<Data>();
  d->family = GroupFamily::Cyclic;
  d->rank = n;
  d->name = "cyclic:" + std::to_string(n);
  std::sort(generators.begin(), generators.end());
  for (int k : generators) {
    if (k <= 0 || k >= n) throw std::invalid_argument("cyclic generators must be nonzero residues");
    if (!std::binary_search(generators.begin(), generators.end(), n - k))
      throw std::invalid_argument("cyclic generating set is not symmetric");
    d->generators.emplace_back(std::vector<std::int32_t>{k});
    d->labels.push_back(std::to_string(k));
  }
  if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
    throw std::invalid_argument("duplicate cyclic generator");
  d->standard = (n == 2 && generators == std::vector<int>{1}) || generators == std::vector<int>{1, n - 1};
  Group g(d);
  g.finish_setup();
  return g;
}

Group Group::free(int rank) {
  if (rank < 1 || rank > 26) throw std::invalid_argument("free group rank must be in 1..26");
  auto d = std::make_shared<Data>();
  d->family = GroupFamily::Free;
  d->rank = rank;
  d->name = "free:" + std::to_string(rank);
  for (int i = 0; i < rank; ++i) {
    d->generators.emplace_back(std::vector<std::int32_t>{i + 1});
    d->labels.push_back(letter_label(i, false));
    d->generators.emplace_back(std::vector<std::int32_t>{-(i + 1)});
    d->labels.push_back(letter_label(i, true));
  }
  Group g(d);
  g.finish_setup();
  return g;
}

Group Group::free_abelian(int rank) {
  if (rank < 1 || rank > 26) throw std::invalid_argument("free abelian rank must be in 1..26");
  auto d = std::make_shared<Data>();
  d->family = GroupFamily::FreeAbelian;
  d->rank = rank;
  d->name = "freeabelian:" + std::to_string(rank);
  for (int i = 0; i < rank; ++i) {
    std::vector<std::int32_t> plus(rank, 0), minus(rank, 0);
    plus[i] = 1;
    minus[i] = -1;
    d->generators.emplace_back(plus);
    d->labels.push_back(letter_label(i, false));
    d->generators.emplace_back(minus);
    d->labels.push_back(letter_label(i, true));
  }
  Group g(d);
  g.finish_setup();
  return g;
}

Group Group::finite_table(std::string name, std::vector<std::string> element_names,
                          std::vector<std::vector<int>> table, std::vector<int> generators,
                          std::vector<std::string> generator_labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("multiplication table is not associative");
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw std::invalid_argument("multiplication table has no identity");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) inv[i] = j;
  if (std::count(inv.begin(), inv.end(), -1) > 0) throw std::invalid_argument("multiplication table lacks inverses");
  if (generator_labels.size() != generators.size())
    throw std::invalid_argument("one label per generator required");

  auto d = std::make_shared<Data>();
  d->family = GroupFamily::FiniteTable;
  d->rank = n;
  d->name = std::move(name);
  d->table = std::move(table);
  d->inverse = std::move(inv);
  if (element_names.size() != static_cast<std::size_t>(n)) element_names.clear();
  d->element_names = std::move(element_names);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    int gi = generators[i];
    if (gi < 0 || gi >= n) throw std::invalid_argument("generator index out of range");
    if (gi == e) throw std::invalid_argument("generating set must exclude the identity");
    d->generators.emplace_back(std::vector<std::int32_t>{gi});
    d->labels.push_back(generator_labels[i]);
  }
  d->bfs_order = {e};  // temporary marker for the identity
  Group g(d);
  g.finish_setup();
  return g;
}

Group Group::s3_transpositions() {
  return s3_with("s3:transpositions", {{1, 0, 2}, {0, 2, 1}}, {"s", "t"});
}

Group Group::s3_dihedral() {
  return s3_with("s3:dihedral", {{1, 0, 2}, {1, 2, 0}, {2, 0, 1}}, {"s", "t", "T"});
}

Group Group::from_spec(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view family = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  if (family == "cyclic") {
    if (rest == "4:large") {
      Group g = cyclic(4, {1, 2, 3});
      g.d_->name = "cyclic:4:large";
      return g;
    }
    return cyclic(parse_int(rest, "cyclic order"));
  }
  if (family == "free") return free(parse_int(rest, "free rank"));
  if (family == "freeabelian") return free_abelian(parse_int(rest, "free abelian rank"));
  if (family == "s3") {
    if (rest == "transpositions") return s3_transpositions();
    if (rest == "dihedral") return s3_dihedral();
  }
  throw std::invalid_argument("unknown group spec '" + std::string(spec) +
                              "' (expected cyclic:n, cyclic:4:large, free:r, freeabelian:r, "
                              "s3:transpositions or s3:dihedral)");
}

void Group::finish_setup() {
  d_->cap = default_ball_cap();
  const std::size_t k = d_->generators.size();
  if (k == 0) throw std::invalid_argument("generating set must be nonempty");
  d_->generator_inverse.assign(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Element inv = inverse(d_->generators[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (d_->generators[j] == inv) d_->generator_inverse[i] = j;
    if (d_->generator_inverse[i] == k) throw std::invalid_argument("generating set is not symmetric");
    if (d_->generators[i] == identity()) throw std::invalid_argument("generating set must exclude the identity");
    for (std::size_t j = 0; j < i; ++j)
      if (d_->generators[j] == d_->generators[i]) throw std::invalid_argument("duplicate generator");
  }
  if (is_finite()) build_finite_distances();
}

void Group::build_finite_distances() {
  const int n = d_->rank;
  const int e = finite_index(identity());
  d_->distance.assign(n, -1);
  d_->parent.assign(n, {-1, 0});
  d_->bfs_order.clear();
  d_->distance[e] = 0;
  d_->bfs_order.push_back(e);
  for (std::size_t head = 0; head < d_->bfs_order.size(); ++head) {
    int cur = d_->bfs_order[head];
    Element ce = finite_element(cur);
    for (std::size_t gi = 0; gi < d_->generators.size(); ++gi) {
      int nxt = finite_index(multiply(ce, d_->generators[gi]));
      if (d_->distance[nxt] >= 0) continue;
      d_->distance[nxt] = d_->distance[cur] + 1;
      d_->parent[nxt] = {cur, gi};
      d_->bfs_order.push_back(nxt);
    }
  }
  if (static_cast<int>(d_->bfs_order.size()) != n)
    throw std::invalid_argument("generating set does not generate " + d_->name);
  d_->diameter = d_->distance[d_->bfs_order.back()];
}

std::size_t Group::order() const {
  if (!is_finite()) throw std::logic_error(d_->name + " is infinite");
  return static_cast<std::size_t>(d_->rank);
}

int Group::diameter() const {
  if (!is_finite()) throw std::logic_error(d_->name + " is infinite");
  return d_->diameter;
}

Group Group::with_ball_cap(int cap) const {
  auto d = std::make_shared<Data>();
  d->name = d_->name;
  d->family = d_->family;
  d->rank = d_->rank;
  d->standard = d_->standard;
  d->generators = d_->generators;
  d->labels = d_->labels;
  d->generator_inverse = d_->generator_inverse;
  d->table = d_->table;
  d->inverse = d_->inverse;
  d->element_names = d_->element_names;
  d->distance = d_->distance;
  d->bfs_order = d_->bfs_order;
  d->parent = d_->parent;
  d->diameter = d_->diameter;
  d->cap = cap;
  return Group(d);
}

int Group::finite_index(const Element& g) const { return g.code().at(0); }

Element Group::finite_element(int index) const { return Element(std::vector<std::int32_t>{index}); }

Element Group::identity() const {
  switch (d_->family) {
    case GroupFamily::Cyclic:
      return Element(std::vector<std::int32_t>{0});
    case GroupFamily::Free:
      return Element();
    case GroupFamily::FreeAbelian:
      return Element(std::vector<std::int32_t>(d_->rank, 0));
    case GroupFamily::FiniteTable:
      // before distances are built, finite_table() stores the identity in bfs_order[0]
      return finite_element(d_->bfs_order.front());
  }
  return Element();
}

void Group::check(const Element& g) const {
  const auto& c = g.code();
  bool ok = true;
  switch (d_->family) {
    case GroupFamily::Cyclic:
    case GroupFamily::FiniteTable:
      ok = c.size() == 1 && c[0] >= 0 && c[0] < d_->rank;
      break;
    case GroupFamily::Free:
      for (std::size_t i = 0; i < c.size() && ok; ++i) {
        ok = c[i] != 0 && std::abs(c[i]) <= d_->rank;
        if (i > 0) ok = ok && c[i] != -c[i - 1];
      }
      break;
    case GroupFamily::FreeAbelian:
      ok = static_cast<int>(c.size()) == d_->rank;
      break;
  }
  if (!ok) throw std::invalid_argument("element is not a normal form of " + d_->name);
}

Element Group::multiply(const Element& g, const Element& h) const {
  check(g);
  check(h);
  switch (d_->family) {
    case GroupFamily::Cyclic:
      return Element(std::vector<std::int32_t>{(g.code()[0] + h.code()[0]) % d_->rank});
    case GroupFamily::FiniteTable:
      return finite_element(d_->table[g.code()[0]][h.code()[0]]);
    case GroupFamily::FreeAbelian: {
      std::vector<std::int32_t> c = g.code();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += h.code()[i];
      return Element(std::move(c));
    }
    case GroupFamily::Free: {
      std::vector<std::int32_t> c = g.code();
      for (auto x : h.code()) {
        if (!c.empty() && c.back() == -x)
          c.pop_back();
        else
          c.push_back(x);
      }
      return Element(std::move(c));
    }
  }
  return Element();
}

Element Group::inverse(const Element& g) const {
  check(g);
  switch (d_->family) {
    case GroupFamily::Cyclic:
      return Element(std::vector<std::int32_t>{(d_->rank - g.code()[0]) % d_->rank});
    case GroupFamily::FiniteTable:
      return finite_element(d_->inverse[g.code()[0]]);
    case GroupFamily::FreeAbelian: {
      std::vector<std::int32_t> c = g.code();
      for (auto& v : c) v = -v;
      return Element(std::move(c));
    }
    case GroupFamily::Free: {
      std::vector<std::int32_t> c(g.code().rbegin(), g.code().rend());
      for (auto& v : c) v = -v;
      return Element(std::move(c));
    }
  }
  return Element();
}

int Group::length(const Element& g) const {
  check(g);
  switch (d_->family) {
    case GroupFamily::Free:
      return static_cast<int>(g.code().size());
    case GroupFamily::FreeAbelian: {
      int total = 0;
      for (auto v : g.code()) total += std::abs(v);
      return total;
    }
    case GroupFamily::Cyclic:
      if (d_->standard) {
        int k = g.code()[0];
        return std::min(k, d_->rank - k);
      }
      return d_->distance[g.code()[0]];
    case GroupFamily::FiniteTable:
      return d_->distance[g.code()[0]];
  }
  return 0;
}

int Group::length_of_product(std::initializer_list<const Element*> factors) const {
  switch (d_->family) {
    case GroupFamily::Free: {
      std::array<std::int32_t, 128> stack{};
      std::size_t top = 0;
      std::size_t total = 0;
      for (const Element* f : factors) total += f->code().size();
      if (total > stack.size()) break;
      for (const Element* f : factors)
        for (auto x : f->code()) {
          if (top > 0 && stack[top - 1] == -x)
            --top;
          else
            stack[top++] = x;
        }
      return static_cast<int>(top);
    }
    case GroupFamily::FreeAbelian: {
      int total = 0;
      for (int i = 0; i < d_->rank; ++i) {
        int s = 0;
        for (const Element* f : factors) s += f->code()[i];
        total += std::abs(s);
      }
      return total;
    }
    case GroupFamily::Cyclic: {
      long s = 0;
      for (const Element* f : factors) s += f->code()[0];
      return length(Element(std::vector<std::int32_t>{static_cast<std::int32_t>(s % d_->rank)}));
    }
    case GroupFamily::FiniteTable: {
      int cur = finite_index(identity());
      for (const Element* f : factors) cur = d_->table[cur][f->code()[0]];
      return d_->distance[cur];
    }
  }
  Element acc = identity();
  for (const Element* f : factors) acc = multiply(acc, *f);
  return length(acc);
}

void Group::fill_spheres(int n) const {
  // caller holds cache_mutex
  auto& spheres = d_->spheres;
  if (spheres.empty()) spheres.push_back({identity()});
  while (static_cast<int>(spheres.size()) <= n) {
    const auto& prev = spheres.back();
    std::vector<Element> next;
    const int radius = static_cast<int>(spheres.size());
    if (d_->family == GroupFamily::Free) {
      for (const auto& w : prev)
        for (const auto& gen : d_->generators) {
          std::int32_t x = gen.code()[0];
          if (!w.code().empty() && w.code().back() == -x) continue;
          std::vector<std::int32_t> c = w.code();
          c.push_back(x);
          next.emplace_back(std::move(c));
        }
    } else if (is_finite()) {
      for (int idx : d_->bfs_order)
        if (d_->distance[idx] == radius) next.push_back(finite_element(idx));
    } else {
      std::unordered_set<Element, ElementHash> seen;
      if (spheres.size() >= 2)
        for (const auto& x : spheres[spheres.size() - 2]) seen.insert(x);
      for (const auto& x : prev) seen.insert(x);
      for (const auto& w : prev)
        for (const auto& gen : d_->generators) {
          Element c = multiply(w, gen);
          if (seen.insert(c).second) next.push_back(std::move(c));
        }
    }
    spheres.push_back(std::move(next));
  }
}

const std::vector<Element>& Group::sphere(int n) const {
  if (n < 0) throw std::out_of_range("negative sphere radius");
  if (!is_finite() && n > d_->cap)
    throw std::out_of_range("radius " + std::to_string(n) + " exceeds the ball cap " + std::to_string(d_->cap) +
                            " for " + d_->name + " (set QISO_BALL_CAP to raise it)");
  if (is_finite() && n > d_->diameter) {
    static const std::vector<Element> empty;
    return empty;
  }
  std::lock_guard lock(d_->cache_mutex);
  fill_spheres(n);
  return d_->spheres[n];
}

std::vector<Element> Group::ball(int n) const {
  std::vector<Element> out;
  int top = is_finite() ? std::min(n, d_->diameter) : n;
  for (int k = 0; k <= top; ++k) {
    const auto& s = sphere(k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::vector<Element> Group::elements() const {
  if (!is_finite()) throw std::logic_error(d_->name + " is infinite");
  return ball(d_->diameter);
}

FormalWord Group::geodesic_word(const Element& g) const {
  check(g);
  FormalWord w;
  switch (d_->family) {
    case GroupFamily::Free:
      for (auto x : g.code()) w.letters.push_back(x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1);
      break;
    case GroupFamily::FreeAbelian:
      for (int i = 0; i < d_->rank; ++i) {
        int v = g.code()[i];
        std::size_t gi = v > 0 ? 2 * i : 2 * i + 1;
        for (int k = 0; k < std::abs(v); ++k) w.letters.push_back(gi);
      }
      break;
    case GroupFamily::Cyclic:
    case GroupFamily::FiniteTable: {
      int cur = g.code()[0];
      while (d_->parent[cur].first >= 0) {
        w.letters.push_back(d_->parent[cur].second);
        cur = d_->parent[cur].first;
      }
      std::reverse(w.letters.begin(), w.letters.end());
      break;
    }
  }
  return w;
}

Element Group::reduce(const FormalWord& w) const {
  Element acc = identity();
  for (auto gi : w.letters) acc = multiply(acc, generator(gi));
  return acc;
}

void Group::for_each_formal_word(int n, const std::function<void(const FormalWord&)>& visit) const {
  if (n < 0) throw std::out_of_range("negative word length");
  if (!is_finite() && n > d_->cap)
    throw std::out_of_range("word length " + std::to_string(n) + " exceeds the ball cap " + std::to_string(d_->cap));
  const std::size_t k = generator_count();
  FormalWord w;
  w.letters.assign(n, 0);
  while (true) {
    visit(w);
    int pos = n - 1;
    while (pos >= 0 && w.letters[pos] + 1 == k) w.letters[pos--] = 0;
    if (pos < 0) break;
    ++w.letters[pos];
  }
}

std::vector<FormalWord> Group::formal_words(int n) const {
  std::vector<FormalWord> out;
  for_each_formal_word(n, [&](const FormalWord& w) { out.push_back(w); });
  return out;
}

std::string Group::format(const FormalWord& w) const {
  if (w.letters.empty()) return "e";
  std::string out;
  for (auto gi : w.letters) out += generator_label(gi);
  return out;
}

std::string Group::format(const Element& g) const {
  if (d_->family == GroupFamily::Cyclic) {
    check(g);
    return std::to_string(g.code()[0]);
  }
  return format(geodesic_word(g));
}

std::string Group::element_name(const Element& g) const {
  if (d_->family == GroupFamily::FiniteTable && !d_->element_names.empty()) {
    check(g);
    return d_->element_names[g.code()[0]];
  }
  return format(g);
}

Element Group::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty element");
  if (s == "e") return identity();
  if (d_->family == GroupFamily::Cyclic) {
    int v = parse_int(s, "residue");
    int n = d_->rank;
    return Element(std::vector<std::int32_t>{((v % n) + n) % n});
  }
  Element acc = identity();
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t best = generator_count(), best_len = 0;
    for (std::size_t gi = 0; gi < generator_count(); ++gi) {
      const auto& lab = generator_label(gi);
      if (lab.size() > best_len && s.compare(pos, lab.size(), lab) == 0) {
        best = gi;
        best_len = lab.size();
      }
    }
    if (best == generator_count())
      throw std::invalid_argument("unknown generator at '" + s.substr(pos) + "' for " + d_->name);
    pos += best_len;
    long exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = pos + 1;
      if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      std::string_view digits = std::string_view(s).substr(pos + 1, end - pos - 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      exponent = parse_int(digits, "exponent");
      pos = end;
    }
    const Element& gen = exponent >= 0 ? generator(best) : generator(generator_inverse(best));
    for (long k = 0; k < std::abs(exponent); ++k) acc = multiply(acc, gen);
  }
  return acc;
}

}  // namespace qiso
