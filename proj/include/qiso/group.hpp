#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// Normal form of a group element. The meaning of the code depends on the
/// owning group: a residue (cyclic), a reduced signed letter sequence (free),
/// an exponent vector (free abelian) or a table index (finite table).
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<std::int32_t> code) : code_(std::move(code)) {}

  const std::vector<std::int32_t>& code() const { return code_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) { return a.code_ <=> b.code_; }

 private:
  std::vector<std::int32_t> code_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

/// A word x_1 ... x_n over the generating set, stored as generator indices.
/// It is a formal expression: no cancellation is applied.
struct FormalWord {
  std::vector<std::size_t> letters;
  std::size_t size() const { return letters.size(); }
};

enum class GroupFamily { Cyclic, Free, FreeAbelian, FiniteTable };

/// Default radius cap for enumerating balls of infinite groups; overridden by
/// the QISO_BALL_CAP environment variable.
int default_ball_cap();

/// A finitely generated group with a fixed, ordered, symmetric generating set.
/// Instances are immutable apart from an internal sphere cache.
class Group {
 public:
  /// Z_n with S = {1, n-1}.
  static Group cyclic(int n);
  /// Z_n with an explicit symmetric set of nonzero residues.
  static Group cyclic(int n, std::vector<int> generators);
  static Group free(int rank);
  static Group free_abelian(int rank);
  /// A finite group given by its multiplication table (table[i][j] = i*j) and
  /// a list of generator indices. The axioms are verified exhaustively.
  static Group finite_table(std::string name, std::vector<std::string> element_names,
                            std::vector<std::vector<int>> table, std::vector<int> generators,
                            std::vector<std::string> generator_labels);
  static Group s3_transpositions();
  static Group s3_dihedral();
  /// Parses `cyclic:n`, `cyclic:4:large`, `free:r`, `freeabelian:r`,
  /// `s3:transpositions`, `s3:dihedral`.
  static Group from_spec(std::string_view spec);

  const std::string& name() const { return d_->name; }
  GroupFamily family() const { return d_->family; }
  bool is_finite() const { return d_->family == GroupFamily::Cyclic || d_->family == GroupFamily::FiniteTable; }
  /// Number of elements; finite groups only.
  std::size_t order() const;
  /// Largest word length; finite groups only.
  int diameter() const;
  int rank() const { return d_->rank; }
  int ball_cap() const { return d_->cap; }
  Group with_ball_cap(int cap) const;

  std::size_t generator_count() const { return d_->generators.size(); }
  const Element& generator(std::size_t i) const { return d_->generators.at(i); }
  const std::string& generator_label(std::size_t i) const { return d_->labels.at(i); }
  /// Index j with s_j = s_i^{-1}.
  std::size_t generator_inverse(std::size_t i) const { return d_->generator_inverse.at(i); }

  Element identity() const;
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  bool is_identity(const Element& g) const { return g == identity(); }
  int length(const Element& g) const;
  /// Word length of the product of the given factors, without materialising
  /// intermediate normal forms where the family allows it.
  int length_of_product(std::initializer_list<const Element*> factors) const;

  /// Elements of length exactly n in shortlex order of their geodesic words.
  /// Throws std::out_of_range past the cap of an infinite group.
  const std::vector<Element>& sphere(int n) const;
  std::vector<Element> ball(int n) const;
  /// All elements (finite groups only), in shortlex order.
  std::vector<Element> elements() const;

  /// Shortlex-least geodesic word of g.
  FormalWord geodesic_word(const Element& g) const;
  Element reduce(const FormalWord& w) const;
  /// Visits all card(S)^n formal words of length n in lexicographic order.
  void for_each_formal_word(int n, const std::function<void(const FormalWord&)>& visit) const;
  std::vector<FormalWord> formal_words(int n) const;

  /// Rendering: residues for cyclic groups, geodesic words otherwise ("e" is
  /// the identity, upper case letters are inverses in free groups).
  std::string format(const Element& g) const;
  std::string format(const FormalWord& w) const;
  /// Permutation/cycle name for finite tables, otherwise format(g).
  std::string element_name(const Element& g) const;
  /// Inverse of format: also accepts `x^k` powers of generator labels.
  Element parse_element(std::string_view text) const;

  /// Throws std::invalid_argument if g is not a normal form of this group.
  void check(const Element& g) const;

  friend bool operator==(const Group& a, const Group& b) { return a.d_ == b.d_; }

 private:
  struct Data {
    std::string name;
    GroupFamily family = GroupFamily::Cyclic;
    int rank = 0;  // n for cyclic, rank for free families, |G| for tables
    int cap = 12;
    bool standard = true;
    std::vector<Element> generators;
    std::vector<std::string> labels;
    std::vector<std::size_t> generator_inverse;
    // finite groups
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    std::vector<std::string> element_names;
    std::vector<int> distance;
    std::vector<int> bfs_order;
    std::vector<std::pair<int, std::size_t>> parent;  // (previous element, generator)
    int diameter = 0;
    // lazily filled sphere cache
    mutable std::mutex cache_mutex;
    mutable std::deque<std::vector<Element>> spheres;
  };

  explicit Group(std::shared_ptr<Data> d) : d_(std::move(d)) {}
  void finish_setup();
  void build_finite_distances();
  void fill_spheres(int n) const;
  int finite_index(const Element& g) const;
  Element finite_element(int index) const;

  std::shared_ptr<Data> d_;
};

}  // namespace qiso
