#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace eqzeta {

/// Group elements are dense indices 0..order-1.
using Element = int;

/// A permutation of 0..n-1 in one-line notation.
using Permutation = std::vector<int>;

/// Sorted set of element indices closed under the group law.
class Subgroup {
 public:
  Subgroup() = default;
  /// Takes any element list; sorts and deduplicates. Closure is not checked
  /// here (see FiniteGroup::is_subgroup).
  explicit Subgroup(std::vector<Element> elements);

  [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
  [[nodiscard]] int order() const { return static_cast<int>(elements_.size()); }
  [[nodiscard]] bool contains(Element g) const;
  [[nodiscard]] bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<Element> elements_;
};

struct GroupLimits {
  int max_order = 5040;
};

/// A finite group given by its multiplication table.
///
/// The constructor validates the table (Latin square, two-sided identity,
/// associativity by Light's test over a generating set) and derives the
/// inverse table. `generators` are the elements against which per-generator
/// action data in documents is interpreted; if empty, a generating set is
/// chosen greedily (smallest element outside the current closure).
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<Element>> table,
              std::vector<Element> generators = {},
              std::vector<std::string> labels = {},
              GroupLimits limits = {});

  [[nodiscard]] int order() const { return static_cast<int>(table_.size()); }
  [[nodiscard]] Element identity() const { return identity_; }
  [[nodiscard]] Element mul(Element a, Element b) const { return table_[a][b]; }
  [[nodiscard]] Element inv(Element a) const { return inverse_[a]; }
  /// g^-1 a g
  [[nodiscard]] Element conj(Element a, Element g) const {
    return table_[table_[inverse_[g]][a]][g];
  }
  [[nodiscard]] Element power(Element a, long long k) const;
  [[nodiscard]] int element_order(Element a) const;

  [[nodiscard]] const std::vector<Element>& generators() const { return generators_; }
  [[nodiscard]] const std::vector<std::vector<Element>>& table() const { return table_; }
  [[nodiscard]] std::string label(Element a) const;
  [[nodiscard]] bool has_custom_labels() const { return !labels_.empty(); }
  /// Index of a label produced by label(); -1 if unknown.
  [[nodiscard]] Element find_label(const std::string& text) const;

  [[nodiscard]] Subgroup closure(std::span<const Element> seeds) const;
  [[nodiscard]] bool is_subgroup(std::span<const Element> elements) const;
  [[nodiscard]] Subgroup whole() const;
  [[nodiscard]] Subgroup trivial() const;
  /// g^-1 H g
  [[nodiscard]] Subgroup conjugate(const Subgroup& h, Element g) const;
  /// C_H = {a : a^-1 H a = H}. Throws ValidationError if H is not a subgroup.
  [[nodiscard]] Subgroup normalizer(const Subgroup& h) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
};

// Named families. Element orders are part of the document contract:
//   cyclic n     k      = g^k
//   dihedral n   i < n  = r^i,  n + i = s r^i      (order 2n)
//   symmetric n  lexicographic one-line permutations, (pq)(x) = p(q(x))
//   product      (a, b) = a * |B| + b
[[nodiscard]] FiniteGroup cyclic_group(int n, GroupLimits limits = {});
[[nodiscard]] FiniteGroup dihedral_group(int n, GroupLimits limits = {});
[[nodiscard]] FiniteGroup symmetric_group(int n, GroupLimits limits = {});
[[nodiscard]] FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                         GroupLimits limits = {});
/// Closure of permutation generators on `degree` points; elements sorted
/// lexicographically, so the identity is element 0.
[[nodiscard]] FiniteGroup permutation_group(int degree, const std::vector<Permutation>& gens,
                                            GroupLimits limits = {});

struct SubgroupClass {
  Subgroup representative;  ///< lexicographically least conjugate
  Subgroup normalizer;
  std::vector<Subgroup> members;  ///< all conjugates, sorted; size [G : N(H)]
  std::vector<Element> generators;
};

/// Conjugacy classes of subgroups, ordered by (order, representative) so the
/// trivial subgroup is class 0 and G is the last class.
class SubgroupClassTable {
 public:
  explicit SubgroupClassTable(const FiniteGroup& group);

  [[nodiscard]] int size() const { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const SubgroupClass& operator[](int id) const { return classes_[id]; }
  [[nodiscard]] const std::vector<SubgroupClass>& classes() const { return classes_; }

  struct Location {
    int class_id;
    Element conjugator;  ///< g with g^-1 H g = representative
  };
  /// `group` must be the group the table was built from. Throws
  /// ValidationError if `h` is not a subgroup.
  [[nodiscard]] Location locate(const FiniteGroup& group, const Subgroup& h) const;

  /// Class i is sub-conjugate to class j.
  [[nodiscard]] bool subconjugate(int i, int j) const { return subconjugacy_[i][j] != 0; }
  [[nodiscard]] int total_subgroups() const;

 private:
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<Element>, int> by_representative_;
  std::vector<std::vector<char>> subconjugacy_;
};

/// entry(K, H) = number of H-fixed points on G/K, lower triangular in the
/// class order.
class TableOfMarks {
 public:
  TableOfMarks(const FiniteGroup& group, const SubgroupClassTable& classes);

  [[nodiscard]] int size() const { return static_cast<int>(marks_.size()); }
  [[nodiscard]] long long operator()(int k, int h) const { return marks_[k][h]; }
  [[nodiscard]] const std::vector<std::vector<long long>>& rows() const { return marks_; }

 private:
  std::vector<std::vector<long long>> marks_;
};

/// The Weyl group W = N(H)/H of a class representative, with its conjugacy
/// classes. Cosets are identified by their least element.
struct WeylData {
  std::vector<int> coset_of;          ///< element -> coset id, -1 outside N(H)
  std::vector<Element> coset_min;     ///< coset id -> least element
  std::vector<int> conj_class;        ///< coset id -> W-conjugacy class id
  std::vector<Element> class_canon;   ///< W-class id -> least element over the class
  std::vector<int> centralizer_size;  ///< coset id -> |C_W(coset)|
  std::vector<int> coset_order;       ///< coset id -> order in W
  [[nodiscard]] int order() const { return static_cast<int>(coset_min.size()); }
};

/// Immutable bundle of a group together with its subgroup classes, marks,
/// and Weyl data. Ring elements hold a shared reference to one of these.
class GroupContext {
 public:
  explicit GroupContext(FiniteGroup group);
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  [[nodiscard]] SubgroupClassTable::Location locate(const Subgroup& h) const {
    return classes_.locate(group_, h);
  }

  [[nodiscard]] const FiniteGroup& group() const { return group_; }
  [[nodiscard]] const SubgroupClassTable& classes() const { return classes_; }
  [[nodiscard]] const TableOfMarks& marks() const { return marks_; }
  [[nodiscard]] const WeylData& weyl(int class_id) const { return weyl_[class_id]; }
  [[nodiscard]] const Subgroup& representative(int class_id) const {
    return classes_[class_id].representative;
  }
  /// [G : H] for the class representative.
  [[nodiscard]] int index(int class_id) const;
  [[nodiscard]] int trivial_class() const { return 0; }
  [[nodiscard]] int whole_class() const { return classes_.size() - 1; }

 private:
  FiniteGroup group_;
  SubgroupClassTable classes_;
  TableOfMarks marks_;
  std::vector<WeylData> weyl_;
};

using GroupRef = std::shared_ptr<const GroupContext>;

[[nodiscard]] GroupRef analyze(FiniteGroup group);

/// Same group data (pointer identity or equal tables).
[[nodiscard]] bool same_group(const GroupRef& a, const GroupRef& b);

}  // namespace eqzeta
