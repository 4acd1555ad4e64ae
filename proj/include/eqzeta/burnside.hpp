#pragma once

#include <map>
#include <vector>

#include "eqzeta/bigint.hpp"
#include "eqzeta/group.hpp"

namespace eqzeta {

/// A finite G-set: action[g][x] is the image of point x under element g.
class GSet {
 public:
  GSet() = default;
  /// Extends per-generator images (one array per group generator) to the
  /// whole group; throws ValidationError if they are not bijections or do not
  /// define a homomorphism.
  static GSet from_generators(const FiniteGroup& group, int points,
                              const std::vector<Permutation>& generator_images);
  /// Validates a full element-by-point action table.
  static GSet from_table(const FiniteGroup& group, std::vector<Permutation> action);

  [[nodiscard]] int points() const { return points_; }
  [[nodiscard]] int act(Element g, int x) const { return action_[g][x]; }
  [[nodiscard]] const Permutation& of(Element g) const { return action_[g]; }
  [[nodiscard]] const std::vector<Permutation>& table() const { return action_; }

  /// Stabilizer of a point.
  [[nodiscard]] Subgroup stabilizer(int x) const;
  /// Orbit decomposition; each orbit is listed in increasing point order.
  [[nodiscard]] std::vector<std::vector<int>> orbits() const;

 private:
  friend GSet product_gset(const GSet& a, const GSet& b);
  GSet(int points, std::vector<Permutation> action)
      : points_(points), action_(std::move(action)) {}
  int points_ = 0;
  std::vector<Permutation> action_;
};

/// Left cosets G/H with left multiplication; cosets ordered by least element.
[[nodiscard]] GSet coset_space(const FiniteGroup& group, const Subgroup& h);

/// Element of the Burnside ring: sum of c_H [G/H] over subgroup classes.
class BurnsideElement {
 public:
  explicit BurnsideElement(GroupRef group);
  static BurnsideElement basis(GroupRef group, int class_id);
  static BurnsideElement one(GroupRef group);

  [[nodiscard]] const GroupRef& group() const { return group_; }
  [[nodiscard]] const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] BigInt coefficient(int class_id) const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  void add_term(int class_id, const BigInt& c);

  /// Ring homomorphism to Z^classes: component H is the number of H-fixed
  /// points.
  [[nodiscard]] std::vector<BigInt> mark_vector() const;
  /// Inverse of mark_vector; throws std::domain_error if `marks` is not in
  /// the image.
  static BurnsideElement from_marks(GroupRef group, const std::vector<BigInt>& marks);
  /// Number of points of the underlying set.
  [[nodiscard]] BigInt cardinality() const;

  BurnsideElement& operator+=(const BurnsideElement& other);
  BurnsideElement& operator-=(const BurnsideElement& other);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator-(BurnsideElement a);
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator*(const BigInt& k, BurnsideElement a);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

 private:
  GroupRef group_;
  std::map<int, BigInt> coeffs_;
};

/// Orbit decomposition; each orbit adds 1 to the class of its stabilizers.
[[nodiscard]] BurnsideElement class_of_gset(const GroupRef& group, const GSet& set);

/// Diagonal action on the Cartesian product.
[[nodiscard]] GSet product_gset(const GSet& a, const GSet& b);

}  // namespace eqzeta
