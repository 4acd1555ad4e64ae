#pragma once

#include <compare>
#include <map>

#include "eqzeta/bigint.hpp"
#include "eqzeta/group.hpp"

namespace eqzeta {

/// Conjugacy class of the finite-index subgroup of Z x G generated by
/// {0} x H and (m, alpha). H is the class representative, alpha the least
/// element over all cosets alpha'H conjugate to alpha H under N(H).
struct TripleClass {
  int subgroup_class = 0;
  int m = 1;
  Element alpha = 0;

  friend auto operator<=>(const TripleClass&, const TripleClass&) = default;
};

/// Canonical form of (H, m, a). Throws ValidationError if m < 1 or a does not
/// normalize H.
[[nodiscard]] TripleClass canonical_triple(const GroupContext& group, const Subgroup& h, int m,
                                           Element a);
/// Same, with H given by its class representative.
[[nodiscard]] TripleClass canonical_triple(const GroupContext& group, int class_id, int m,
                                           Element a);

/// Some conjugate of Ĥ(inner) lies in Ĥ(outer): exists g with
/// g^-1 H' g <= H, m | m' and g^-1 a' g H = a^(m'/m) H.
[[nodiscard]] bool zg_contains(const GroupContext& group, const TripleClass& inner,
                               const TripleClass& outer);

/// Order of alpha H in N(H)/H.
[[nodiscard]] int alpha_order(const GroupContext& group, const TripleClass& t);

/// Number of points of (Z x G)/Ĥ(t), i.e. m [G:H].
[[nodiscard]] long long triple_size(const GroupContext& group, const TripleClass& t);

/// rational function prod (1 - t^m)^(s_m), stored as its exponents.
class ClassicalZeta {
 public:
  ClassicalZeta() = default;
  /// (1 - t^m)^s
  static ClassicalZeta factor(int m, const BigInt& s = 1);

  [[nodiscard]] const std::map<int, BigInt>& exponents() const { return exponents_; }
  [[nodiscard]] BigInt exponent(int m) const;
  [[nodiscard]] bool is_one() const { return exponents_.empty(); }
  void add_exponent(int m, const BigInt& s);

  /// Product of rational functions; this is the sum in K0(perm.).
  friend ClassicalZeta operator*(ClassicalZeta a, const ClassicalZeta& b);
  /// Quotient of rational functions; the difference in K0(perm.).
  friend ClassicalZeta operator/(ClassicalZeta a, const ClassicalZeta& b);
  friend bool operator==(const ClassicalZeta&, const ClassicalZeta&) = default;

 private:
  std::map<int, BigInt> exponents_;
};

/// The product in K0(perm.) induced by Cartesian products: an m-cycle times
/// an n-cycle is gcd(m,n) cycles of length lcm(m,n).
[[nodiscard]] ClassicalZeta cartesian_product(const ClassicalZeta& a, const ClassicalZeta& b);

/// sum m s_m; equals the Euler characteristic of the underlying space.
[[nodiscard]] BigInt degree(const ClassicalZeta& z);

/// Element of K0(f.G-perm.): sum of k [(Z x G)/Ĥ] over canonical triples.
class ZGRingElement {
 public:
  explicit ZGRingElement(GroupRef group);
  static ZGRingElement basis(GroupRef group, const TripleClass& t);
  /// The one-point set [(G, 1, e)].
  static ZGRingElement one(GroupRef group);

  [[nodiscard]] const GroupRef& group() const { return group_; }
  [[nodiscard]] const std::map<TripleClass, BigInt>& coefficients() const { return coeffs_; }
  [[nodiscard]] BigInt coefficient(const TripleClass& t) const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// `t` must already be canonical.
  void add_term(const TripleClass& t, const BigInt& k);
  /// Canonicalizes (H, m, a) first.
  void add_term(const Subgroup& h, int m, Element a, const BigInt& k);

  ZGRingElement& operator+=(const ZGRingElement& other);
  ZGRingElement& operator-=(const ZGRingElement& other);
  friend ZGRingElement operator+(ZGRingElement a, const ZGRingElement& b) { return a += b; }
  friend ZGRingElement operator-(ZGRingElement a, const ZGRingElement& b) { return a -= b; }
  friend ZGRingElement operator-(ZGRingElement a);
  friend ZGRingElement operator*(const BigInt& k, ZGRingElement a);
  /// Bilinear extension of basis products computed by realizing both triples
  /// and classifying the Cartesian product.
  friend ZGRingElement operator*(const ZGRingElement& a, const ZGRingElement& b);
  friend bool operator==(const ZGRingElement& a, const ZGRingElement& b);

 private:
  GroupRef group_;
  std::map<TripleClass, BigInt> coeffs_;
};

[[nodiscard]] inline ZGRingElement zg_add(const ZGRingElement& a, const ZGRingElement& b) {
  return a + b;
}
[[nodiscard]] inline ZGRingElement zg_neg(const ZGRingElement& a) { return -a; }
[[nodiscard]] inline ZGRingElement zg_mul(const ZGRingElement& a, const ZGRingElement& b) {
  return a * b;
}

/// Product of two basis elements.
[[nodiscard]] ZGRingElement basis_product(const GroupRef& group, const TripleClass& a,
                                          const TripleClass& b);

/// Forgets G: (H, m, alpha) becomes [G:H]/o copies of a cycle of length m o,
/// with o the order of alpha H in N(H)/H.
[[nodiscard]] ClassicalZeta forget_to_classical(const ZGRingElement& z);

}  // namespace eqzeta
