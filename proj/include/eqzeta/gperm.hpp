#pragma once

#include <vector>

#include "eqzeta/burnside.hpp"
#include "eqzeta/lefschetz.hpp"
#include "eqzeta/zg_ring.hpp"

namespace eqzeta {

/// A finite G-set with a G-equivariant bijection sigma; equivalently a finite
/// (Z x G)-set on which (1, e) acts as sigma.
class GPermutation {
 public:
  /// Throws ValidationError if sigma is not a bijection or fails to commute
  /// with a generator (the message names the generator and the point).
  GPermutation(GroupRef group, GSet gset, Permutation sigma);
  static GPermutation from_generators(GroupRef group, int points,
                                      const std::vector<Permutation>& generator_images,
                                      Permutation sigma);

  [[nodiscard]] const GroupRef& group() const { return group_; }
  [[nodiscard]] const GSet& gset() const { return gset_; }
  [[nodiscard]] const Permutation& sigma() const { return sigma_; }
  [[nodiscard]] int points() const { return gset_.points(); }

  /// Same G-set with sigma replaced by sigma^m, m >= 0.
  [[nodiscard]] GPermutation power(int m) const;

 private:
  GroupRef group_;
  GSet gset_;
  Permutation sigma_;
};

/// Triple of the (Z x G)-orbit through `base`: H = Stab_G(base), m the least
/// k > 0 with sigma^k(base) in G base, alpha the class of any a with
/// a sigma^m(base) = base.
[[nodiscard]] TripleClass orbit_triple(const GPermutation& p, int base);

/// (Z x G)-orbits, each listed in increasing point order.
[[nodiscard]] std::vector<std::vector<int>> zg_orbits(const GPermutation& p);

/// Sum over (Z x G)-orbits of the orbit triple, base point = least point.
[[nodiscard]] ZGRingElement classify(const GPermutation& p);

/// The coset model (Z x G)/Ĥ(t) on m [G:H] points: point i [G:H] + c is
/// (i, c-th coset of H); sigma shifts i and wraps (m-1, bH) to (0, b a^-1 H).
[[nodiscard]] GPermutation realize(const GroupRef& group, const TripleClass& t);

/// Class of the fixed set of g sigma as a G-set. Throws ValidationError if
/// that set is not G-invariant (possible when g is not central).
[[nodiscard]] BurnsideElement equivariant_lefschetz(Element g, const GPermutation& p);

/// lcm over orbits of the period m of the orbit triple; 1 for the empty set.
[[nodiscard]] long long period_lcm(const GPermutation& p);

/// Lefschetz data for 1 <= m <= m_max; m_max = 0 selects period_lcm(p).
[[nodiscard]] LefschetzTable lefschetz_table(const GPermutation& p, int m_max = 0);

[[nodiscard]] GPermutation disjoint_union(const GPermutation& a, const GPermutation& b);
/// Diagonal G-action, sigma acting on both factors.
[[nodiscard]] GPermutation cartesian_product(const GPermutation& a, const GPermutation& b);
/// Renames point x to relabel[x].
[[nodiscard]] GPermutation relabel(const GPermutation& p, const Permutation& relabel);

}  // namespace eqzeta
