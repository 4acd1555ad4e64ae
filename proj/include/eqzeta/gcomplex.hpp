#pragma once

#include <vector>

#include "eqzeta/burnside.hpp"
#include "eqzeta/lefschetz.hpp"
#include "eqzeta/zg_ring.hpp"

namespace eqzeta {

/// A finite regular G-CW complex kept as combinatorial data: cells per
/// dimension, faces one dimension down, and a G-action on each dimension.
/// Regularity: an element fixing a cell fixes all of its faces.
class GComplex {
 public:
  /// faces[d][c] lists the (d-1)-cells on the boundary of d-cell c; faces[0]
  /// must be empty lists. generator_images[i][d] is the image array of group
  /// generator i on the d-cells. Throws ValidationError on any inconsistency.
  GComplex(GroupRef group, std::vector<std::vector<std::vector<int>>> faces,
           const std::vector<std::vector<Permutation>>& generator_images);

  [[nodiscard]] const GroupRef& group() const { return group_; }
  [[nodiscard]] int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  [[nodiscard]] int cells(int d) const { return static_cast<int>(faces_[d].size()); }
  [[nodiscard]] const std::vector<int>& faces(int d, int cell) const { return faces_[d][cell]; }
  [[nodiscard]] const GSet& action(int d) const { return action_[d]; }
  [[nodiscard]] long long total_cells() const;

 private:
  GroupRef group_;
  std::vector<std::vector<std::vector<int>>> faces_;
  std::vector<GSet> action_;
};

/// A cellular map permuting the cells of each dimension, commuting with G
/// and with incidence.
class GCellularMap {
 public:
  /// images[d] is the image array on the d-cells. Validates bijectivity,
  /// commutation with every generator and with the face relation, and joint
  /// regularity of g sigma^m for all g and m up to the period.
  GCellularMap(const GComplex& complex, std::vector<Permutation> images);

  [[nodiscard]] const Permutation& on(int d) const { return images_[d]; }
  [[nodiscard]] long long period() const { return period_; }

 private:
  std::vector<Permutation> images_;
  long long period_ = 1;
};

/// sum_n (-1)^n [C_n]
[[nodiscard]] BurnsideElement chi_G_cellwise(const GComplex& k);

/// sum over classes (H) of chi(X^(H)/G) [G/H], where chi(X^(H)/G) is the
/// signed count of G-orbits of cells whose stabilizers lie in (H).
[[nodiscard]] BurnsideElement chi_G_strata(const GComplex& k);

/// Second form of the same sum: chi(X^(H)) |H| / |G| with chi(X^(H)) the
/// signed count of cells (not orbits) with stabilizer in (H).
[[nodiscard]] BurnsideElement chi_G_strata_weighted(const GComplex& k);

/// Ordinary Euler characteristic sum_n (-1)^n |C_n|.
[[nodiscard]] long long euler_characteristic(const GComplex& k);

/// sum_n (-1)^n classify(C_n with sigma).
[[nodiscard]] ZGRingElement brute_zeta(const GComplex& k, const GCellularMap& sigma);

/// Alternating sum over dimensions of the per-dimension Lefschetz tables;
/// m_max = 0 selects the lcm of the orbit periods.
[[nodiscard]] LefschetzTable lefschetz_table(const GComplex& k, const GCellularMap& sigma,
                                             int m_max = 0);

}  // namespace eqzeta
