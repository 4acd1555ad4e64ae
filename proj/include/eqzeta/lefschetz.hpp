#pragma once

#include <compare>
#include <map>

#include "eqzeta/bigint.hpp"
#include "eqzeta/group.hpp"

namespace eqzeta {

struct LefschetzKey {
  int subgroup_class = 0;
  int m = 1;
  Element coset = 0;  ///< least element of the coset gH, g in N(H)

  friend auto operator<=>(const LefschetzKey&, const LefschetzKey&) = default;
};

/// Equivariant Lefschetz data l_H(m, gH) for class representatives H, cosets
/// gH of N(H)/H and 1 <= m <= m_max. Entries not stored are zero.
///
/// l_H(m, gH) counts the points y with Stab_G(y) = H and g sigma^m y = y,
/// divided by |C_W(gH)| where W = N(H)/H. When the fixed set of g sigma^m is
/// G-invariant this is the coefficient of [G/H] in its class.
class LefschetzTable {
 public:
  LefschetzTable(GroupRef group, int m_max);

  [[nodiscard]] const GroupRef& group() const { return group_; }
  [[nodiscard]] int m_max() const { return m_max_; }
  [[nodiscard]] const std::map<LefschetzKey, BigInt>& entries() const { return entries_; }

  /// g may be any element of N(H); throws ValidationError otherwise, or if
  /// the class id or m is out of range.
  [[nodiscard]] LefschetzKey key(int subgroup_class, int m, Element g) const;
  [[nodiscard]] BigInt value(int subgroup_class, int m, Element g) const;
  [[nodiscard]] BigInt value(const LefschetzKey& k) const;
  void set(int subgroup_class, int m, Element g, const BigInt& v);
  void add(const LefschetzKey& k, const BigInt& v);

  /// Largest m with a nonzero entry; 0 for the empty table.
  [[nodiscard]] int largest_nonzero_m() const;

  LefschetzTable& operator+=(const LefschetzTable& other);
  LefschetzTable& operator-=(const LefschetzTable& other);
  friend bool operator==(const LefschetzTable& a, const LefschetzTable& b);

 private:
  GroupRef group_;
  int m_max_;
  std::map<LefschetzKey, BigInt> entries_;
};

}  // namespace eqzeta
