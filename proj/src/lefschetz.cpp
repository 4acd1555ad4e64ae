#include "eqzeta/lefschetz.hpp"

#include "eqzeta/error.hpp"

namespace eqzeta {

LefschetzTable::LefschetzTable(GroupRef group, int m_max)
    : group_(std::move(group)), m_max_(m_max) {
  if (m_max_ < 0) throw ValidationError("m_max must be >= 0");
}

LefschetzKey LefschetzTable::key(int subgroup_class, int m, Element g) const {
  if (subgroup_class < 0 || subgroup_class >= group_->classes().size()) {
    throw ValidationError("subgroup class id " + std::to_string(subgroup_class) +
                          " out of range");
  }
  if (m < 1 || m > m_max_) {
    throw ValidationError("m = " + std::to_string(m) + " outside 1.." + std::to_string(m_max_));
  }
  if (g < 0 || g >= group_->group().order()) throw ValidationError("element index out of range");
  const WeylData& w = group_->weyl(subgroup_class);
  const int coset = w.coset_of[g];
  if (coset < 0) {
    throw ValidationError("element " + group_->group().label(g) +
                          " does not normalize subgroup class " + std::to_string(subgroup_class));
  }
  return {subgroup_class, m, w.coset_min[coset]};
}

BigInt LefschetzTable::value(int subgroup_class, int m, Element g) const {
  return value(key(subgroup_class, m, g));
}

BigInt LefschetzTable::value(const LefschetzKey& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void LefschetzTable::set(int subgroup_class, int m, Element g, const BigInt& v) {
  const LefschetzKey k = key(subgroup_class, m, g);
  if (v == 0) {
    entries_.erase(k);
  } else {
    entries_[k] = v;
  }
}

void LefschetzTable::add(const LefschetzKey& k, const BigInt& v) {
  if (v == 0) return;
  auto [it, inserted] = entries_.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

int LefschetzTable::largest_nonzero_m() const {
  int m = 0;
  for (const auto& [k, v] : entries_) m = std::max(m, k.m);
  return m;
}

LefschetzTable& LefschetzTable::operator+=(const LefschetzTable& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  if (m_max_ != other.m_max_) throw ValidationError("Lefschetz tables have different m_max");
  for (const auto& [k, v] : other.entries_) add(k, v);
  return *this;
}

LefschetzTable& LefschetzTable::operator-=(const LefschetzTable& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  if (m_max_ != other.m_max_) throw ValidationError("Lefschetz tables have different m_max");
  for (const auto& [k, v] : other.entries_) add(k, -v);
  return *this;
}

bool operator==(const LefschetzTable& a, const LefschetzTable& b) {
  return same_group(a.group_, b.group_) && a.m_max_ == b.m_max_ && a.entries_ == b.entries_;
}

}  // namespace eqzeta
