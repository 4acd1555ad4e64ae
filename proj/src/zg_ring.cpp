#include "eqzeta/zg_ring.hpp"

#include <numeric>

#include "eqzeta/error.hpp"
#include "eqzeta/gperm.hpp"

namespace eqzeta {

TripleClass canonical_triple(const GroupContext& group, int class_id, int m, Element a) {
  if (m < 1) throw ValidationError("triple multiplicity m must be >= 1, got " + std::to_string(m));
  if (class_id < 0 || class_id >= group.classes().size()) {
    throw ValidationError("subgroup class id " + std::to_string(class_id) + " out of range");
  }
  if (a < 0 || a >= group.group().order()) throw ValidationError("element index out of range");
  const WeylData& w = group.weyl(class_id);
  const int coset = w.coset_of[a];
  if (coset < 0) {
    throw ValidationError("element " + group.group().label(a) +
                          " does not normalize the subgroup");
  }
  return {class_id, m, w.class_canon[w.conj_class[coset]]};
}

TripleClass canonical_triple(const GroupContext& group, const Subgroup& h, int m, Element a) {
  if (m < 1) throw ValidationError("triple multiplicity m must be >= 1, got " + std::to_string(m));
  if (a < 0 || a >= group.group().order()) throw ValidationError("element index out of range");
  const auto where = group.locate(h);
  return canonical_triple(group, where.class_id, m, group.group().conj(a, where.conjugator));
}

bool zg_contains(const GroupContext& group, const TripleClass& inner, const TripleClass& outer) {
  if (inner.m % outer.m != 0) return false;
  const FiniteGroup& g = group.group();
  const Subgroup& h_in = group.representative(inner.subgroup_class);
  const Subgroup& h_out = group.representative(outer.subgroup_class);
  if (h_out.order() % h_in.order() != 0) return false;
  std::vector<char> in_outer(g.order(), 0);
  for (Element x : h_out.elements()) in_outer[x] = 1;
  const Element target_inv = g.inv(g.power(outer.alpha, inner.m / outer.m));
  for (int b = 0; b < g.order(); ++b) {
    bool sub = true;
    for (Element x : h_in.elements()) {
      if (!in_outer[g.conj(x, b)]) {
        sub = false;
        break;
      }
    }
    if (sub && in_outer[g.mul(target_inv, g.conj(inner.alpha, b))]) return true;
  }
  return false;
}

int alpha_order(const GroupContext& group, const TripleClass& t) {
  const WeylData& w = group.weyl(t.subgroup_class);
  return w.coset_order[w.coset_of[t.alpha]];
}

long long triple_size(const GroupContext& group, const TripleClass& t) {
  return static_cast<long long>(t.m) * group.index(t.subgroup_class);
}

ClassicalZeta ClassicalZeta::factor(int m, const BigInt& s) {
  ClassicalZeta z;
  z.add_exponent(m, s);
  return z;
}

BigInt ClassicalZeta::exponent(int m) const {
  auto it = exponents_.find(m);
  return it == exponents_.end() ? BigInt(0) : it->second;
}

void ClassicalZeta::add_exponent(int m, const BigInt& s) {
  if (m < 1) throw ValidationError("zeta factor index must be >= 1");
  if (s == 0) return;
  auto [it, inserted] = exponents_.emplace(m, s);
  if (!inserted) {
    it->second += s;
    if (it->second == 0) exponents_.erase(it);
  }
}

ClassicalZeta operator*(ClassicalZeta a, const ClassicalZeta& b) {
  for (const auto& [m, s] : b.exponents_) a.add_exponent(m, s);
  return a;
}

ClassicalZeta operator/(ClassicalZeta a, const ClassicalZeta& b) {
  for (const auto& [m, s] : b.exponents_) a.add_exponent(m, -s);
  return a;
}

ClassicalZeta cartesian_product(const ClassicalZeta& a, const ClassicalZeta& b) {
  ClassicalZeta out;
  for (const auto& [m1, s1] : a.exponents()) {
    for (const auto& [m2, s2] : b.exponents()) {
      const int g = std::gcd(m1, m2);
      out.add_exponent(m1 / g * m2, s1 * s2 * g);
    }
  }
  return out;
}

BigInt degree(const ClassicalZeta& z) {
  BigInt d = 0;
  for (const auto& [m, s] : z.exponents()) d += s * m;
  return d;
}

ZGRingElement::ZGRingElement(GroupRef group) : group_(std::move(group)) {}

ZGRingElement ZGRingElement::basis(GroupRef group, const TripleClass& t) {
  ZGRingElement z(std::move(group));
  z.add_term(t, 1);
  return z;
}

ZGRingElement ZGRingElement::one(GroupRef group) {
  const TripleClass top{group->whole_class(), 1, group->group().identity()};
  return basis(std::move(group), top);
}

BigInt ZGRingElement::coefficient(const TripleClass& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void ZGRingElement::add_term(const TripleClass& t, const BigInt& k) {
  if (k == 0) return;
  auto [it, inserted] = coeffs_.emplace(t, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void ZGRingElement::add_term(const Subgroup& h, int m, Element a, const BigInt& k) {
  add_term(canonical_triple(*group_, h, m, a), k);
}

ZGRingElement& ZGRingElement::operator+=(const ZGRingElement& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  for (const auto& [t, k] : other.coeffs_) add_term(t, k);
  return *this;
}

ZGRingElement& ZGRingElement::operator-=(const ZGRingElement& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  for (const auto& [t, k] : other.coeffs_) add_term(t, -k);
  return *this;
}

ZGRingElement operator-(ZGRingElement a) {
  for (auto& [t, k] : a.coeffs_) k = -k;
  return a;
}

ZGRingElement operator*(const BigInt& k, ZGRingElement a) {
  if (k == 0) return ZGRingElement(a.group_);
  for (auto& [t, c] : a.coeffs_) c *= k;
  return a;
}

ZGRingElement basis_product(const GroupRef& group, const TripleClass& a, const TripleClass& b) {
  return classify(cartesian_product(realize(group, a), realize(group, b)));
}

ZGRingElement operator*(const ZGRingElement& a, const ZGRingElement& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  ZGRingElement out(a.group_);
  for (const auto& [ta, ka] : a.coeffs_) {
    for (const auto& [tb, kb] : b.coeffs_) out += (ka * kb) * basis_product(a.group_, ta, tb);
  }
  return out;
}

bool operator==(const ZGRingElement& a, const ZGRingElement& b) {
  return same_group(a.group_, b.group_) && a.coeffs_ == b.coeffs_;
}

ClassicalZeta forget_to_classical(const ZGRingElement& z) {
  ClassicalZeta out;
  for (const auto& [t, k] : z.coefficients()) {
    const int o = alpha_order(*z.group(), t);
    out.add_exponent(t.m * o, k * (z.group()->index(t.subgroup_class) / o));
  }
  return out;
}

}  // namespace eqzeta
