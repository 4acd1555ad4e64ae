#include "eqzeta/zeta_engine.hpp"

#include "eqzeta/error.hpp"

namespace eqzeta {

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::string describe(const GroupContext& group, int cls, int m, Element g) {
  return "(H class " + std::to_string(cls) + ", m=" + std::to_string(m) +
         ", g=" + group.group().label(g) + ")";
}

}  // namespace

LefschetzTable lefschetz_from_zeta(const ZGRingElement& z, int m_max) {
  const GroupContext& ctx = *z.group();
  LefschetzTable table(z.group(), m_max);
  for (const auto& [t, k] : z.coefficients()) {
    const WeylData& w = ctx.weyl(t.subgroup_class);
    for (int m = t.m; m <= m_max; m += t.m) {
      for (int d = 0; d < w.order(); ++d) {
        const TripleClass inner{t.subgroup_class, m, w.coset_min[d]};
        if (zg_contains(ctx, inner, t)) table.add({t.subgroup_class, m, w.coset_min[d]}, k * t.m);
      }
    }
  }
  return table;
}

ZGRingElement zeta_from_lefschetz(const LefschetzTable& table) {
  const GroupContext& ctx = *table.group();
  const int m_max = table.m_max();
  ZGRingElement out(table.group());
  for (int c = 0; c < ctx.classes().size(); ++c) {
    const WeylData& w = ctx.weyl(c);
    const int classes = static_cast<int>(w.class_canon.size());
    std::vector<std::pair<TripleClass, BigInt>> solved;
    for (int m = 1; m <= m_max; ++m) {
      std::vector<BigInt> per_class(classes);
      std::vector<char> seen(classes, 0);
      for (int d = 0; d < w.order(); ++d) {
        const int j = w.conj_class[d];
        const BigInt v = table.value(c, m, w.coset_min[d]);
        if (!seen[j]) {
          per_class[j] = v;
          seen[j] = 1;
        } else if (per_class[j] != v) {
          throw InconsistentData("Lefschetz entry " + describe(ctx, c, m, w.coset_min[d]) +
                                 " differs from a conjugate entry");
        }
      }
      for (int j = 0; j < classes; ++j) {
        const TripleClass inner{c, m, w.class_canon[j]};
        BigInt residual = per_class[j];
        for (const auto& [t, k] : solved) {
          if (m % t.m == 0 && zg_contains(ctx, inner, t)) residual -= k * t.m;
        }
        if (residual % m != 0) {
          throw InconsistentData("no integral solution at Lefschetz entry " +
                                 describe(ctx, c, m, w.class_canon[j]));
        }
        const BigInt k = residual / m;
        if (k != 0) {
          solved.emplace_back(inner, k);
          out.add_term(inner, k);
        }
      }
    }
  }
  return out;
}

ClassicalZeta classical_from_lefschetz(const std::vector<BigInt>& lefschetz) {
  if (lefschetz.empty()) throw ValidationError("Lefschetz sequence is empty");
  ClassicalZeta z;
  const int count = static_cast<int>(lefschetz.size());
  for (int m = 1; m <= count; ++m) {
    BigInt r = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d == 0) r += moebius(m / d) * lefschetz[d - 1];
    }
    if (r % m != 0) {
      throw InconsistentData("r_" + std::to_string(m) + " = " + r.str() +
                             " is not divisible by " + std::to_string(m));
    }
    z.add_exponent(m, r / m);
  }
  return z;
}

std::vector<BigInt> lefschetz_sequence(const ClassicalZeta& z, int count) {
  std::vector<BigInt> out(count, 0);
  for (const auto& [d, s] : z.exponents()) {
    for (int m = d; m <= count; m += d) out[m - 1] += s * d;
  }
  return out;
}

ZGRingElement elementary_zeta(const GroupRef& group, const BigInt& chi_quotient, int m0,
                              const Subgroup& h, Element g0) {
  if (m0 < 1) throw ValidationError("m0 must be >= 1");
  if (chi_quotient % m0 != 0) {
    throw ValidationError("m0 = " + std::to_string(m0) + " does not divide chi(X/G) = " +
                          chi_quotient.str());
  }
  ZGRingElement z(group);
  z.add_term(canonical_triple(*group, h, m0, g0), chi_quotient / m0);
  return z;
}

ZGRingElement sebastiani_thom(const ZGRingElement& z1, const ZGRingElement& z2) {
  return z1 + z2 - z1 * z2;
}

void validate_stratum(const GroupContext& group, const StratumRecord& s, std::size_t index) {
  const std::string who = "stratum " + std::to_string(index) +
                          (s.name.empty() ? std::string() : " (" + s.name + ")");
  const FiniteGroup& g = group.group();
  if (s.m < 1 || s.n < 1) throw ValidationError(who + ": m and n must be positive");
  if (s.m % s.n != 0) {
    throw ValidationError(who + ": n = " + std::to_string(s.n) + " does not divide m = " +
                          std::to_string(s.m));
  }
  if (!g.is_subgroup(s.h.elements())) throw ValidationError(who + ": H is not a subgroup");
  if (s.alpha < 0 || s.alpha >= g.order()) throw ValidationError(who + ": alpha out of range");
  if (!g.normalizer(s.h).contains(s.alpha)) {
    throw ValidationError(who + ": alpha does not normalize H");
  }
  int order = 1;
  for (Element x = s.alpha; !s.h.contains(x); x = g.mul(x, s.alpha)) ++order;
  if (order != s.n) {
    throw ValidationError(who + ": alpha H has order " + std::to_string(order) +
                          " in N(H)/H, expected n = " + std::to_string(s.n));
  }
}

ZGRingElement acampo(const GroupRef& group, const std::vector<StratumRecord>& strata) {
  ZGRingElement z(group);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const StratumRecord& s = strata[i];
    validate_stratum(*group, s, i);
    z.add_term(canonical_triple(*group, s.h, s.m / s.n, s.alpha), s.chi);
  }
  return z;
}

}  // namespace eqzeta
