#pragma once

#include <string>
#include <vector>

#include "eqzeta/lefschetz.hpp"
#include "eqzeta/zg_ring.hpp"

namespace eqzeta {

/// Raised when Lefschetz data has no integral preimage. `entry` names the
/// offending table entry or sequence index.
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lefschetz data of an element of K0(f.G-perm.).
///
/// A basis element (H, m', a') contributes m' to l_H(m, gH) exactly when
/// Ĥ(H, m, g) lies in a conjugate of Ĥ(H, m', a'); triples over other
/// subgroup classes contribute nothing at H.
[[nodiscard]] LefschetzTable lefschetz_from_zeta(const ZGRingElement& z, int m_max);

/// The unique element whose Lefschetz data is `table` (on 1..m_max, with
/// m_max = 0 meaning the largest m carrying a nonzero entry). Solved per
/// subgroup class with m ascending; the diagonal weight is m. Throws
/// InconsistentData if entries are not constant on N(H)-conjugacy classes of
/// cosets or if a division is not exact.
[[nodiscard]] ZGRingElement zeta_from_lefschetz(const LefschetzTable& table);

/// Classical zeta from L(phi^1..phi^M): r_m = sum_{d|m} mu(m/d) L(phi^d),
/// s_m = r_m / m. Throws InconsistentData if m does not divide r_m.
[[nodiscard]] ClassicalZeta classical_from_lefschetz(const std::vector<BigInt>& lefschetz);

/// Lefschetz numbers L(sigma^m), m = 1..count, of the underlying permutation
/// of a classical zeta function.
[[nodiscard]] std::vector<BigInt> lefschetz_sequence(const ClassicalZeta& z, int count);

/// chi(X/G)/m0 [(Z x G)/Ĥ(H, m0, g0)] for a map none of whose powers below
/// m0 preserves a G-orbit, with g0 phi^m0 = id.
[[nodiscard]] ZGRingElement elementary_zeta(const GroupRef& group, const BigInt& chi_quotient,
                                            int m0, const Subgroup& h, Element g0);

/// z1 + z2 - z1 z2
[[nodiscard]] ZGRingElement sebastiani_thom(const ZGRingElement& z1, const ZGRingElement& z2);

/// One stratum of the quotient of the smooth part of the exceptional divisor.
///
/// `alpha` generates G_x / H_x and must be the element whose inverse acts on
/// the normal fibre by exp(2 pi i / n); the library cannot check that
/// orientation and takes it as given.
struct StratumRecord {
  BigInt chi;     ///< Euler characteristic of the stratum
  int m = 1;      ///< multiplicity of the lifted function along the stratum
  int n = 1;      ///< |G_x / H_x|
  Subgroup h;     ///< H_x, acting trivially on the normal fibre
  Element alpha = 0;
  std::string name;  ///< optional, used in diagnostics
};

/// Throws ValidationError naming the stratum when n does not divide m, H is
/// not a subgroup, alpha does not normalize H, or alpha H does not have
/// order n.
void validate_stratum(const GroupContext& group, const StratumRecord& s, std::size_t index);

/// sum over strata of chi * [(Z x G)/Ĥ(H, m/n, alpha)]
[[nodiscard]] ZGRingElement acampo(const GroupRef& group, const std::vector<StratumRecord>& strata);

}  // namespace eqzeta
