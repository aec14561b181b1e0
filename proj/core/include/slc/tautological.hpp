#pragma once

// Tautological-invariant arithmetic for the G-equivariant sextic family.
// Divisor classes are rational multiples of c1(lambda2); every pairing is an
// exact rational.

#include <gmpxx.h>

#include <utility>

namespace slc {

/// Published pairings used as defaults.
inline const mpq_class kDefaultObPairing{-1, 4};  ///< <-c1(L_Ob), D_II>
inline const mpq_class kDefaultL2Pairing{12};     ///< <c1(lambda2), D_II>
inline const mpq_class kDefaultL2Square{288};     ///< <c1(lambda2)^2, [D_II]>

/// Published equivariant tangent cohomology h^1(T)^G; no independent
/// computation is attempted.
inline constexpr long kEquivariantH1 = 2;

struct TautologicalResult {
  mpq_class ratio;        ///< c1(L_Ob) = ratio * c1(lambda2)
  mpq_class pair_l2_vir;  ///< <c1(lambda2), [virtual class]>
  mpq_class i_cm;         ///< CM tautological invariant
};

/// ratio = -ob / l2, pair_l2_vir = l2sq * ratio, i_cm = 2 * pair_l2_vir.
/// Throws ZeroPairing when l2 == 0.
TautologicalResult tautological_invariant(const mpq_class& ob, const mpq_class& l2,
                                          const mpq_class& l2sq);

/// Exponents (a3, a2) of lambda_CM = lambda3^a3 (x) lambda2^a2, i.e.
/// (2 mu + 6, -6).
std::pair<mpq_class, mpq_class> cm_exponents(const mpq_class& mu);

struct EquivariantVd {
  long h1 = 0;  ///< published constant
  long h2 = 0;  ///< dimension of the invariant two-forms
  long vd = 0;
};

/// h1 - h2 with h2 read off invariant_two_forms().
EquivariantVd equivariant_vd();

}  // namespace slc
