#include "slc/tautological.hpp"

#include "slc/error.hpp"
#include "slc/invariants.hpp"

namespace slc {

TautologicalResult tautological_invariant(const mpq_class& ob, const mpq_class& l2,
                                          const mpq_class& l2sq) {
  if (l2 == 0) throw Error(ErrorCode::ZeroPairing, "pairing <c1(lambda2), D_II> is zero");
  TautologicalResult r;
  r.ratio = -ob / l2;
  r.pair_l2_vir = l2sq * r.ratio;
  r.i_cm = 2 * r.pair_l2_vir;
  return r;
}

std::pair<mpq_class, mpq_class> cm_exponents(const mpq_class& mu) {
  return {mpq_class(2 * mu + 6), mpq_class(-6)};
}

EquivariantVd equivariant_vd() {
  EquivariantVd out;
  out.h1 = kEquivariantH1;
  out.h2 = static_cast<long>(invariant_two_forms().dimension);
  out.vd = out.h1 - out.h2;
  return out;
}

}  // namespace slc
