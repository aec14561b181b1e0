#include "slc/pinkham.hpp"

#include <algorithm>

#include "slc/error.hpp"

namespace slc {

TriplePQR::TriplePQR(long p_, long q_, long r_) : p(p_), q(q_), r(r_) {
  if (p < 2 || q < 2 || r < 2) {
    throw Error(ErrorCode::InvalidTriple, "p, q, r must all be >= 2");
  }
  // 1/p + 1/q + 1/r < 1  <=>  pq + qr + rp < pqr
  const Integer P = p, Q = q, R = r;
  if (!(P * Q + Q * R + R * P < P * Q * R)) {
    throw Error(ErrorCode::InvalidTriple, "need 1/p + 1/q + 1/r < 1");
  }
}

CuspCycle dual_cycle(const TriplePQR& t) {
  if (std::min({t.p, t.q, t.r}) < 3) {
    throw Error(ErrorCode::InvalidTriple,
                "dual cycle would contain a weight-1 curve (min(p,q,r) = 2)");
  }
  return canonicalize(CuspCycle({static_cast<int>(t.p - 1), static_cast<int>(t.q - 1),
                                 static_cast<int>(t.r - 1)}));
}

IntMatrix relation_matrix(const TriplePQR& t) {
  return IntMatrix{{t.p - 1, -1, -1}, {-1, t.q - 1, -1}, {-1, -1, t.r - 1}};
}

AbGroup abelianized_group(const TriplePQR& t) { return cokernel_torsion(relation_matrix(t)); }

Integer group_order(const TriplePQR& t) { return abelianized_group(t).torsion_order(); }

EquationRecord smoothing_record(const TriplePQR& t) {
  EquationRecord rec;
  rec.equations = {"x^" + std::to_string(t.p) + "+y^" + std::to_string(t.q) + "+z^" +
                   std::to_string(t.r) + "+xyz=t"};
  rec.group_order = group_order(t);
  return rec;
}

}  // namespace slc
