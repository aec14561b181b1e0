#pragma once

// Pinkham's hypersurface cusps x^p + y^q + z^r + xyz = 0.

#include "slc/arith.hpp"
#include "slc/cusp.hpp"
#include "slc/quotient_cusp.hpp"

namespace slc {

struct TriplePQR {
  long p, q, r;

  /// Throws InvalidTriple unless p, q, r >= 2 and 1/p + 1/q + 1/r < 1.
  TriplePQR(long p, long q, long r);
};

/// canonicalize((p-1, q-1, r-1)). Throws InvalidTriple when min(p,q,r) = 2,
/// which would put a weight-1 curve in the cycle.
CuspCycle dual_cycle(const TriplePQR& t);

/// Relation matrix [[p-1,-1,-1],[-1,q-1,-1],[-1,-1,r-1]] of the abelianized
/// group <l, m, n | l^p = m^q = n^r = lmn>.
IntMatrix relation_matrix(const TriplePQR& t);

/// Smith decomposition of the abelianization (divisors only, no claim about
/// how it matches any other presentation of the same group).
AbGroup abelianized_group(const TriplePQR& t);

/// Order of abelianized_group(t); equals pqr - pq - qr - rp.
Integer group_order(const TriplePQR& t);

/// x^p+y^q+z^r+xyz = t with t fixed by the group.
EquationRecord smoothing_record(const TriplePQR& t);

}  // namespace slc
