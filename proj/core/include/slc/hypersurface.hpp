#pragma once

// Smooth degree-d surfaces S in P^3: numerical invariants and the
// cohomology of T_S, obtained by chasing the long exact sequences of
//   0 -> O(k) -> O(k+1)^4 -> T_P3(k) -> 0           (Euler)
//   0 -> O_P3 -> O_P3(d) -> N_S = O_S(d) -> 0
//   0 -> T_P3(-d) -> T_P3 -> T_P3|_S -> 0
//   0 -> T_S -> T_P3|_S -> N_S -> 0
// with only exactness, vanishing and the injectivity of multiplication maps.

#include <string>
#include <vector>

#include "slc/exact_sequence.hpp"

namespace slc {

struct CohomologyTable {
  std::string sheaf;
  std::vector<long> dims;  ///< h^0, h^1, ...
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Twists accepted by the P^3 routines; keeps every dimension in range.
inline constexpr long kMaxTwist = 100'000;

/// H^i(P^3, O(k)): h^0 = C(k+3,3), h^3 = C(-k-1,3), h^1 = h^2 = 0.
CohomologyTable line_bundle_cohomology_p3(long k);

/// The twisted Euler sequence as a solved exact sequence
/// (H^i(O(k)), H^i(O(k+1)^4), H^i(T(k))) for i = 0..3.
ExactSequence euler_sequence_p3(long k);

/// H^i(P^3, T_P3(k)) read off euler_sequence_p3(k).
CohomologyTable tangent_p3_cohomology(long k);

struct SurfaceInvariants {
  long K2;
  long e;
  long chi;
  long pg;
  long q;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// K^2 = d(d-4)^2, e = d^3 - 4d^2 + 6d, p_g = C(d-1,3), q = 0,
/// chi = (K^2 + e)/12. Throws InvalidArgument for d < 1 or d > kMaxTwist.
SurfaceInvariants surface_invariants(long d);

/// The three solved sequences behind tangent_cohomology(d).
struct TangentChase {
  ExactSequence normal;      ///< O_P3 -> O_P3(d) -> N_S
  ExactSequence restricted;  ///< T(-d) -> T -> T|_S
  ExactSequence tangent;     ///< T_S -> T|_S -> N_S
  CohomologyTable result;    ///< (h^0, h^1, h^2) of T_S
};

/// Throws DegreeTooSmall for d < 5 (h^0(T_S) = 0 needs general type) and
/// AmbiguousRank if some dimension were not forced.
TangentChase tangent_cohomology_chase(long d);

/// (0, h^1, h^2) of T_S; h^1 - h^2 = 10 chi - 2 K^2 is checked.
CohomologyTable tangent_cohomology(long d);

/// 10 chi - 2 K^2
long virtual_dimension(long K2, long chi);

}  // namespace slc
