#pragma once

// The order-72 group G acting on k[x1, y1, x2, y2] and its invariants in
// degree 6 and in the second exterior power of the standard representation.
// Coefficients live in Q(zeta6), so every computation is exact.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "slc/cyclotomic.hpp"

namespace slc {

/// Monomial matrix acting on the variables (x1, y1, x2, y2) = v0..v3:
/// v_i -> zeta^twist[i] * v_perm[i].
struct GroupElement {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> twist{0, 0, 0, 0};  ///< exponents of zeta, mod 6

  /// (g * h)(v) = g(h(v))
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// (zeta x1, zeta^-1 y1, x2, y2), (x1, y1, zeta x2, zeta^-1 y2) and the swap
/// (x1, y1, x2, y2) -> (x2, y2, x1, y1).
std::vector<GroupElement> sextic_group_generators();

/// Closure of the generators under composition.
std::vector<GroupElement> generate_group(const std::vector<GroupElement>& generators);

/// Exponent vector of x1^a y1^b x2^c y2^d.
using Monomial = std::array<int, 4>;
using Polynomial = std::map<Monomial, Cyclotomic6>;

/// All monomials of the given degree in four variables, lexicographically
/// descending (x1^d first).
std::vector<Monomial> monomials(int degree);

/// g acting by substitution.
Polynomial act(const GroupElement& g, const Polynomial& p);

/// (1/|G|) sum_g g.p
Polynomial reynolds(const std::vector<GroupElement>& group, const Polynomial& p);

bool is_invariant(const std::vector<GroupElement>& generators, const Polynomial& p);

/// "x1^6+x2^6"-style rendering with coefficients in Q(zeta6).
std::string to_string(const Polynomial& p);

struct InvariantBasis {
  std::size_t dimension = 0;
  std::vector<std::string> names;
  std::vector<Polynomial> basis;
};

/// Fixed subspace of G on the 84 sextic monomials. The dimension comes from
/// row-reducing the Reynolds images of all monomials; the returned basis
/// {x1^6+x2^6, y1^6+y2^6, Q+^3, Q+Q-^2} (Q+- = x1y1 +- x2y2) is checked to
/// be invariant, independent and of that size.
InvariantBasis invariant_sextic_basis();

/// Rank over Q(zeta6) of a family of vectors indexed by a common key.
template <class Key>
std::size_t rank(const std::vector<std::map<Key, Cyclotomic6>>& vectors);

/// Wedge e_i ^ e_j, i < j, with e_i dual to the coordinate v_i.
using Wedge = std::array<int, 2>;
using TwoForm = std::map<Wedge, Cyclotomic6>;

TwoForm act(const GroupElement& g, const TwoForm& w);

struct TwoFormInvariants {
  std::size_t dimension = 0;
  std::vector<TwoForm> basis;  ///< reduced echelon basis of the fixed space
};

/// Fixed subspace of the given group on Lambda^2 of the standard
/// representation. With the full group: spanned by e1^e2 + e3^e4.
TwoFormInvariants invariant_two_forms(const std::vector<GroupElement>& group);
TwoFormInvariants invariant_two_forms();

std::string to_string(const TwoForm& w);

}  // namespace slc
