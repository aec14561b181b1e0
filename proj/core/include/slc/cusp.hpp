#pragma once

// Cusp resolution cycles.
//
// Sign convention: a cycle (e_1, ..., e_k) stores the magnitudes of the
// self-intersections -e_1, ..., -e_k of the exceptional rational curves.
// Cycles are read cyclically; equality is up to rotation and reflection and is
// always tested on canonical forms.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slc/arith.hpp"

namespace slc {

class CuspCycle {
 public:
  /// Throws InvalidCycle if the list is empty, an entry is < 2, or every
  /// entry equals 2.
  explicit CuspCycle(std::vector<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t length() const noexcept { return entries_.size(); }
  /// Sum of (e_i - 2).
  long excess() const noexcept;

  /// Comma-separated magnitudes, e.g. "2,4,2,2,5".
  std::string to_string() const;

  friend bool operator==(const CuspCycle&, const CuspCycle&) = default;
  friend auto operator<=>(const CuspCycle&, const CuspCycle&) = default;

 private:
  std::vector<int> entries_;
};

/// (m, n): an entry m >= 3 followed by a run of n twos.
struct Block {
  int m;
  long n;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Block decomposition of the rotation of c that starts at its first entry
/// >= 3. Expanding the blocks reproduces that rotation.
std::vector<Block> block_form(const CuspCycle& c);
CuspCycle expand_blocks(std::span<const Block> blocks);

/// Lexicographically least sequence among all rotations of c and of its
/// reversal.
CuspCycle canonicalize(const CuspCycle& c);

/// Monodromy of the link: M(e_k) ... M(e_1) with M(e) = [[0,-1],[1,e]].
Mat2 monodromy(const CuspCycle& c);

/// Dual cusp: every block (m, n) becomes (n + 3, m - 3), block order reversed,
/// result canonicalized.
CuspCycle dual(const CuspCycle& c);

/// Sum (e_i - 2) <= 4, i.e. the dual cycle has length <= 4.
bool is_complete_intersection(const CuspCycle& c);

/// Torsion of H_1 of the link: torsion of coker(A - I). The free part of
/// H_1 (one copy of Z) is not included in the returned group.
AbGroup link_torsion(const CuspCycle& c);

struct LciCover {
  Integer trace;
  CuspCycle cover;
};

/// Largest cover cycle lci_discriminant_cover will materialize.
inline constexpr long kMaxCoverLength = 10'000'000;

/// Discriminant cover by a hypersurface cusp: t = tr(monodromy(c)) and the
/// cover is the dual of the one-vertex cycle (t), i.e. (3, 2^(t-3)).
/// Throws TraceTooSmall when t < 3 and CoverTooLarge when t - 2 exceeds
/// kMaxCoverLength.
LciCover lci_discriminant_cover(const CuspCycle& c);

/// Plain-text consistency report for the discriminant data of c: monodromy,
/// trace, det(A - I), link torsion via Smith form, and the length and
/// torsion of the lci cover. Used to document where the order |2 - t| and
/// the trace t are easily confused.
std::string discriminant_report(const CuspCycle& c);

}  // namespace slc
