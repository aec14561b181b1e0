#pragma once

// Two-dimensional cyclic quotient singularities 1/m(1, q) and the class-T
// family 1/(d n^2)(1, d n a - 1), gcd(a, n) = 1.

#include <optional>
#include <string>
#include <vector>

namespace slc {

/// 1/m(1, q) with 0 < q < m, gcd(m, q) = 1, stored with q <= q^-1 mod m so
/// that 1/m(1,q) and 1/m(1,q^-1) (the same singularity) compare equal.
class CyclicQuotient {
 public:
  long m() const noexcept { return m_; }
  long q() const noexcept { return q_; }

  /// "1/m(1,q)"
  std::string to_string() const;

  friend bool operator==(const CyclicQuotient&, const CyclicQuotient&) = default;
  friend auto operator<=>(const CyclicQuotient&, const CyclicQuotient&) = default;

 private:
  friend CyclicQuotient normalize(long, long, std::optional<long>);
  CyclicQuotient(long m, long q) : m_(m), q_(q) {}
  long m_;
  long q_;
};

/// Normalizes 1/m(1, q_raw), or 1/m(p_raw, q_raw) when p_raw is given (the
/// weights are rescaled to (1, q_raw * p_raw^-1 mod m) first).
/// Throws InvalidArgument for m < 2 and NotCoprime for a non-unit weight.
CyclicQuotient normalize(long m, long q_raw, std::optional<long> p_raw = std::nullopt);

/// Inverse of x modulo m; x must be a unit.
long mod_inverse(long x, long m);

/// Only the A_{m-1} singularities 1/m(1, m-1) are cyclic rational double points.
bool is_rdp(const CyclicQuotient& c);

struct ClassTWitness {
  long d;
  long n;
  long a;
  friend bool operator==(const ClassTWitness&, const ClassTWitness&) = default;
};

/// First witness (d, n, a) in lexicographic (n, a) order with m = d n^2,
/// 1 <= a < n, gcd(a, n) = 1 and normalize(m, d n a - 1) == c. None for RDPs
/// and for non-class-T singularities.
std::optional<ClassTWitness> class_t_witness(const CyclicQuotient& c);

/// Class T with d = 1. Throws NotClassT when c is neither class T nor an RDP.
bool is_wahl(const CyclicQuotient& c);

/// n for class T, 1 for an RDP. Throws NotClassT otherwise.
long index(const CyclicQuotient& c);

/// The index-one cover 1/(dn)(1, dn-1) = A_{dn-1}; an RDP is its own cover.
struct CoverDescriptor {
  CyclicQuotient singularity;
  long a_type;  ///< k in A_k
  std::string name() const { return "A_" + std::to_string(a_type); }
};

/// Throws NotClassT when c is neither class T nor an RDP.
CoverDescriptor index_one_cover(const CyclicQuotient& c);

struct ClassTEntry {
  CyclicQuotient singularity;
  ClassTWitness witness;
};

/// Every non-RDP class-T singularity with m <= max_m, sorted by (m, q).
/// Throws InvalidArgument for max_m < 4.
std::vector<ClassTEntry> enumerate_class_t(long max_m);

}  // namespace slc
