#pragma once

// Test-side reference implementations. Each one computes the same quantity
// as a library routine by a different method, so agreement is evidence and
// not a tautology. None of them call into slc except for value types.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<mpz_class>>;

/// Cofactor expansion along the first row. Exponential; keep n <= 8.
inline mpz_class laplace_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  mpz_class out = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const mpz_class term = m[0][j] * laplace_det(minor);
    out += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return out;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Invariant factors via determinantal divisors: D_k = gcd of all k x k
/// minors, d_k = D_k / D_{k-1}. Returns the nonzero d_k (so the rank is the
/// size of the result).
inline std::vector<mpz_class> determinantal_invariant_factors(const Matrix& m) {
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
        Matrix sub(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        mpz_class d = laplace_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Minimum over all rotations of the sequence and of its reversal, by
/// listing every candidate.
inline std::vector<int> brute_canonical(const std::vector<int>& e) {
  std::vector<int> best = e;
  std::vector<int> rev(e.rbegin(), e.rend());
  for (const std::vector<int>* s : {&e, static_cast<const std::vector<int>*>(&rev)}) {
    for (std::size_t r = 0; r < s->size(); ++r) {
      std::vector<int> cand(s->begin() + static_cast<long>(r), s->end());
      cand.insert(cand.end(), s->begin(), s->begin() + static_cast<long>(r));
      best = std::min(best, cand);
    }
  }
  return best;
}

/// Dual cusp by the Riemenschneider point diagram. Row i carries e_i - 1
/// dots and starts in the column where row i-1 ended. Laid out over several
/// periods of the cycle, the dual entries are (dots in column) + 1; one
/// period is sum(e_i - 2) columns.
inline std::vector<int> dot_diagram_dual(const std::vector<int>& e) {
  long period = 0;
  for (int x : e) period += x - 2;
  const int reps = 4;
  std::map<long, int> column_count;
  long col = 0;
  for (int r = 0; r < reps; ++r) {
    for (int x : e) {
      for (int k = 0; k < x - 1; ++k) ++column_count[col + k];
      col += x - 2;
    }
  }
  // Columns in the second period are unaffected by the ragged ends.
  std::vector<int> dual;
  for (long c = period; c < 2 * period; ++c) dual.push_back(column_count[c] + 1);
  return brute_canonical(dual);
}

/// All canonical cusp cycles with sum(e_i) <= max_sum.
inline std::vector<std::vector<int>> canonical_cycles(int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (!cur.empty() && std::any_of(cur.begin(), cur.end(), [](int x) { return x >= 3; }) &&
        brute_canonical(cur) == cur) {
      out.push_back(cur);
    }
    for (int x = 2; x <= remaining; ++x) {
      cur.push_back(x);
      rec(remaining - x);
      cur.pop_back();
    }
  };
  rec(max_sum);
  return out;
}

/// Monodromy by direct 2x2 integer recursion on (column) vectors: track the
/// images of the basis vectors under v -> M(e) v in plain mpz arithmetic.
inline std::array<mpz_class, 4> monodromy(const std::vector<int>& e) {
  mpz_class a = 1, b = 0, c = 0, d = 1;
  for (int x : e) {
    // [[0,-1],[1,x]] * [[a,b],[c,d]]
    mpz_class na = -c, nb = -d, nc = a + x * c, nd = b + x * d;
    a = na, b = nb, c = nc, d = nd;
  }
  return {a, b, c, d};
}

/// Cohomology of the twisted tangent bundle of P^3 by Bott's formula,
/// through T(k) = Omega^2(k + 4):
///   h^0(Omega^p(j)) = C(j + n - p, j) C(j - 1, p) for j > p,
///   h^p(Omega^p) = 1,
///   h^n(Omega^p(j)) = h^0(Omega^(n-p)(-j)),
/// everything else zero (n = 3).
inline mpz_class binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline mpz_class bott_h0(int p, long j) {
  const int n = 3;
  if (p == 0) return binom(j + n, n);
  if (j <= p) return 0;
  return binom(j + n - p, j) * binom(j - 1, p);
}

inline std::array<long, 4> bott_tangent(long k) {
  const int p = 2;
  const long j = k + 4;
  std::array<long, 4> h{0, 0, 0, 0};
  h[0] = bott_h0(p, j).get_si();
  if (j == 0) h[p] = 1;
  h[3] = bott_h0(3 - p, -j).get_si();
  return h;
}

/// Trace of a monomial matrix (permutation pi, twists t) on polynomials of
/// the given degree, expressed as counts of each power of zeta6.
struct MonomialMatrix {
  std::array<int, 4> perm;
  std::array<int, 4> twist;
};

/// The 72 elements (x1,y1,x2,y2) -> (z^i x1, z^-i y1, z^j x2, z^-j y2),
/// optionally followed by the swap of the two pairs, listed directly.
inline std::vector<MonomialMatrix> sextic_group_elements() {
  std::vector<MonomialMatrix> out;
  for (int swap = 0; swap < 2; ++swap)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        MonomialMatrix g;
        g.perm = swap ? std::array<int, 4>{2, 3, 0, 1} : std::array<int, 4>{0, 1, 2, 3};
        g.twist = {i, (6 - i) % 6, j, (6 - j) % 6};
        out.push_back(g);
      }
  return out;
}

/// Sum over k of counts[k] zeta^k reduced to a + b zeta with integer a, b,
/// using zeta^2 = zeta - 1, zeta^3 = -1.
inline std::array<long, 2> reduce_zeta(const std::array<long, 6>& counts) {
  static const long re[6] = {1, 0, -1, -1, 0, 1};
  static const long im[6] = {0, 1, 1, 0, -1, -1};
  std::array<long, 2> out{0, 0};
  for (int k = 0; k < 6; ++k) {
    out[0] += counts[static_cast<std::size_t>(k)] * re[k];
    out[1] += counts[static_cast<std::size_t>(k)] * im[k];
  }
  return out;
}

/// Dimension of invariants in degree d by character averaging.
inline mpq_class averaged_invariant_dimension(int degree) {
  std::array<long, 6> counts{};
  const auto group = sextic_group_elements();
  for (const auto& g : group) {
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b)
        for (int c = 0; a + b + c <= degree; ++c) {
          const std::array<int, 4> m{a, b, c, degree - a - b - c};
          std::array<int, 4> img{0, 0, 0, 0};
          int phase = 0;
          for (std::size_t i = 0; i < 4; ++i) {
            img[static_cast<std::size_t>(g.perm[i])] += m[i];
            phase += m[i] * g.twist[i];
          }
          if (img == m) ++counts[static_cast<std::size_t>(phase % 6)];
        }
  }
  const auto z = reduce_zeta(counts);
  if (z[1] != 0) return -1;  // a nonreal average signals a bug
  mpq_class out(z[0], static_cast<long>(group.size()));
  out.canonicalize();
  return out;
}

/// Dimension of invariants on Lambda^2 by averaging (tr(g)^2 - tr(g^2)) / 2.
inline mpq_class averaged_two_form_dimension(const std::vector<MonomialMatrix>& group) {
  // Work with zeta-power counts; tr(g)^2 and tr(g^2) are sums of powers.
  std::array<long, 6> twice{};
  for (const auto& g : group) {
    std::vector<int> diag;  // phases of fixed coordinates
    for (std::size_t i = 0; i < 4; ++i)
      if (g.perm[i] == static_cast<int>(i)) diag.push_back(g.twist[i]);
    for (int x : diag)
      for (int y : diag) ++twice[static_cast<std::size_t>((x + y) % 6)];
    // g^2 sends v_i to zeta^(t_i + t_perm(i)) v_perm(perm(i)).
    for (std::size_t i = 0; i < 4; ++i) {
      const auto j = static_cast<std::size_t>(g.perm[i]);
      if (static_cast<std::size_t>(g.perm[j]) == i) --twice[static_cast<std::size_t>((g.twist[i] + g.twist[j]) % 6)];
    }
  }
  const auto z = reduce_zeta(twice);
  if (z[1] != 0) return -1;
  mpq_class out(z[0], 2 * static_cast<long>(group.size()));
  out.canonicalize();
  return out;
}

/// Deterministic generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Matrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    Matrix m(rows, std::vector<mpz_class>(cols));
    for (auto& r : m)
      for (auto& x : r) x = uniform(lo, hi);
    return m;
  }
  std::vector<int> cycle(std::size_t max_len, int max_entry) {
    std::vector<int> e(static_cast<std::size_t>(uniform(1, static_cast<long>(max_len))));
    for (auto& x : e) x = static_cast<int>(uniform(2, max_entry));
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 2; })) e[0] = 3;
    return e;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
