#include "slc/cyclic_quotient.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>
#include <tuple>

#include "slc/error.hpp"

namespace slc {

std::string CyclicQuotient::to_string() const {
  return "1/" + std::to_string(m_) + "(1," + std::to_string(q_) + ")";
}

long mod_inverse(long x, long m) {
  long r0 = m, r1 = ((x % m) + m) % m;
  long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) {
    throw Error(ErrorCode::NotCoprime,
                std::to_string(x) + " is not a unit modulo " + std::to_string(m));
  }
  return ((t0 % m) + m) % m;
}

CyclicQuotient normalize(long m, long q_raw, std::optional<long> p_raw) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "cyclic quotient needs m >= 2");
  long q = ((q_raw % m) + m) % m;
  if (std::gcd(q, m) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(m) + ", " + std::to_string(q_raw) + ") != 1");
  }
  if (p_raw) {
    const long p = ((*p_raw % m) + m) % m;
    if (std::gcd(p, m) != 1) {
      throw Error(ErrorCode::NotCoprime,
                  "gcd(" + std::to_string(m) + ", " + std::to_string(*p_raw) + ") != 1");
    }
    q = mpz_class(mpz_class(q) * mod_inverse(p, m) % m).get_si();
  }
  return CyclicQuotient(m, std::min(q, mod_inverse(q, m)));
}

bool is_rdp(const CyclicQuotient& c) { return c.q() == c.m() - 1; }

std::optional<ClassTWitness> class_t_witness(const CyclicQuotient& c) {
  if (is_rdp(c)) return std::nullopt;
  const long m = c.m();
  for (long n = 2; n * n <= m; ++n) {
    if (m % (n * n) != 0) continue;
    const long d = m / (n * n);
    for (long a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      if (normalize(m, d * n * a - 1) == c) return ClassTWitness{d, n, a};
    }
  }
  return std::nullopt;
}

namespace {

ClassTWitness require_class_t(const CyclicQuotient& c) {
  auto w = class_t_witness(c);
  if (!w) throw Error(ErrorCode::NotClassT, c.to_string() + " is not of class T");
  return *w;
}

}  // namespace

bool is_wahl(const CyclicQuotient& c) {
  if (is_rdp(c)) return false;
  return require_class_t(c).d == 1;
}

long index(const CyclicQuotient& c) {
  if (is_rdp(c)) return 1;
  return require_class_t(c).n;
}

CoverDescriptor index_one_cover(const CyclicQuotient& c) {
  if (is_rdp(c)) return {c, c.m() - 1};
  const ClassTWitness w = require_class_t(c);
  const long r = w.d * w.n;
  return {normalize(r, r - 1), r - 1};
}

std::vector<ClassTEntry> enumerate_class_t(long max_m) {
  if (max_m < 4) throw Error(ErrorCode::InvalidArgument, "enumeration bound must be >= 4");

  auto scan = [](long lo, long hi) {
    std::vector<ClassTEntry> out;
    for (long m = lo; m <= hi; ++m) {
      for (long q = 1; q < m; ++q) {
        if (std::gcd(q, m) != 1) continue;
        CyclicQuotient c = normalize(m, q);
        if (c.q() != q) continue;  // visit each normalized class once
        if (auto w = class_t_witness(c)) out.push_back({c, *w});
      }
    }
    return out;
  };

  // Independent ranges of m; concatenating in range order keeps the output
  // sorted by (m, q) whatever order the workers finish in.
  const long workers = std::clamp<long>(std::thread::hardware_concurrency(), 1, 16);
  const long span = max_m - 3;
  const long chunk = std::max<long>(64, (span + workers - 1) / workers);
  std::vector<std::future<std::vector<ClassTEntry>>> parts;
  for (long lo = 4; lo <= max_m; lo += chunk) {
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(max_m, lo + chunk - 1)));
  }
  std::vector<ClassTEntry> out;
  for (auto& part : parts) {
    auto v = part.get();
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  }
  return out;
}

}  // namespace slc
