#include "slc/cusp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slc/error.hpp"

namespace slc {

CuspCycle::CuspCycle(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidCycle, "cusp cycle is empty");
  for (int e : entries_) {
    if (e < 2) {
      throw Error(ErrorCode::InvalidCycle,
                  "cusp cycle entry " + std::to_string(e) + " < 2");
    }
  }
  if (std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 2; })) {
    throw Error(ErrorCode::InvalidCycle, "cusp cycle needs an entry >= 3 (all -2 is not a cusp)");
  }
}

long CuspCycle::excess() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0L,
                         [](long acc, int e) { return acc + (e - 2); });
}

std::string CuspCycle::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  return os.str();
}

std::vector<Block> block_form(const CuspCycle& c) {
  const auto e = c.entries();
  const std::size_t k = e.size();
  const std::size_t start =
      static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](int x) { return x >= 3; }) - e.begin());
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < k; ++i) {
    int x = e[(start + i) % k];
    if (x >= 3) {
      blocks.push_back({x, 0});
    } else {
      ++blocks.back().n;
    }
  }
  return blocks;
}

CuspCycle expand_blocks(std::span<const Block> blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) {
    out.push_back(b.m);
    out.insert(out.end(), static_cast<std::size_t>(b.n), 2);
  }
  return CuspCycle(std::move(out));
}

namespace {

// Index of the lexicographically least rotation (Booth's algorithm).
std::size_t least_rotation(std::span<const int> s) {
  const std::size_t n = s.size();
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    int sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

std::vector<int> rotated(std::span<const int> s, std::size_t start) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[(start + i) % s.size()];
  return out;
}

}  // namespace

CuspCycle canonicalize(const CuspCycle& c) {
  const auto e = c.entries();
  std::vector<int> rev(e.rbegin(), e.rend());
  auto fwd = rotated(e, least_rotation(e));
  auto bwd = rotated(rev, least_rotation(rev));
  return CuspCycle(std::min(fwd, bwd));
}

Mat2 monodromy(const CuspCycle& c) {
  // Accumulate from the right so factor e_k ends up leftmost.
  Mat2 a = Mat2::identity();
  for (int e : c.entries()) a = Mat2::cusp_factor(e) * a;
  return a;
}

CuspCycle dual(const CuspCycle& c) {
  auto blocks = block_form(c);
  std::vector<Block> mapped;
  mapped.reserve(blocks.size());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    mapped.push_back({static_cast<int>(it->n + 3), static_cast<long>(it->m - 3)});
  }
  return canonicalize(expand_blocks(mapped));
}

bool is_complete_intersection(const CuspCycle& c) { return c.excess() <= 4; }

AbGroup link_torsion(const CuspCycle& c) {
  Mat2 a = monodromy(c);
  AbGroup g = cokernel_torsion(IntMatrix(a - Mat2::identity()));
  return AbGroup(0, g.divisors());
}

LciCover lci_discriminant_cover(const CuspCycle& c) {
  Integer t = monodromy(c).trace();
  if (t < 3) {
    throw Error(ErrorCode::TraceTooSmall, "monodromy trace " + t.get_str() + " < 3");
  }
  if (t - 2 > kMaxCoverLength) {
    throw Error(ErrorCode::CoverTooLarge,
                "cover cycle would have length " + Integer(t - 2).get_str());
  }
  const long weight = t.get_si();
  // dual of the single vertex (t) is (3, 2^(t-3)); go through dual() so the
  // block rule stays the single source of truth.
  CuspCycle cover = weight <= 3 ? CuspCycle({static_cast<int>(weight)})
                                : dual(CuspCycle({static_cast<int>(weight)}));
  return {std::move(t), std::move(cover)};
}

std::string discriminant_report(const CuspCycle& c) {
  const Mat2 a = monodromy(c);
  const Integer t = a.trace();
  const Integer det_am1 = (a - Mat2::identity()).det();
  const AbGroup torsion = link_torsion(c);

  std::ostringstream os;
  os << "cycle: " << c.to_string() << "\n";
  os << "monodromy A: " << a << "\n";
  os << "trace t = tr(A): " << t << "\n";
  os << "det(A - I) = 2 - t: " << det_am1 << "\n";
  os << "link torsion, Smith form of A - I: " << torsion.to_string()
     << ", order " << torsion.torsion_order() << "\n";

  LciCover cov = lci_discriminant_cover(c);
  const long w = t.get_si();
  const long twos = static_cast<long>(std::count(cov.cover.entries().begin(),
                                                 cov.cover.entries().end(), 2));
  os << "one-vertex cycle: (" << w << ")\n";
  if (w >= 4) {
    const AbGroup vertex_torsion = link_torsion(CuspCycle({static_cast<int>(w)}));
    os << "torsion of (" << w << "): " << vertex_torsion.to_string() << ", order "
       << vertex_torsion.torsion_order() << "\n";
  }
  os << "lci cover: dual of (" << w << ") = (3, 2^" << twos << "), length "
     << cov.cover.length() << ", excess " << cov.cover.excess()
     << ", complete intersection: " << (is_complete_intersection(cov.cover) ? "yes" : "no")
     << "\n";

  const Integer order = abs(det_am1);
  const bool consistent = torsion.torsion_order() == order &&
                          Integer(static_cast<long>(cov.cover.length())) == order;
  os << "consistency: |det(A - I)| = " << order << ", Smith order = "
     << torsion.torsion_order() << ", cover length = t - 2 = " << cov.cover.length()
     << (consistent ? " (all agree)" : " (MISMATCH)") << "\n";
  os << "note: t = " << t << " is the weight of the one-vertex cover, not the discriminant"
     << " order; the order is |2 - t| = " << order << ", and the cover has t - 3 = " << twos
     << " vertices of weight -2 plus one of weight -3, " << cov.cover.length()
     << " in total.\n";
  return os.str();
}

}  // namespace slc
