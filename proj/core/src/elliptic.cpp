#include "slc/elliptic.hpp"

#include <algorithm>
#include <string>

#include "slc/error.hpp"

namespace slc {

SimpleElliptic::SimpleElliptic(long d) : d_(d) {
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "simple elliptic degree must be >= 1, got " + std::to_string(d));
  }
}

long embedded_dimension(const SimpleElliptic& s) { return std::max(3L, s.degree()); }

bool is_lci(const SimpleElliptic& s) { return s.degree() <= 4; }

bool is_smoothable(const SimpleElliptic& s) { return s.degree() >= 1 && s.degree() <= 9; }

bool has_lci_smoothing_lifting(const SimpleElliptic& s) {
  const long d = s.degree();
  return is_smoothable(s) && (d < 5 || d > 7);
}

}  // namespace slc
