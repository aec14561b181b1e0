#pragma once

// Simple elliptic singularities, keyed by the degree d = -A.A of the
// exceptional elliptic curve of the minimal resolution.

namespace slc {

class SimpleElliptic {
 public:
  /// Throws InvalidArgument for d < 1.
  explicit SimpleElliptic(long d);
  long degree() const noexcept { return d_; }

 private:
  long d_;
};

/// max(3, d)
long embedded_dimension(const SimpleElliptic& s);
/// d <= 4
bool is_lci(const SimpleElliptic& s);
/// 1 <= d <= 9
bool is_smoothable(const SimpleElliptic& s);
/// d in {1, 2, 3, 4, 8, 9}
bool has_lci_smoothing_lifting(const SimpleElliptic& s);

}  // namespace slc
