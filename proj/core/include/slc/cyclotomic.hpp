#pragma once

// Exact arithmetic in Q(zeta) for zeta a primitive 6th root of unity.
// Elements are a + b*zeta with rational a, b; zeta^2 = zeta - 1.

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace slc {

class Cyclotomic6 {
 public:
  Cyclotomic6() = default;
  Cyclotomic6(mpq_class a, mpq_class b = 0) : a_(std::move(a)), b_(std::move(b)) {  // NOLINT
    a_.canonicalize();
    b_.canonicalize();
  }

  /// zeta^k for any integer k.
  static Cyclotomic6 zeta_pow(long k);

  const mpq_class& real_part() const noexcept { return a_; }
  const mpq_class& zeta_part() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Complex conjugate (zeta -> zeta^-1 = 1 - zeta).
  Cyclotomic6 conj() const { return {a_ + b_, -b_}; }
  /// a^2 + ab + b^2
  mpq_class norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }
  /// Throws InvalidArgument for zero.
  Cyclotomic6 inverse() const;

  Cyclotomic6& operator+=(const Cyclotomic6& o);
  Cyclotomic6& operator-=(const Cyclotomic6& o);
  Cyclotomic6& operator*=(const Cyclotomic6& o);

  friend Cyclotomic6 operator+(Cyclotomic6 x, const Cyclotomic6& y) { return x += y; }
  friend Cyclotomic6 operator-(Cyclotomic6 x, const Cyclotomic6& y) { return x -= y; }
  friend Cyclotomic6 operator*(Cyclotomic6 x, const Cyclotomic6& y) { return x *= y; }
  friend Cyclotomic6 operator-(const Cyclotomic6& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const Cyclotomic6& x, const Cyclotomic6& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic6& x) {
    return os << x.to_string();
  }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

}  // namespace slc
