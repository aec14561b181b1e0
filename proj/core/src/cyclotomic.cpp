#include "slc/cyclotomic.hpp"

#include "slc/error.hpp"

namespace slc {

Cyclotomic6 Cyclotomic6::zeta_pow(long k) {
  switch (((k % 6) + 6) % 6) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 1};
    case 3: return {-1, 0};
    case 4: return {0, -1};
    default: return {1, -1};
  }
}

Cyclotomic6 Cyclotomic6::inverse() const {
  const mpq_class n = norm();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in Q(zeta6)");
  Cyclotomic6 c = conj();
  return {c.a_ / n, c.b_ / n};
}

Cyclotomic6& Cyclotomic6::operator+=(const Cyclotomic6& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Cyclotomic6& Cyclotomic6::operator-=(const Cyclotomic6& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Cyclotomic6& Cyclotomic6::operator*=(const Cyclotomic6& o) {
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2, z^2 = z - 1
  mpq_class re = a_ * o.a_ - b_ * o.b_;
  mpq_class ze = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
  a_ = std::move(re);
  b_ = std::move(ze);
  return *this;
}

std::string Cyclotomic6::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string out;
  if (a_ != 0) out = a_.get_str() + (b_ > 0 ? "+" : "");
  if (b_ == 1) return out + "z";
  if (b_ == -1) return out + "-z";
  return out + b_.get_str() + "*z";
}

}  // namespace slc
