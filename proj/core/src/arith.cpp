#include "slc/arith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "slc/error.hpp"

namespace slc {

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

Mat2 mat2_chain(std::span<const Mat2> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::InvalidArgument, "mat2_chain: empty factor list");
  }
  Mat2 out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = out * factors[i];
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::InvalidMatrix, "matrix must be nonempty");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::InvalidMatrix, "matrix must be nonempty");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidMatrix, "ragged matrix rows");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::InvalidMatrix, "matrix must be nonempty");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidMatrix, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix::IntMatrix(const Mat2& m) : rows_(2), cols_(2), data_{m.a, m.b, m.c, m.d} {}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidMatrix, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidMatrix, "minors of non-square matrix");
  std::vector<Integer> out;
  out.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(determinant(sub));
  }
  return out;
}

namespace {

// Elementary-operation Smith reduction. Pivot = entry of least absolute value
// in the trailing block; repeat until the pivot divides its row, its column
// and the whole trailing block.
void smith_reduce(IntMatrix& a, std::vector<Integer>& diag) {
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return;  // trailing block is zero
      if (pi != t)
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
      if (pj != t)
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility on the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a(t, t)));
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix work = m;
  SmithForm out;
  smith_reduce(work, out.divisors);
  out.rank = out.divisors.size();
  return out;
}

AbGroup::AbGroup(std::size_t free_rank, std::vector<Integer> divisors)
    : free_rank_(free_rank), divisors_(std::move(divisors)) {
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (divisors_[i] < 2) {
      throw Error(ErrorCode::InvalidArgument, "abelian group divisor must be >= 2");
    }
    if (i > 0 && !mpz_divisible_p(divisors_[i].get_mpz_t(), divisors_[i - 1].get_mpz_t())) {
      throw Error(ErrorCode::InvalidArgument, "abelian group divisors must form a chain");
    }
  }
}

Integer AbGroup::torsion_order() const {
  Integer out = 1;
  for (const auto& d : divisors_) out *= d;
  return out;
}

std::string AbGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank_ == 1) {
    sep();
    os << "Z";
  } else if (free_rank_ > 1) {
    sep();
    os << "Z^" << free_rank_;
  }
  for (const auto& d : divisors_) {
    sep();
    os << "Z/" << d;
  }
  if (first) os << "0";
  return os.str();
}

AbGroup cokernel_torsion(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::vector<Integer> torsion;
  for (auto& d : snf.divisors)
    if (d > 1) torsion.push_back(d);
  return AbGroup(m.rows() - snf.rank, std::move(torsion));
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace slc
