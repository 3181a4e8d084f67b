#include "iwk/int_matrix.hpp"

#include "iwk/error.hpp"

namespace iwk {
namespace {

// Fraction-free row echelon form in place; returns the rank. `sign` tracks
// row swaps so that the last pivot is the determinant of a square input.
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
      sign = -sign;
    }
    const mpz_class& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = a[i * cols + j];
        x *= pivot;
        mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), a[r * cols + j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

void IntMatrix::append_column(const std::vector<mpz_class>& column) {
  if (rows_ == 0 && cols_ == 0) rows_ = column.size();
  if (column.size() != rows_) throw Error(ErrorKind::InvalidInput, "column length does not match row count");
  std::vector<mpz_class> next(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) next[i * (cols_ + 1) + j] = std::move(data_[i * cols_ + j]);
    next[i * (cols_ + 1) + cols_] = column[i];
  }
  data_ = std::move(next);
  ++cols_;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (cols_ == 0) return other;
  if (other.cols_ == 0) return *this;
  if (other.rows_ != rows_) throw Error(ErrorKind::InvalidInput, "hstack row counts differ");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

IntMatrix IntMatrix::reduced(const mpz_class& modulus) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

std::size_t IntMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<mpz_class> a = data_;
  int sign = 1;
  return bareiss(a, rows_, cols_, sign);
}

mpz_class IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  if (rows_ == 0) return 1;
  std::vector<mpz_class> a = data_;
  int sign = 1;
  if (bareiss(a, rows_, cols_, sign) < rows_) return 0;
  mpz_class d = a[rows_ * cols_ - 1];
  return sign < 0 ? mpz_class(-d) : d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
    }
  }
  return out;
}

}  // namespace iwk
