#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coxlab {

using Integer = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  /// Bounds-checked access.
  Integer& at(std::size_t r, std::size_t c);
  const Integer& at(std::size_t r, std::size_t c) const;

  Integer& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Integer> v);

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  std::vector<Integer> apply(std::span<const Integer> v) const;

  /// True iff this equals sign * I.
  bool is_scalar_identity(int sign) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Exact rank over the rationals by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Characteristic polynomial det(xI - m), leading coefficient first.
std::vector<Integer> char_poly(const IntMatrix& m);

/// Solves m x = b over the rationals for square non-singular m and reports
/// whether the solution is integral.
bool has_integer_solution(const IntMatrix& m, std::span<const Integer> b);

}  // namespace coxlab
