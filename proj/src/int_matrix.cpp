#include "coxlab/int_matrix.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "coxlab/error.hpp"

namespace coxlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  return (*this)(r, c);
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  return (*this)(r, c);
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  if (c >= cols_) throw InvalidArgument("column index out of range");
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, std::span<const Integer> v) {
  if (c >= cols_ || v.size() != rows_) throw InvalidArgument("column shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) throw InvalidArgument("vector length does not match matrix columns");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) && sgn(v[c])) acc += (*this)(r, c) * v[c];
    out[r] = std::move(acc);
  }
  return out;
}

bool IntMatrix::is_scalar_identity(int sign) const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Integer& x = (*this)(r, c);
      if (r == c ? x != sign : sgn(x) != 0) return false;
    }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  // i-k-j order; incidence matrices are mostly zeros so skipping pays.
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (sgn(y)) mpz_addmul(out(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Bareiss on machine words; nullopt when an intermediate leaves int64.
std::optional<std::int64_t> det_int64(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::int64_t> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Integer& x = m(i / n, i % n);
    if (!x.fits_slong_p()) return std::nullopt;
    a[i] = x.get_si();
  }
  auto A = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * n + c]; };
  std::int64_t prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && A(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(A(p, c), A(k, c));
      sign = -sign;
    }
    const std::int64_t piv = A(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::int64_t lead = A(i, k);
      if (lead == 0 && piv == prev) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(A(i, j)) * piv - static_cast<__int128>(lead) * A(k, j);
        v /= prev;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
          return std::nullopt;
        A(i, j) = static_cast<std::int64_t>(v);
      }
      A(i, k) = 0;
    }
    prev = piv;
  }
  return sign * A(n - 1, n - 1);
}

Integer det_mpz(IntMatrix a) {
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      sign = -sign;
    }
    const Integer piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer lead = a(i, k);
      if (sgn(lead) == 0 && piv == prev) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * piv - lead * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = piv;
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  if (auto d = det_int64(m)) return Integer(static_cast<long>(*d));
  return det_mpz(m);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Integer piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(i, j) * piv - lead * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

std::vector<Integer> char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<Integer> coeff(n + 1);
  coeff[0] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeff[k - 1];
    IntMatrix am = m * next;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    coeff[k] = -q;
    mk = std::move(next);
  }
  return coeff;
}

bool has_integer_solution(const IntMatrix& m, std::span<const Integer> b) {
  if (!m.is_square() || b.size() != m.rows()) throw InvalidArgument("solve shape mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw InvalidArgument("solve on a singular matrix");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class x = a[i][n] / a[i][i];
    x.canonicalize();
    if (x.get_den() != 1) return false;
  }
  return true;
}

}  // namespace coxlab
