#include "coxlab/k0lin.hpp"

#include <cstdint>
#include <optional>

#include "coxlab/error.hpp"

namespace coxlab {

IntMatrix zeta_matrix(const Poset& p) {
  const std::size_t n = p.size();
  IntMatrix z(n, n);
  for (Element a = 0; a < n; ++a) p.down_set(a).for_each([&](std::size_t b) { z(b, a) = 1; });
  return z;
}

IntMatrix mobius_matrix(const Poset& p) {
  const std::size_t n = p.size();
  IntMatrix m(n, n);
  // Column a solves Z x = e_a: x_a = 1 and x_b = -sum_{b < c <= a} x_c,
  // filled from a downwards so every x_c is ready when b needs it.
  for (Element a = 0; a < n; ++a) {
    const auto below = p.down_set(a).members();
    m(a, a) = 1;
    for (std::size_t i = below.size() - 1; i-- > 0;) {
      const Element b = below[i];
      Integer s = 0;
      for (std::size_t j = i + 1; j < below.size(); ++j)
        if (p.leq(b, below[j])) s += m(below[j], a);
      m(b, a) = -s;
    }
  }
  return m;
}

IntMatrix coxeter_matrix(const Poset& p) {
  const std::size_t n = p.size();
  const IntMatrix mob = mobius_matrix(p);
  IntMatrix phi(n, n);
  // (Z^T v)[g] = sum over b <= g of v[b]
  for (Element a = 0; a < n; ++a)
    for (Element g = 0; g < n; ++g) {
      Integer s = 0;
      p.down_set(g).for_each([&](std::size_t b) {
        if (sgn(mob(b, a))) s += mob(b, a);
      });
      phi(g, a) = -s;
    }
  return phi;
}

K0Vector projective_class(const Poset& p, Element a) {
  if (a >= p.size()) throw InvalidArgument("element out of range");
  K0Vector v(p.size());
  p.down_set(a).for_each([&](std::size_t b) { v[b] = 1; });
  return v;
}

K0Vector injective_class(const Poset& p, Element a) {
  if (a >= p.size()) throw InvalidArgument("element out of range");
  K0Vector v(p.size());
  for (Element c = a; c < p.size(); ++c)
    if (p.leq(a, c)) v[c] = 1;
  return v;
}

SignedOrder make_signed_order(std::size_t k, int sign) { return {k, sign, sign == 1 ? k : 2 * k}; }

namespace {

using Dense64 = std::vector<std::int64_t>;

std::optional<Dense64> to_int64(const IntMatrix& m) {
  Dense64 out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p()) return std::nullopt;
      out[r * m.cols() + c] = m(r, c).get_si();
    }
  return out;
}

IntMatrix from_int64(const Dense64& a, std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = static_cast<long>(a[i]);
  return m;
}

int scalar_identity_sign(const Dense64& a, std::size_t n) {
  const std::int64_t s = a[0];
  if (s != 1 && s != -1) return 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a[r * n + c] != (r == c ? s : 0)) return 0;
  return static_cast<int>(s);
}

// out = a * b; false on overflow.
bool multiply64(const Dense64& a, const Dense64& b, Dense64& out, std::size_t n) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t prod;
        if (__builtin_mul_overflow(x, b[k * n + j], &prod)) return false;
        if (__builtin_add_overflow(out[i * n + j], prod, &out[i * n + j])) return false;
      }
    }
  return true;
}

int scalar_identity_sign(const IntMatrix& m) {
  if (m.is_scalar_identity(1)) return 1;
  if (m.is_scalar_identity(-1)) return -1;
  return 0;
}

}  // namespace

SignedOrder find_signed_order(const IntMatrix& m, std::size_t k_max) {
  if (!m.is_square()) throw InvalidArgument("order search on a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw InvalidArgument("order search on an empty matrix");
  std::size_t k = 1;
  if (auto base = to_int64(m)) {
    Dense64 power = *base, next(n * n);
    for (; k <= k_max; ++k) {
      if (int s = scalar_identity_sign(power, n)) return make_signed_order(k, s);
      if (!multiply64(power, *base, next, n)) break;
      power.swap(next);
    }
    if (k > k_max) throw NotPeriodic(k_max);
    // overflowed while forming power k+1; continue exactly from power k
    IntMatrix exact = from_int64(power, n) * m;
    for (++k; k <= k_max; ++k) {
      if (int s = scalar_identity_sign(exact)) return make_signed_order(k, s);
      exact = exact * m;
    }
    throw NotPeriodic(k_max);
  }
  IntMatrix power = m;
  for (; k <= k_max; ++k) {
    if (int s = scalar_identity_sign(power)) return make_signed_order(k, s);
    power = power * m;
  }
  throw NotPeriodic(k_max);
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

bool is_palindromic_up_to_sign(const std::vector<Integer>& poly) {
  const std::size_t n = poly.size();
  bool pal = true, anti = true;
  for (std::size_t i = 0; i < n; ++i) {
    pal = pal && poly[i] == poly[n - 1 - i];
    anti = anti && poly[i] == -poly[n - 1 - i];
  }
  return pal || anti;
}

}  // namespace coxlab
