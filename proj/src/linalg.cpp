#include "vir/linalg.hpp"

#include <omp.h>

#include <numeric>

namespace vir {

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Plain Gauss-Jordan: normalise the pivot row, clear the column everywhere.
Rref rref_serial(Matrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

// Forward elimination with row updates spread over threads, then a
// back-substitution pass that is parallel over the rows above each pivot.
Rref rref_parallel(Matrix m) {
  Rref out;
  const std::size_t ncols = m.cols();
  const long nrows = static_cast<long>(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < ncols; ++j) m(r, j) *= inv;
    const long first = static_cast<long>(r) + 1;
#pragma omp parallel for schedule(dynamic)
    for (long i = first; i < nrows; ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < ncols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t k = out.pivots.size(); k-- > 0;) {
    const std::size_t c = out.pivots[k];
    const long upto = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < upto; ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < ncols; ++j) m(i, j) -= f * m(k, j);
    }
  }
  out.reduced = std::move(m);
  return out;
}

Scalar det_serial(Matrix m) {
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      swap_rows(m, c, p);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Scalar det_parallel(Matrix m) {
  Scalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      swap_rows(m, c, p);
      det = -det;
    }
    det *= m(c, c);
    const Scalar pivot = m(c, c);
#pragma omp parallel for schedule(dynamic)
    for (long i = static_cast<long>(c) + 1; i < static_cast<long>(n); ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c) / pivot;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace

Rref rref(Matrix m, Exec exec) {
  return exec == Exec::serial ? rref_serial(std::move(m)) : rref_parallel(std::move(m));
}

std::size_t rank(const Matrix& m, Exec exec) { return rref(m, exec).pivots.size(); }

Scalar determinant(Matrix m, Exec exec) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  return exec == Exec::serial ? det_serial(std::move(m)) : det_parallel(std::move(m));
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, Exec exec) {
  Rref r = rref(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = -r.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Scalar> primitive(std::vector<Scalar> v) {
  mpz_class den = 1, num = 0;
  for (const Scalar& x : v) {
    if (is_zero(x)) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  for (const Scalar& x : v) {
    if (is_zero(x)) continue;
    mpz_class a = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
  }
  if (num == 0) return v;
  Scalar scale(den, num);
  scale.canonicalize();
  for (const Scalar& x : v) {
    if (!is_zero(x)) {
      if (sgn(x) < 0) scale = -scale;
      break;
    }
  }
  for (Scalar& x : v) x *= scale;
  return v;
}

}  // namespace vir
