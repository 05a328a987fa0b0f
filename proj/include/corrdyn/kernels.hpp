#pragma once

// Exact data-parallel kernels. Each kernel has a serial reference and an
// OpenMP version; both must return identical values since all arithmetic
// is exact. The dispatching entry points pick the parallel version above a
// size threshold.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "corrdyn/polynomial.hpp"
#include "corrdyn/rational.hpp"

namespace corrdyn {

/// Dense row-major square-or-rectangular matrix over an exact ring.
template <class Ring>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Ring()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Ring& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Ring& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void swap_rows(std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[i * cols_ + j], a_[k * cols_ + j]);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Ring> a_;
};

namespace kernels {

/// Rows below the pivot are eliminated in parallel once at least this many
/// remain.
inline constexpr std::size_t kParallelRowThreshold = 24;
/// Grids with at least this many nodes are tabulated in parallel.
inline constexpr std::size_t kParallelGridThreshold = 16;

namespace detail {

// One fraction-free elimination step on rows [k+1, n).
template <class Ring>
void bareiss_row(Matrix<Ring>& m, std::size_t k, std::size_t i, const Ring& prev) {
  const std::size_t n = m.rows();
  const Ring& pivot = m(k, k);
  const Ring lead = m(i, k);
  for (std::size_t j = k + 1; j < n; ++j) {
    Ring num = pivot * m(i, j) - lead * m(k, j);
    m(i, j) = exact_div(num, prev);
  }
  m(i, k) = Ring();
}

template <class Ring>
bool bareiss_pivot(Matrix<Ring>& m, std::size_t k, bool& negate) {
  const std::size_t n = m.rows();
  std::size_t p = k;
  while (p < n && is_zero(m(p, k))) ++p;
  if (p == n) return false;
  if (p != k) {
    m.swap_rows(p, k);
    negate = !negate;
  }
  return true;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Serial reference.
template <class Ring>
Ring determinant_serial(Matrix<Ring> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Ring(Rational(1));
  bool negate = false;
  Ring prev(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!detail::bareiss_pivot(m, k, negate)) return Ring();
    for (std::size_t i = k + 1; i < n; ++i) detail::bareiss_row(m, k, i, prev);
    prev = m(k, k);
  }
  Ring det = m(n - 1, n - 1);
  return negate ? Ring() - det : det;
}

/// Same elimination with the row updates of each step distributed over
/// OpenMP threads.
template <class Ring>
Ring determinant_parallel(Matrix<Ring> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Ring(Rational(1));
  bool negate = false;
  Ring prev(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!detail::bareiss_pivot(m, k, negate)) return Ring();
    const auto first = static_cast<long>(k + 1);
    const auto last = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long i = first; i < last; ++i) detail::bareiss_row(m, k, static_cast<std::size_t>(i), prev);
    prev = m(k, k);
  }
  Ring det = m(n - 1, n - 1);
  return negate ? Ring() - det : det;
}

template <class Ring>
Ring determinant(Matrix<Ring> m) {
  if (m.rows() >= kParallelRowThreshold) return determinant_parallel(std::move(m));
  return determinant_serial(std::move(m));
}

/// Values fn(u, v) on the integer grid u in [0, nu), v in [0, nv), row-major
/// by u.
template <class Fn>
std::vector<Rational> tabulate_serial(std::size_t nu, std::size_t nv, Fn&& fn) {
  std::vector<Rational> out(nu * nv);
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v = 0; v < nv; ++v) out[u * nv + v] = fn(u, v);
  return out;
}

template <class Fn>
std::vector<Rational> tabulate_parallel(std::size_t nu, std::size_t nv, Fn&& fn) {
  std::vector<Rational> out(nu * nv);
  const auto total = static_cast<long>(nu * nv);
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < total; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    out[k] = fn(k / nv, k % nv);
  }
  return out;
}

template <class Fn>
std::vector<Rational> tabulate(std::size_t nu, std::size_t nv, Fn&& fn) {
  if (nu * nv >= kParallelGridThreshold) return tabulate_parallel(nu, nv, std::forward<Fn>(fn));
  return tabulate_serial(nu, nv, std::forward<Fn>(fn));
}

/// Ascending coefficients of the unique polynomial of degree < values.size()
/// taking values[t] at t = 0, 1, 2, ... (Newton divided differences).
std::vector<Rational> interpolate(std::span<const Rational> values);

/// Bivariate version: values row-major on the grid [0, nu) x [0, nv);
/// returns coefficient (m, n) of u^m v^n at index m * nv + n.
std::vector<Rational> interpolate_grid(std::span<const Rational> values, std::size_t nu,
                                       std::size_t nv);

}  // namespace kernels
}  // namespace corrdyn
