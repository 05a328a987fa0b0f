#include "corrdyn/clebsch_gordan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "corrdyn/kernels.hpp"

namespace corrdyn {

namespace {

Rational falling(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Rational r(1);
  for (unsigned t = 0; t < k; ++t) r *= Rational(n - t);
  return r;
}

// Omega^m x0^(d-i) x1^i y0^(e-j) y1^j = kappa * z0^(d+e-m-s) z1^(s-m), s = i+j.
Rational cayley_monomial(unsigned d, unsigned e, unsigned m, unsigned i, unsigned j) {
  Rational acc(0);
  for (unsigned k = 0; k <= m; ++k) {
    Rational term = binomial(m, k) * falling(d - i, m - k) * falling(i, k) * falling(e - j, k) *
                    falling(j, m - k);
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Matrix<Rational> invert(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Rational(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw std::logic_error("cg_reconstruct: singular weight block");
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    const Rational s = Rational(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Omega^m only connects a_ij with i + j = s to index s - m of part m, so the
// decomposition is block diagonal by s. Each block is square.
struct WeightBlock {
  unsigned i_lo = 0;        // unknowns a_(i, s-i), i = i_lo .. i_lo + size - 1
  unsigned m_lo = 0;        // equations from parts m_lo .. m_lo + size - 1
  Matrix<Rational> inverse;  // maps part coefficients to unknowns
};

struct ReconstructionPlan {
  std::vector<WeightBlock> blocks;  // indexed by s
};

std::shared_ptr<const ReconstructionPlan> plan_for(unsigned d, unsigned e) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const ReconstructionPlan>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({d, e}); it != cache.end()) return it->second;
  }
  auto plan = std::make_shared<ReconstructionPlan>();
  const unsigned top = std::min(d, e);
  for (unsigned s = 0; s <= d + e; ++s) {
    WeightBlock block;
    block.i_lo = s > e ? s - e : 0;
    const unsigned i_hi = std::min(d, s);
    const unsigned size = i_hi - block.i_lo + 1;
    // Part m contributes when s - m lies in [0, d + e - 2m].
    const unsigned m_hi = std::min({top, s, d + e - s});
    if (m_hi + 1 != size) throw std::logic_error("cg_reconstruct: non-square weight block");
    block.m_lo = 0;
    Matrix<Rational> a(size, size);
    for (unsigned m = 0; m < size; ++m)
      for (unsigned c = 0; c < size; ++c) {
        const unsigned i = block.i_lo + c;
        a(m, c) = cayley_monomial(d, e, m, i, s - i);
      }
    block.inverse = invert(std::move(a));
    plan->blocks.push_back(std::move(block));
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::pair{d, e}, std::move(plan));
  return it->second;
}

}  // namespace

BinaryForm cayley_omega(const BiForm& f, unsigned m) {
  const unsigned d = f.dx(), e = f.dy();
  if (m > std::min(d, e))
    throw std::out_of_range("cayley_omega: m = " + std::to_string(m) + " exceeds min(d, e)");
  BinaryForm out(d + e - 2 * m);
  for (unsigned k = 0; k <= m; ++k) {
    const BiForm part = mixed_partial(f, {m - k, k, k, m - k});
    Rational scale = binomial(m, k);
    if (k % 2 == 1) scale = -scale;
    out += diagonal_restriction(part) * scale;
  }
  return out;
}

CgComponents cg_decompose(const BiForm& f) {
  CgComponents c{f.dx(), f.dy(), {}};
  const unsigned top = std::min(f.dx(), f.dy());
  for (unsigned m = 0; m <= top; ++m) c.parts.push_back(cayley_omega(f, m));
  return c;
}

BiForm cg_reconstruct(const CgComponents& c) {
  const unsigned d = c.d, e = c.e;
  const unsigned top = std::min(d, e);
  if (c.parts.size() != top + 1)
    throw std::invalid_argument("cg_reconstruct: expected min(d, e) + 1 components");
  for (unsigned m = 0; m <= top; ++m)
    if (c.parts[m].degree() != d + e - 2 * m)
      throw std::invalid_argument("cg_reconstruct: component " + std::to_string(m) +
                                  " must have degree d + e - 2m");

  const auto plan = plan_for(d, e);
  BiForm f(d, e);
  for (unsigned s = 0; s <= d + e; ++s) {
    const WeightBlock& block = plan->blocks[s];
    const std::size_t size = block.inverse.rows();
    for (std::size_t r = 0; r < size; ++r) {
      Rational acc(0);
      for (std::size_t m = 0; m < size; ++m) {
        const Rational& rhs = c.parts[m][s - m];
        if (!rhs.is_zero()) acc += block.inverse(r, m) * rhs;
      }
      const unsigned i = block.i_lo + static_cast<unsigned>(r);
      f.at(i, s - i) = acc;
    }
  }
  return f;
}

BiForm rho_embed(const BinaryForm& w0, const BinaryForm& w1, unsigned d, unsigned e,
                 const Rational& c0, const Rational& c1) {
  if (std::min(d, e) < 1) throw std::invalid_argument("rho_embed: need min(d, e) >= 1");
  if (w0.degree() != d + e || w1.degree() != d + e - 2)
    throw std::invalid_argument("rho_embed: component degrees must be d + e and d + e - 2");
  if (c0.is_zero() || c1.is_zero()) throw std::invalid_argument("rho_embed: scales must be nonzero");
  CgComponents c{d, e, {}};
  c.parts.push_back(w0 * c0);
  c.parts.push_back(w1 * c1);
  for (unsigned m = 2; m <= std::min(d, e); ++m) c.parts.emplace_back(d + e - 2 * m);
  return cg_reconstruct(c);
}

BiForm rho_project(const BiForm& f, const Rational& c0, const Rational& c1) {
  const unsigned n = f.dx() + f.dy();
  if (std::min(f.dx(), f.dy()) < 1) throw std::invalid_argument("rho_project: need min(d, e) >= 1");
  return rho_embed(cayley_omega(f, 0), cayley_omega(f, 1), 1, n - 1, c0, c1);
}

int torus_weight(unsigned d, unsigned e, unsigned i, unsigned j) {
  if (i > d || j > e) throw std::out_of_range("torus_weight: index outside the coefficient matrix");
  return static_cast<int>(d + e) - 2 * static_cast<int>(i + j);
}

WeightVector torus_weights(unsigned d, unsigned e) {
  WeightVector w{d, e, {}};
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= e; ++j) w.weights.push_back(torus_weight(d, e, i, j));
  return w;
}

}  // namespace corrdyn
