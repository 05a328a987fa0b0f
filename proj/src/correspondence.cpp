#include "corrdyn/correspondence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "corrdyn/kernels.hpp"
#include "corrdyn/resultant.hpp"

namespace corrdyn {

namespace {

// Evaluates the x-variables of f at (1, u): a form of degree e in the
// remaining variable.
BinaryForm specialize_x(const BiForm& f, const Rational& u) {
  std::vector<Rational> c(f.dy() + 1, Rational(0));
  for (unsigned j = 0; j <= f.dy(); ++j) {
    Rational acc(0);
    for (unsigned i = f.dx() + 1; i-- > 0;) acc = acc * u + f.at(i, j);
    c[j] = acc;
  }
  return BinaryForm(f.dy(), std::move(c));
}

// Evaluates the y-variables of g at (1, v): a form of degree d' in x.
BinaryForm specialize_y(const BiForm& g, const Rational& v) {
  std::vector<Rational> c(g.dx() + 1, Rational(0));
  for (unsigned i = 0; i <= g.dx(); ++i) {
    Rational acc(0);
    for (unsigned j = g.dy() + 1; j-- > 0;) acc = acc * v + g.at(i, j);
    c[i] = acc;
  }
  return BinaryForm(g.dx(), std::move(c));
}

// Linear factors in y shared by every x-row of f, against those in x shared
// by every y-column of g.
BinaryForm common_middle_factor(const BiForm& f, const BiForm& g) {
  std::vector<BinaryForm> rows;
  for (unsigned i = 0; i <= f.dx(); ++i) {
    std::vector<Rational> c(f.dy() + 1);
    for (unsigned j = 0; j <= f.dy(); ++j) c[j] = f.at(i, j);
    rows.emplace_back(f.dy(), std::move(c));
  }
  std::vector<BinaryForm> cols;
  for (unsigned j = 0; j <= g.dy(); ++j) {
    std::vector<Rational> c(g.dx() + 1);
    for (unsigned i = 0; i <= g.dx(); ++i) c[i] = g.at(i, j);
    cols.emplace_back(g.dx(), std::move(c));
  }
  const BinaryForm pair[] = {binary_gcd(rows), binary_gcd(cols)};
  return binary_gcd(pair);
}

std::string describe(const BinaryForm& factor) {
  std::ostringstream os;
  os << "common factor in the middle variable of degree " << factor.degree() << " [";
  for (std::size_t k = 0; k < factor.coeffs().size(); ++k) os << (k ? ", " : "") << factor[k];
  os << "]";
  try {
    if (!factor.is_zero())
      for (const auto& r : rational_roots(factor))
        os << "; linear factor " << r.p1 << "*z0 - " << r.p0 << "*z1";
  } catch (const std::runtime_error&) {
    // Root search gave up on huge coefficients; the gcd above still names the factor.
  }
  return os.str();
}

template <bool Parallel>
Correspondence compose_impl(const Correspondence& f, const Correspondence& g) {
  const unsigned d = f.dx(), e = f.dy(), d2 = g.dx(), e2 = g.dy();
  const std::size_t nu = static_cast<std::size_t>(d) * d2 + 1;
  const std::size_t nv = static_cast<std::size_t>(e) * e2 + 1;

  std::vector<BinaryForm> fx, gy;
  fx.reserve(nu);
  gy.reserve(nv);
  for (std::size_t u = 0; u < nu; ++u) fx.push_back(specialize_x(f.form(), Rational(u)));
  for (std::size_t v = 0; v < nv; ++v) gy.push_back(specialize_y(g.form(), Rational(v)));

  auto node = [&](std::size_t u, std::size_t v) {
    return resultant_univariate<Rational>(fx[u].coeffs(), gy[v].coeffs(), e, d2);
  };
  const auto values = Parallel ? kernels::tabulate_parallel(nu, nv, node)
                               : kernels::tabulate_serial(nu, nv, node);
  auto coeffs = kernels::interpolate_grid(values, nu, nv);
  BiForm h(d * d2, e * e2, std::move(coeffs));
  if (h.is_zero()) {
    BinaryForm factor = common_middle_factor(f.form(), g.form());
    throw DegenerateComposition(factor, 1, describe(factor));
  }
  return Correspondence(std::move(h));
}

}  // namespace

Correspondence::Correspondence(BiForm form) : form_(std::move(form)) {
  if (form_.is_zero()) throw std::invalid_argument("Correspondence: zero form");
}

bool projectively_equal(const Correspondence& f, const Correspondence& g) {
  return projectively_equal(f.form(), g.form());
}

MoebiusMap::MoebiusMap(Rational a, Rational b, Rational c, Rational d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (m_.det().is_zero()) throw std::invalid_argument("MoebiusMap: a*d - b*c must be nonzero");
}

Correspondence compose(const Correspondence& f, const Correspondence& g) {
  const std::size_t nodes = (static_cast<std::size_t>(f.dx()) * g.dx() + 1) *
                            (static_cast<std::size_t>(f.dy()) * g.dy() + 1);
  if (nodes >= kernels::kParallelGridThreshold) return compose_impl<true>(f, g);
  return compose_impl<false>(f, g);
}

Correspondence compose_serial(const Correspondence& f, const Correspondence& g) {
  return compose_impl<false>(f, g);
}

Correspondence iterate(const Correspondence& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("iterate: n must be positive");
  Correspondence h = f;
  for (unsigned step = 2; step <= n; ++step) {
    try {
      h = compose(h, f);
    } catch (const DegenerateComposition& err) {
      throw DegenerateComposition(err.common_factor(), step,
                                  "iteration step " + std::to_string(step) + ": " + err.what());
    }
  }
  return h;
}

Correspondence moebius_graph(const MoebiusMap& g) {
  BiForm f(1, 1);
  // (b x0 + a x1) y0 - (d x0 + c x1) y1
  f.at(0, 0) = g.b();
  f.at(1, 0) = g.a();
  f.at(0, 1) = -g.d();
  f.at(1, 1) = -g.c();
  return Correspondence(std::move(f));
}

Correspondence conjugate(const Correspondence& f, const MoebiusMap& g) {
  const Matrix2 n = g.homogeneous_matrix();
  const unsigned d = f.dx(), e = f.dy();
  const unsigned top = std::max(d, e);
  // Powers of the substituted coordinates x0' = n.a x0 + n.b x1, x1' = n.c x0 + n.d x1.
  const BinaryForm l0(1, {n.a, n.b}), l1(1, {n.c, n.d});
  std::vector<BinaryForm> p0{BinaryForm(0, {Rational(1)})}, p1{BinaryForm(0, {Rational(1)})};
  for (unsigned k = 1; k <= top; ++k) {
    p0.push_back(p0.back() * l0);
    p1.push_back(p1.back() * l1);
  }
  std::vector<BinaryForm> xs, ys;
  for (unsigned i = 0; i <= d; ++i) xs.push_back(p0[d - i] * p1[i]);
  for (unsigned j = 0; j <= e; ++j) ys.push_back(p0[e - j] * p1[j]);

  BiForm out(d, e);
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; j <= e; ++j) {
      const Rational& a = f.at(i, j);
      if (a.is_zero()) continue;
      for (unsigned p = 0; p <= d; ++p) {
        if (xs[i][p].is_zero()) continue;
        const Rational ax = a * xs[i][p];
        for (unsigned q = 0; q <= e; ++q) out.at(p, q) += ax * ys[j][q];
      }
    }
  return Correspondence(std::move(out));
}

}  // namespace corrdyn
