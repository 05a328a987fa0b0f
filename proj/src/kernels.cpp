#include "corrdyn/kernels.hpp"

namespace corrdyn::kernels {

std::vector<Rational> interpolate(std::span<const Rational> values) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  // Divided differences on nodes 0..n-1.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(level);
  // Horner on the Newton basis: p = dd[n-1]; p = p * (t - i) + dd[i].
  std::vector<Rational> p(n, Rational(0));
  p[0] = dd[n - 1];
  std::size_t len = 1;
  for (std::size_t ii = n - 1; ii-- > 0;) {
    const Rational node(ii);
    // p *= (t - node)
    for (std::size_t k = len; k > 0; --k) p[k] = p[k - 1] - node * p[k];
    p[0] = -node * p[0];
    ++len;
    p[0] += dd[ii];
  }
  return p;
}

std::vector<Rational> interpolate_grid(std::span<const Rational> values, std::size_t nu,
                                       std::size_t nv) {
  if (values.size() != nu * nv) throw std::invalid_argument("interpolate_grid: size mismatch");
  // Interpolate along v for each u, then along u for each v-coefficient.
  std::vector<Rational> rows(nu * nv);
  for (std::size_t u = 0; u < nu; ++u) {
    const auto c = interpolate(values.subspan(u * nv, nv));
    for (std::size_t v = 0; v < nv; ++v) rows[u * nv + v] = c[v];
  }
  std::vector<Rational> out(nu * nv);
  std::vector<Rational> column(nu);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t u = 0; u < nu; ++u) column[u] = rows[u * nv + v];
    const auto c = interpolate(column);
    for (std::size_t u = 0; u < nu; ++u) out[u * nv + v] = c[u];
  }
  return out;
}

}  // namespace corrdyn::kernels
