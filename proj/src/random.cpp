#include "corrdyn/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "corrdyn/errors.hpp"
#include "corrdyn/multiplier.hpp"

namespace corrdyn {

namespace {

constexpr int kMaxAttempts = 10000;

// Graph of z -> P(z)/Q(z) at bidegree (D, 1): P(x) y0 - Q(x) y1.
Correspondence map_graph(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const auto deg = static_cast<unsigned>(p.size() - 1);
  BiForm f(deg, 1);
  for (unsigned i = 0; i <= deg; ++i) {
    f.at(i, 0) = p[i];
    f.at(i, 1) = -q[i];
  }
  return Correspondence(std::move(f));
}

bool coprime(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const auto deg = static_cast<unsigned>(p.size() - 1);
  const BinaryForm pair[] = {BinaryForm(deg, p), BinaryForm(deg, q)};
  const BinaryForm g = binary_gcd(pair);
  return !g.is_zero() && g.degree() == 0;
}

bool usable_spectrum(const Correspondence& f) {
  try {
    return !multiplier_form(f)[0].is_zero();
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
  gen_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased and independent of the library's
  // distribution implementations.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = gen_();
  while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational Rng::rational(long height, long den_height) {
  const long p = uniform(-height, height);
  const long q = uniform(1, den_height);
  return Rational(p, q);
}

Rational Rng::nonzero_rational(long height, long den_height) {
  for (;;) {
    Rational r = rational(height, den_height);
    if (!r.is_zero()) return r;
  }
}

BinaryForm Rng::binary_form(unsigned degree, long height) {
  std::vector<Rational> c;
  for (unsigned k = 0; k <= degree; ++k) c.push_back(rational(height));
  return BinaryForm(degree, std::move(c));
}

BiForm Rng::biform(unsigned d, unsigned e, long height) {
  std::vector<Rational> c;
  for (unsigned k = 0; k < (d + 1) * (e + 1); ++k) c.push_back(rational(height));
  return BiForm(d, e, std::move(c));
}

MoebiusMap Rng::moebius(long height) {
  for (;;) {
    const Rational a(uniform(-height, height)), b(uniform(-height, height)),
        c(uniform(-height, height)), d(uniform(-height, height));
    if (!(a * d - b * c).is_zero()) return {a, b, c, d};
  }
}

MoebiusMap Rng::sl2_moebius(long height) {
  // Product of three elementary shears.
  const Matrix2 s{1, rational(height, 2), 0, 1};
  const Matrix2 t{1, 0, rational(height, 2), 1};
  const Matrix2 u{1, rational(height, 2), 0, 1};
  return MoebiusMap::from_matrix(s * t * u);
}

Correspondence Rng::correspondence(unsigned d, unsigned e, long height) {
  for (;;) {
    std::vector<Rational> c;
    for (unsigned k = 0; k < (d + 1) * (e + 1); ++k) c.emplace_back(uniform(-height, height));
    BiForm f(d, e, std::move(c));
    if (!f.is_zero()) return Correspondence(std::move(f));
  }
}

Correspondence Rng::good_position_correspondence(unsigned d, unsigned e, long height) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Correspondence f = correspondence(d, e, height);
    try {
      multiplier_form(f);
      return f;
    } catch (const PreconditionError&) {
    }
  }
  throw std::runtime_error("good_position_correspondence: no sample found");
}

Correspondence Rng::map_graph_with_rational_fixed_points(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("map graph degree must be positive");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Rational> pts;
    while (pts.size() < degree + 1) {
      Rational p = nonzero_rational(6, 3);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<Rational> q;
    for (unsigned k = 0; k <= degree; ++k) q.emplace_back(uniform(-4, 4));
    if (q[degree].is_zero()) continue;
    // P = z Q - q_D prod (z - p_k), so P - z Q vanishes at the chosen points
    // and the z^(D+1) terms cancel.
    Polynomial prod(Rational(1));
    for (const auto& p : pts) prod = prod * Polynomial(std::vector<Rational>{-p, Rational(1)});
    const Polynomial pz = Polynomial::monomial(Rational(1), 1) * Polynomial(q) - prod * q[degree];
    std::vector<Rational> p(degree + 1);
    for (unsigned k = 0; k <= degree; ++k) p[k] = pz[k];
    if (!coprime(p, q)) continue;
    Correspondence f = map_graph(p, q);
    if (!usable_spectrum(f)) continue;
    try {
      rational_fixed_point_oracle(f);
    } catch (const std::invalid_argument&) {
      continue;
    }
    return f;
  }
  throw std::runtime_error("map_graph_with_rational_fixed_points: no sample found");
}

Correspondence Rng::good_position_map_graph(unsigned degree, long height) {
  if (degree == 0) throw std::invalid_argument("map graph degree must be positive");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Rational> p, q;
    for (unsigned k = 0; k <= degree; ++k) {
      p.emplace_back(uniform(-height, height));
      q.emplace_back(uniform(-height, height));
    }
    if (!coprime(p, q)) continue;
    Correspondence f = map_graph(p, q);
    if (usable_spectrum(f)) return f;
  }
  throw std::runtime_error("good_position_map_graph: no sample found");
}

Correspondence Rng::planted_unstable(unsigned d, unsigned e) {
  for (;;) {
    BiForm f(d, e);
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; j <= e; ++j)
        if (2 * (i + j) > d + e) f.at(i, j) = Rational(uniform(-5, 5));
    if (f.is_zero()) continue;
    return conjugate(Correspondence(std::move(f)), moebius());
  }
}

}  // namespace corrdyn
