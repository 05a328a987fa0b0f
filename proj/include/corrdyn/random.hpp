#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "corrdyn/correspondence.hpp"

namespace corrdyn {

/// Seeded generator for test corpora. The stream is fixed by (seed, stream,
/// index) and draws through a portable reduction, so corpora are identical
/// across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t index = 0);

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= height, 1 <= q <= den_height.
  Rational rational(long height = 9, long den_height = 4);
  Rational nonzero_rational(long height = 9, long den_height = 4);

  BinaryForm binary_form(unsigned degree, long height = 9);
  BiForm biform(unsigned d, unsigned e, long height = 9);
  MoebiusMap moebius(long height = 5);
  /// Determinant exactly one.
  MoebiusMap sl2_moebius(long height = 4);
  /// Nonzero form; coefficients are small integers.
  Correspondence correspondence(unsigned d, unsigned e, long height = 5);
  /// a00 * a_de != 0 and F, diag_x, diag_y without a common root.
  Correspondence good_position_correspondence(unsigned d, unsigned e, long height = 5);
  /// Graph of a degree-D map with D + 1 distinct nonzero rational fixed
  /// points, in good position, with finite multipliers.
  Correspondence map_graph_with_rational_fixed_points(unsigned degree);
  /// Random degree-D map graph in good position (bidegree (D, 1)).
  Correspondence good_position_map_graph(unsigned degree, long height = 5);
  /// a_ij == 0 whenever 2(i + j) <= d + e, then conjugated by a random map.
  Correspondence planted_unstable(unsigned d, unsigned e);

 private:
  std::mt19937_64 gen_;
};

}  // namespace corrdyn
