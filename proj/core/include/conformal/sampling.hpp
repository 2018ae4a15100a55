#pragma once

// Seeded generators for the property suites. Uniform variates are built from
// the raw 64-bit mt19937_64 stream, so sequences are identical on every
// platform for a given seed.

#include <cstdint>
#include <random>

#include "conformal/disk.hpp"
#include "conformal/halfplane.hpp"
#include "conformal/matrix_core.hpp"
#include "conformal/spacetime.hpp"
#include "conformal/su22.hpp"
#include "conformal/tube.hpp"

namespace conformal {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  Complex complex_box(double half_width);
  Mat2C matrix(double half_width = 1.0);

  /// SL(2,R) with |entries| <= max_entry.
  SL2RElement sl2r(double max_entry = 5.0);
  HalfPlanePoint half_plane(double q_abs = 5.0, double p_min = 0.1, double p_max = 10.0);
  DiskPoint disk_point(double max_radius);

  /// ||Z|| drawn uniformly in [0, max_norm].
  DomainPoint domain_point(double max_norm = 0.9);
  /// Unitary with det = e^{i phase}.
  Mat2C unitary(double phase);
  ShilovPoint shilov_point();
  /// build_coherent_frame(xi) * diag(U, V) with det U det V = 1.
  SU22Element su22(double max_norm = 0.9);

  /// l0 in [0.5, 2], spatial part with norm <= 0.9 l0.
  MinkowskiVector future_cone();
  MinkowskiVector minkowski_box(double half_width);
  TubeStateParams tube_state(double q_half_width = 1.0);
  TubePoint tube_point(double x_half_width = 1.0);

 private:
  std::mt19937_64 engine_;
};

}  // namespace conformal
