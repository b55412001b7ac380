#pragma once

#include "sqtile/representation.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <vector>

namespace sqtile {

/// Real-linear endomorphism of H in the basis (1, i, j, k).
using LinearEndoH = Eigen::Matrix4d;

/// Matrix of X -> P·X·Q^-1 - X.
LinearEndoH twisted_difference_map(const UnitQuaternion& P, const UnitQuaternion& Q);

/// X -> B2·X·B1^-1 - X; its kernel conjugates B1 to B2.
LinearEndoH phi_map(const Representation& rho);
/// X -> B4·X·B3^-1 - X; its kernel conjugates B3 to B4.
LinearEndoH psi_map(const Representation& rho);

Quaternion apply(const LinearEndoH& m, const Quaternion& x);

/// Number of singular values above `threshold`.
int numerical_rank(const LinearEndoH& m, double threshold = 1e-9);

/// The line Im(phi) ∩ Im(psi), which equals [A2 - A3]. Throws
/// DegenerateIntersection when a rank drops below two, when the planes meet
/// only in 0, or when they coincide (second principal angle below 1e-6).
QuaternionLine image_line_intersection(const Representation& rho);

/// [A4·A2 - A4·A3]: invariant under pullback by A, B, C and D.
Direction dir_gamma1(const Representation& rho);

/// Ad(B1)^-1 [A1·A2 - A1·A3]: invariant under pullback by Ad(b1)^-1 g Ad(b1)
/// for g in B, C, D, E.
Direction dir_gamma2_conj(const Representation& rho);

struct InvariantValue {
  Direction dir1; ///< dir_gamma2_conj
  Direction dir2; ///< dir_gamma1
  double angle = 0.0;
  double cos2 = 0.0;
};

/// Angle between the two directions and its squared cosine.
InvariantValue angle_invariant(const Representation& rho);

struct ScanRow {
  std::uint64_t seed = 0;
  InvariantValue value;
  double residual = 0.0;
};

struct CoverageReport {
  std::vector<ScanRow> rows;
  /// Hits per octant of ±dir1 (index bit 0: x<0, bit 1: y<0, bit 2: z<0).
  std::array<std::size_t, 8> octant_hits{};
  double angle_min = 0.0;
  double angle_max = 0.0;
  double angle_mean = 0.0;
  double angle_stddev = 0.0;
  std::size_t rejected = 0; ///< degenerate draws replaced by fresh ones

  int octants_hit() const;
  double angle_spread() const { return angle_max - angle_min; }
};

/// Samples n representations (sample k uses derive_seed(cfg.seed, k), with
/// further sub-streams on a degenerate draw) and records the invariant.
CoverageReport surjectivity_scan(std::size_t n, const SamplerConfig& cfg = {});

/// One invariant sample for a given per-sample seed; resamples degenerate
/// draws up to cfg.max_attempts times.
ScanRow scan_sample(std::uint64_t seed, const SamplerConfig& cfg, std::size_t* rejected = nullptr);

} // namespace sqtile
