#include "sqtile/invariants.hpp"

#include "sqtile/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sqtile {

namespace {

constexpr double kRankThreshold = 1e-9;
constexpr double kPlaneGap = 1e-6;

Eigen::Vector4d as_vector(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
Quaternion as_quaternion(const Eigen::Vector4d& v) { return {v(0), v(1), v(2), v(3)}; }

Eigen::Matrix<double, 4, 2> image_basis(const LinearEndoH& m, const char* which) {
  Eigen::JacobiSVD<LinearEndoH> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  const int rank = static_cast<int>((s.array() > kRankThreshold).count());
  if (rank != 2) {
    throw DegenerateIntersection(std::string(which) + " has rank " + std::to_string(rank) + ", expected 2");
  }
  return svd.matrixU().leftCols<2>();
}

// Principal angle from a singular value s of [U1 U2]: s^2 = 1 - cos(theta).
double principal_angle(double s) { return 2.0 * std::asin(std::clamp(s / std::sqrt(2.0), 0.0, 1.0)); }

Direction imaginary_direction(const Quaternion& q, const char* what) {
  try {
    return im_direction(q);
  } catch (const DegenerateDirection&) {
    throw DegenerateDirection(std::string(what) + " has a vanishing imaginary part");
  }
}

} // namespace

LinearEndoH twisted_difference_map(const UnitQuaternion& P, const UnitQuaternion& Q) {
  LinearEndoH m;
  const Quaternion qi = Q.inverse().value();
  for (int k = 0; k < 4; ++k) {
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e(k) = 1.0;
    const Quaternion x = as_quaternion(e);
    m.col(k) = as_vector(P.value() * x * qi - x);
  }
  return m;
}

LinearEndoH phi_map(const Representation& rho) { return twisted_difference_map(rho.B(2), rho.B(1)); }

LinearEndoH psi_map(const Representation& rho) { return twisted_difference_map(rho.B(4), rho.B(3)); }

Quaternion apply(const LinearEndoH& m, const Quaternion& x) { return as_quaternion(m * as_vector(x)); }

int numerical_rank(const LinearEndoH& m, double threshold) {
  Eigen::JacobiSVD<LinearEndoH> svd(m);
  return static_cast<int>((svd.singularValues().array() > threshold).count());
}

QuaternionLine image_line_intersection(const Representation& rho) {
  const Eigen::Matrix<double, 4, 2> U1 = image_basis(phi_map(rho), "phi_B");
  const Eigen::Matrix<double, 4, 2> U2 = image_basis(psi_map(rho), "psi_B");
  Eigen::Matrix4d stacked;
  stacked << U1, U2;
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues(); // descending
  const double first_angle = principal_angle(s(3));
  const double second_angle = principal_angle(s(2));
  if (first_angle > kPlaneGap) {
    throw DegenerateIntersection("images meet only in 0 (smallest principal angle " + std::to_string(first_angle) +
                                 ")");
  }
  if (second_angle < kPlaneGap) {
    throw DegenerateIntersection("images coincide (principal angles " + std::to_string(first_angle) + ", " +
                                 std::to_string(second_angle) + ")");
  }
  const Eigen::Vector4d null = svd.matrixV().col(3);
  const Eigen::Vector4d line = U1 * null.head<2>() - U2 * null.tail<2>();
  return QuaternionLine(as_quaternion(line));
}

Direction dir_gamma1(const Representation& rho) {
  const Quaternion a4 = rho.A(4).value();
  return imaginary_direction(a4 * rho.A(2).value() - a4 * rho.A(3).value(), "A4.A2 - A4.A3");
}

Direction dir_gamma2_conj(const Representation& rho) {
  const Quaternion a1 = rho.A(1).value();
  const Quaternion diff = a1 * rho.A(2).value() - a1 * rho.A(3).value();
  const Quaternion b1 = rho.B(1).value();
  return imaginary_direction(b1.conj() * diff * b1, "Ad(B1)^-1 (A1.A2 - A1.A3)");
}

InvariantValue angle_invariant(const Representation& rho) {
  const Direction d1 = dir_gamma2_conj(rho);
  const Direction d2 = dir_gamma1(rho);
  const double angle = angle_between(d1, d2);
  const double c = std::cos(angle);
  return {d1, d2, angle, c * c};
}

int CoverageReport::octants_hit() const {
  return static_cast<int>(std::count_if(octant_hits.begin(), octant_hits.end(), [](std::size_t n) { return n > 0; }));
}

ScanRow scan_sample(std::uint64_t seed, const SamplerConfig& cfg, std::size_t* rejected) {
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
    SamplerConfig c = cfg;
    c.seed = s;
    const Representation rho = sample_rep(c);
    try {
      return {s, angle_invariant(rho), relation_residual(rho)};
    } catch (const DegenerateDirection&) {
      if (rejected) ++*rejected;
    }
  }
  throw DegenerateSample("no non-degenerate invariant value in " + std::to_string(cfg.max_attempts) + " attempts");
}

CoverageReport surjectivity_scan(std::size_t n, const SamplerConfig& cfg) {
  if (n == 0) throw std::invalid_argument("surjectivity_scan needs at least one sample");
  CoverageReport out;
  out.rows.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.rows.push_back(scan_sample(derive_seed(cfg.seed, k), cfg, &out.rejected));
    const ImVec& d = out.rows.back().value.dir1.vec();
    // The canonical representative and its negative are the same projective point.
    for (const ImVec& v : {d, -d}) {
      const std::size_t octant = (v.x < 0 ? 1u : 0u) | (v.y < 0 ? 2u : 0u) | (v.z < 0 ? 4u : 0u);
      ++out.octant_hits[octant];
    }
  }
  double sum = 0.0;
  out.angle_min = out.rows.front().value.angle;
  out.angle_max = out.angle_min;
  for (const ScanRow& r : out.rows) {
    sum += r.value.angle;
    out.angle_min = std::min(out.angle_min, r.value.angle);
    out.angle_max = std::max(out.angle_max, r.value.angle);
  }
  out.angle_mean = sum / static_cast<double>(n);
  double var = 0.0;
  for (const ScanRow& r : out.rows) var += (r.value.angle - out.angle_mean) * (r.value.angle - out.angle_mean);
  out.angle_stddev = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  return out;
}

} // namespace sqtile
