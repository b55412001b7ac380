#include "oracle.hpp"

#include "sqtile/errors.hpp"
#include "sqtile/quaternion.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace sqtile;

namespace {
const Quaternion I{0, 1, 0, 0}, J{0, 0, 1, 0}, K{0, 0, 0, 1};
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("Hamilton product basics") {
  CHECK(distance(I * J, K) == 0.0);
  CHECK(distance(J * K, I) == 0.0);
  CHECK(distance(J * I, -K) == 0.0);
  CHECK(distance(I * I, Quaternion::real(-1)) == 0.0);
  const Quaternion q{0.3, -1.2, 2.0, 0.7};
  CHECK(distance(Quaternion::one() * q, q) == 0.0);
  CHECK(distance(q * q.inverse(), Quaternion::one()) < 1e-15);
}

TEST_CASE("Hamilton product agrees with Eigen") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const UnitQuaternion p = haar_random(rng), q = haar_random(rng);
    const Eigen::Quaterniond ref = oracle::eig(p) * oracle::eig(q);
    CHECK(oracle::dist(oracle::eig(p * q), ref) < 1e-15);
    CHECK(std::abs((p * q).value().norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("UnitQuaternion rejects non-unit input") {
  CHECK_THROWS_AS(UnitQuaternion(Quaternion{2, 0, 0, 0}), std::domain_error);
  CHECK_NOTHROW(UnitQuaternion(Quaternion{0, 0, 1, 0}));
  CHECK(std::abs(UnitQuaternion::normalize(Quaternion{1, 1, 1, 1}).w() - 0.5) < 1e-15);
}

TEST_CASE("haar_random: unit norm, centred real part") {
  Rng rng(2024);
  const int n = 100000;
  double mean = 0.0;
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const UnitQuaternion q = haar_random(rng);
    worst = std::max(worst, std::abs(q.value().norm() - 1.0));
    mean += q.w();
  }
  mean /= n;
  CHECK(worst < 1e-12);
  CHECK(std::abs(mean) < 0.01);
}

TEST_CASE("haar_random rotation angle follows the Weyl density") {
  // Rotation angle t in [0, pi] has density (2/pi) sin^2(t/2), CDF (t - sin t)/pi.
  Rng rng(77);
  const int n = 100000;
  std::vector<double> t(n);
  for (double& x : t) x = 2.0 * std::acos(std::min(1.0, std::abs(haar_random(rng).w())));
  std::sort(t.begin(), t.end());
  double ks = 0.0;
  for (int k = 0; k < n; ++k) {
    const double cdf = (t[k] - std::sin(t[k])) / pi;
    ks = std::max({ks, std::abs(cdf - double(k) / n), std::abs(cdf - double(k + 1) / n)});
  }
  CHECK(ks < 0.01);
}

TEST_CASE("im_direction canonical sign") {
  auto near = [](const Direction& d, double x, double y, double z) {
    return std::abs(d.x() - x) + std::abs(d.y() - y) + std::abs(d.z() - z) < 1e-15;
  };
  CHECK(near(im_direction(I), 1, 0, 0));
  CHECK(near(im_direction(-J), 0, 1, 0));
  CHECK(near(im_direction(Quaternion{3, 0, 0, 4}), 0, 0, 1));
  CHECK(near(im_direction(Quaternion{0, -1, 2, 0}), 1 / std::sqrt(5.0), -2 / std::sqrt(5.0), 0));
  CHECK_THROWS_AS(im_direction(Quaternion::real(5)), DegenerateDirection);
  CHECK_THROWS_AS(im_direction(Quaternion{1, 1e-12, 0, 0}), DegenerateDirection);
}

TEST_CASE("rotate_ad") {
  const ImVec v{0.2, -0.4, 1.1};
  const ImVec r0 = rotate_ad(UnitQuaternion::identity(), v);
  CHECK(std::abs(r0.x - v.x) + std::abs(r0.y - v.y) + std::abs(r0.z - v.z) == 0.0);

  const ImVec ri = rotate_ad(UnitQuaternion(I), {1, 0, 0});
  CHECK(std::abs(ri.x - 1) + std::abs(ri.y) + std::abs(ri.z) < 1e-15);

  const UnitQuaternion g = UnitQuaternion::normalize(Quaternion{std::cos(pi / 4), std::sin(pi / 4), 0, 0});
  const ImVec rk = rotate_ad(g, {0, 1, 0});
  CHECK(std::abs(rk.x) + std::abs(rk.y) + std::abs(rk.z - 1) < 1e-12);

  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    const UnitQuaternion h = haar_random(rng);
    const ImVec w{0.3 * k, -1.0, 0.5};
    const Eigen::Vector3d ref = oracle::eig(h).toRotationMatrix() * Eigen::Vector3d(w.x, w.y, w.z);
    const ImVec got = rotate_ad(h, w);
    CHECK((Eigen::Vector3d(got.x, got.y, got.z) - ref).norm() < 1e-12);
    CHECK(std::abs(got.norm() - w.norm()) < 1e-12);
  }
}

TEST_CASE("angle_between") {
  const Direction x(ImVec{1, 0, 0}), y(ImVec{0, 1, 0}), xy(ImVec{1, 1, 0});
  CHECK(std::abs(angle_between(x, y) - pi / 2) < 1e-15);
  CHECK(angle_between(x, x) == 0.0);
  CHECK(std::abs(angle_between(x, xy) - pi / 4) < 1e-12);
  // Lines, not vectors: antipodal representatives are the same point.
  CHECK(angle_between(Direction(ImVec{1, 2, 3}), Direction(ImVec{-1, -2, -3})) < 1e-15);
  // Small angles keep full relative precision.
  const double eps = 1e-10;
  CHECK(std::abs(angle_between(x, Direction(ImVec{1, eps, 0})) - eps) < 1e-20);
}

TEST_CASE("projective_distance on H") {
  const Quaternion q{1, 2, -1, 0.5};
  CHECK(projective_distance(QuaternionLine(q), QuaternionLine(q * -3.0)) < 1e-15);
  CHECK(std::abs(projective_distance(QuaternionLine(I), QuaternionLine(J)) - pi / 2) < 1e-15);
  CHECK_THROWS_AS(QuaternionLine(Quaternion::real(0)), DegenerateDirection);
}
