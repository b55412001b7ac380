#include "sqtile/quaternion.hpp"

#include "sqtile/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sqtile {

namespace {

// Angle between two unit vectors read as projective points. The chordal form
// stays accurate near zero where arccos(|<u,v>|) loses half the digits.
template <std::size_t N>
double projective_angle(const std::array<double, N>& u, const std::array<double, N>& v) {
  double minus = 0.0;
  double plus = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    minus += (u[k] - v[k]) * (u[k] - v[k]);
    plus += (u[k] + v[k]) * (u[k] + v[k]);
  }
  const double chord = std::sqrt(std::min(minus, plus));
  return 2.0 * std::asin(std::clamp(chord / 2.0, 0.0, 1.0));
}

template <std::size_t N>
std::array<double, N> canonical_unit(std::array<double, N> c, double tolerance, const char* what) {
  double n2 = 0.0;
  for (double v : c) n2 += v * v;
  const double n = std::sqrt(n2);
  if (!(n >= tolerance)) {
    throw DegenerateDirection(std::string(what) + " has norm " + std::to_string(n));
  }
  for (double& v : c) v /= n;
  // Sign rule: the first coordinate that is nonzero at working precision is positive.
  for (double v : c) {
    if (std::abs(v) > 1e-15) {
      if (v < 0.0) {
        for (double& u : c) u = -u;
      }
      break;
    }
  }
  return c;
}

} // namespace

double ImVec::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const ImVec& a, const ImVec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

ImVec cross(const ImVec& a, const ImVec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion Quaternion::inverse() const { return conj() * (1.0 / norm2()); }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

double distance(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

UnitQuaternion::UnitQuaternion(const Quaternion& q) : q_(q) {
  if (!(std::abs(q.norm() - 1.0) < kNormTolerance)) {
    throw std::domain_error("UnitQuaternion: norm " + std::to_string(q.norm()) + " is not 1");
  }
}

UnitQuaternion UnitQuaternion::normalize(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::domain_error("UnitQuaternion::normalize: cannot normalize norm " + std::to_string(n));
  }
  return UnitQuaternion(q * (1.0 / n), Unchecked{});
}

UnitQuaternion UnitQuaternion::exp_axis(const ImVec& axis, double theta) {
  const double s = std::sin(theta);
  return normalize({std::cos(theta), s * axis.x, s * axis.y, s * axis.z});
}

UnitQuaternion haar_random(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (q.norm2() > 1e-24) return UnitQuaternion::normalize(q);
  }
}

ImVec rotate_ad(const UnitQuaternion& g, const ImVec& v) {
  const Quaternion& q = g.value();
  return (q * Quaternion::pure(v) * q.conj()).im();
}

Direction::Direction(const ImVec& v) {
  const auto c = canonical_unit<3>({v.x, v.y, v.z}, kDegenerateTolerance, "imaginary vector");
  v_ = {c[0], c[1], c[2]};
}

Direction im_direction(const Quaternion& q) { return Direction(q.im()); }

double angle_between(const Direction& d1, const Direction& d2) {
  return projective_angle<3>({d1.x(), d1.y(), d1.z()}, {d2.x(), d2.y(), d2.z()});
}

QuaternionLine::QuaternionLine(const Quaternion& q)
    : q_(Quaternion::from_coeffs(canonical_unit<4>(q.coeffs(), kDegenerateTolerance, "quaternion"))) {}

double projective_distance(const QuaternionLine& l1, const QuaternionLine& l2) {
  return projective_angle<4>(l1.rep().coeffs(), l2.rep().coeffs());
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

std::ostream& operator<<(std::ostream& os, const ImVec& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

std::ostream& operator<<(std::ostream& os, const Direction& d) { return os << "[" << d.vec() << "]"; }

} // namespace sqtile
