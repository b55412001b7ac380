#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>

namespace sqtile {

/// Pseudo-random engine used everywhere a seed is accepted.
using Rng = std::mt19937_64;

/// Imaginary quaternion x·i + y·j + z·k, i.e. a vector of R^3.
struct ImVec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  ImVec operator+(const ImVec& o) const { return {x + o.x, y + o.y, z + o.z}; }
  ImVec operator-(const ImVec& o) const { return {x - o.x, y - o.y, z - o.z}; }
  ImVec operator-() const { return {-x, -y, -z}; }
  ImVec operator*(double s) const { return {x * s, y * s, z * s}; }

  double norm() const;
};

double dot(const ImVec& a, const ImVec& b);
ImVec cross(const ImVec& a, const ImVec& b);

/// Real quaternion w + x·i + y·j + z·k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
  static Quaternion pure(const ImVec& v) { return {0.0, v.x, v.y, v.z}; }

  double re() const { return w; }
  ImVec im() const { return {x, y, z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const;
  /// Twice the real part: the trace of the corresponding SU(2) matrix.
  double trace() const { return 2.0 * w; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// Multiplicative inverse; undefined for the zero quaternion.
  Quaternion inverse() const;

  Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

  std::array<double, 4> coeffs() const { return {w, x, y, z}; }
  static Quaternion from_coeffs(const std::array<double, 4>& c) { return {c[0], c[1], c[2], c[3]}; }

  bool operator==(const Quaternion&) const = default;
};

/// Hamilton product.
Quaternion operator*(const Quaternion& p, const Quaternion& q);

/// Euclidean distance in R^4.
double distance(const Quaternion& p, const Quaternion& q);

/// Element of SU(2), stored as a quaternion of norm one.
class UnitQuaternion {
public:
  static constexpr double kNormTolerance = 1e-12;

  UnitQuaternion() : q_(Quaternion::one()) {}
  /// Throws std::domain_error unless |q| = 1 within kNormTolerance.
  explicit UnitQuaternion(const Quaternion& q);

  /// Rescales q onto the unit sphere; throws std::domain_error for q = 0.
  static UnitQuaternion normalize(const Quaternion& q);
  static UnitQuaternion identity() { return {}; }
  /// exp(theta·axis) = cos(theta) + sin(theta)·axis for a unit imaginary axis.
  static UnitQuaternion exp_axis(const ImVec& axis, double theta);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }

  double w() const { return q_.w; }
  ImVec im() const { return q_.im(); }
  double trace() const { return q_.trace(); }

  /// For unit quaternions the inverse is the conjugate.
  UnitQuaternion inverse() const { return UnitQuaternion(q_.conj(), Unchecked{}); }

  UnitQuaternion operator*(const UnitQuaternion& o) const { return UnitQuaternion(q_ * o.q_, Unchecked{}); }

  bool operator==(const UnitQuaternion&) const = default;

private:
  struct Unchecked {};
  UnitQuaternion(const Quaternion& q, Unchecked) : q_(q) {}

  Quaternion q_;
};

/// Haar-distributed element of SU(2): a normalized standard Gaussian 4-vector.
UnitQuaternion haar_random(Rng& rng);

/// Im(g·v·g^-1), the rotation of R^3 induced by g.
ImVec rotate_ad(const UnitQuaternion& g, const ImVec& v);

/// Point of the projective plane of imaginary quaternions, stored as a unit
/// vector whose first nonzero coordinate is positive.
class Direction {
public:
  static constexpr double kDegenerateTolerance = 1e-9;

  /// Throws DegenerateDirection when |v| < kDegenerateTolerance.
  explicit Direction(const ImVec& v);

  const ImVec& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  bool operator==(const Direction&) const = default;

private:
  ImVec v_;
};

/// Projectivization of the imaginary part of q.
Direction im_direction(const Quaternion& q);

/// Angle in [0, pi/2] between two lines of R^3.
double angle_between(const Direction& d1, const Direction& d2);

/// Point of the projective space of H (a real line through 0 in R^4), same
/// sign convention as Direction.
class QuaternionLine {
public:
  static constexpr double kDegenerateTolerance = 1e-9;

  explicit QuaternionLine(const Quaternion& q);

  const Quaternion& rep() const { return q_; }

private:
  Quaternion q_;
};

/// Angle in [0, pi/2] between two lines of R^4.
double projective_distance(const QuaternionLine& l1, const QuaternionLine& l2);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const ImVec& v);
std::ostream& operator<<(std::ostream& os, const Direction& d);

} // namespace sqtile
