#pragma once

// Reference computations that bypass the library's own quaternion code.

#include "sqtile/quaternion.hpp"
#include "sqtile/representation.hpp"

#include <Eigen/Geometry>

#include <string>
#include <vector>

namespace oracle {

inline Eigen::Quaterniond eig(const sqtile::Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
inline Eigen::Quaterniond eig(const sqtile::UnitQuaternion& q) { return eig(q.value()); }

inline double dist(const Eigen::Quaterniond& p, const Eigen::Quaterniond& q) { return (p.coeffs() - q.coeffs()).norm(); }

// Evaluates a word written as tokens like "a1", "b2^-1" on rho.
inline Eigen::Quaterniond eval(const std::vector<std::string>& tokens, const sqtile::Representation& rho) {
  Eigen::Quaterniond acc = Eigen::Quaterniond::Identity();
  for (const std::string& t : tokens) {
    const int idx = t[1] - '0';
    Eigen::Quaterniond g = eig(t[0] == 'a' ? rho.A(idx) : rho.B(idx));
    if (t.size() > 2) g = g.conjugate();
    acc = acc * g;
  }
  return acc;
}

// max over the four square relations, written out by hand.
inline double residual(const sqtile::Representation& r) {
  auto A = [&](int i) { return eig(r.A(i)); };
  auto B = [&](int i) { return eig(r.B(i)); };
  return std::max({dist(A(1) * B(2), B(1) * A(1)), dist(A(2) * B(1), B(2) * A(3)), dist(A(3) * B(3), B(4) * A(2)),
                   dist(A(4) * B(4), B(3) * A(4))});
}

} // namespace oracle
