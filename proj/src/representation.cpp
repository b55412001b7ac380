#include "sqtile/representation.hpp"

#include "sqtile/automorphism.hpp"
#include "sqtile/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace sqtile {

std::size_t Representation::slot(const GeneratorLabel& g) {
  if (g.index < 1 || g.index > 4) throw std::invalid_argument("no edge " + g.to_string() + " in S'");
  return static_cast<std::size_t>((g.family == Family::a ? 0 : 4) + g.index - 1);
}

Representation Representation::with(const GeneratorLabel& g, const UnitQuaternion& q) const {
  Representation out = *this;
  out.images_[slot(g)] = q;
  return out;
}

std::string Representation::to_line() const {
  std::string out;
  char buf[32];
  for (const auto& img : images_) {
    for (double c : img.value().coeffs()) {
      if (!out.empty()) out += ' ';
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out += buf;
    }
  }
  return out;
}

Representation Representation::from_line(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::array<double, 32> v{};
  for (double& x : v) {
    if (!(is >> x)) throw ParseError("representation line needs 32 numbers");
  }
  if (std::string extra; is >> extra) throw ParseError("trailing text after 32 numbers: '" + extra + "'");
  std::array<UnitQuaternion, 8> images;
  for (std::size_t k = 0; k < 8; ++k) {
    const Quaternion q{v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]};
    if (std::abs(q.norm() - 1.0) > 1e-9) throw ParseError("component " + std::to_string(k) + " is not a unit quaternion");
    // keep exact values when already unit so that to_line/from_line round-trips bitwise
    const bool exact = std::abs(q.norm() - 1.0) <= UnitQuaternion::kNormTolerance;
    images[k] = exact ? UnitQuaternion(q) : UnitQuaternion::normalize(q);
  }
  return Representation(images);
}

double relation_residual(const Representation& rho) {
  double worst = 0.0;
  for (const Square& sq : s_prime().squares()) {
    const Quaternion lhs = rho[sq.bottom].value() * rho[sq.right].value();
    const Quaternion rhs = rho[sq.left].value() * rho[sq.top].value();
    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

Representation conjugate_rep(const Representation& rho, const UnitQuaternion& g) {
  std::array<UnitQuaternion, 8> out;
  const UnitQuaternion gi = g.inverse();
  for (std::size_t k = 0; k < 8; ++k) out[k] = g * rho.images()[k] * gi;
  return Representation(out);
}

UnitQuaternion evaluate_word(const TypedWord& w, const Representation& rho) {
  // Single letters are returned exactly so that pullback by the identity is the identity.
  if (w.size() == 1) {
    const Letter& l = w.letters().front();
    return l.exponent > 0 ? rho[l.label] : rho[l.label].inverse();
  }
  Quaternion acc = Quaternion::one();
  std::size_t since_normalize = 0;
  for (const Letter& l : w.letters()) {
    const UnitQuaternion& img = rho[l.label];
    acc = acc * (l.exponent > 0 ? img.value() : img.value().conj());
    if (++since_normalize == 64) {
      acc = UnitQuaternion::normalize(acc).value();
      since_normalize = 0;
    }
  }
  return UnitQuaternion::normalize(acc);
}

Representation pullback(const Representation& rho, const Automorphism& phi) {
  std::array<UnitQuaternion, 8> out;
  for (const GeneratorLabel& g : s_prime().labels()) {
    out[Representation::slot(g)] = evaluate_word(phi.image(g), rho);
  }
  return Representation(out);
}

UnitQuaternion solve_conjugator(const UnitQuaternion& p, const UnitQuaternion& q, double theta,
                                double axis_tolerance) {
  if (std::abs(p.w() - q.w()) > 1e-9) {
    throw TraceMismatch("Re p = " + std::to_string(p.w()) + ", Re q = " + std::to_string(q.w()));
  }
  const double np = p.im().norm();
  const double nq = q.im().norm();
  if (np < axis_tolerance || nq < axis_tolerance) {
    throw DegenerateAxis("imaginary part of norm " + std::to_string(std::min(np, nq)));
  }
  const ImVec u = p.im() * (1.0 / np);
  const ImVec v = q.im() * (1.0 / nq);

  // Half-angle rotation taking u to v: 1 + <u,v> + u×v, normalized.
  const double c = dot(u, v);
  UnitQuaternion g0;
  if (c > -1.0 + 1e-12) {
    const ImVec x = cross(u, v);
    g0 = UnitQuaternion::normalize({1.0 + c, x.x, x.y, x.z});
  } else {
    // Antipodal axes: a half turn about any axis orthogonal to u.
    ImVec helper = std::abs(u.x) < 0.9 ? ImVec{1, 0, 0} : ImVec{0, 1, 0};
    ImVec perp = cross(u, helper);
    perp = perp * (1.0 / perp.norm());
    g0 = UnitQuaternion::normalize(Quaternion::pure(perp));
  }
  return g0 * UnitQuaternion::exp_axis(u, theta);
}

namespace {

// Unit vector of the hyperplane orthogonal to `normal`, uniform on its sphere.
Quaternion draw_in_kernel(Rng& rng, const std::array<double, 4>& normal) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double n2 = 0.0;
  for (double c : normal) n2 += c * c;
  for (;;) {
    std::array<double, 4> x{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (n2 > 1e-24) {
      double proj = 0.0;
      for (std::size_t k = 0; k < 4; ++k) proj += x[k] * normal[k];
      for (std::size_t k = 0; k < 4; ++k) x[k] -= proj / n2 * normal[k];
    }
    const Quaternion q = Quaternion::from_coeffs(x);
    if (q.norm2() > 1e-24) return q * (1.0 / q.norm());
  }
}

} // namespace

Representation sample_rep(Rng& rng, const SamplerConfig& cfg) {
  std::uniform_real_distribution<double> circle(0.0, 2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const UnitQuaternion B1 = haar_random(rng);
    const UnitQuaternion A1 = haar_random(rng);
    const UnitQuaternion A3 = haar_random(rng);
    const UnitQuaternion B2 = A1.inverse() * B1 * A1;
    const UnitQuaternion A2 = B2 * A3 * B1.inverse();

    // Re(A3·X·A2^-1 - X) is linear in X; its coefficient vector is the normal.
    std::array<double, 4> normal{};
    const std::array<Quaternion, 4> basis{Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0},
                                          Quaternion{0, 0, 0, 1}};
    for (std::size_t k = 0; k < 4; ++k) {
      normal[k] = (A3.value() * basis[k] * A2.value().conj() - basis[k]).w;
    }
    const UnitQuaternion B3 = UnitQuaternion::normalize(draw_in_kernel(rng, normal));
    const UnitQuaternion B4 = A3 * B3 * A2.inverse();
    const double theta = circle(rng);

    if (B3.im().norm() < cfg.degeneracy_tolerance || B4.im().norm() < cfg.degeneracy_tolerance) continue;
    try {
      const UnitQuaternion A4 = solve_conjugator(B4, B3, theta, cfg.degeneracy_tolerance);
      return Representation({A1, A2, A3, A4, B1, B2, B3, B4});
    } catch (const TraceMismatch&) {
      continue;
    } catch (const DegenerateAxis&) {
      continue;
    }
  }
  throw DegenerateSample("no non-degenerate draw in " + std::to_string(cfg.max_attempts) + " attempts");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Representation sample_rep(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return sample_rep(rng, cfg);
}

} // namespace sqtile
