#pragma once

#include "sqtile/quaternion.hpp"
#include "sqtile/surface.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace sqtile {

class Automorphism;

/// Images of the eight edges of S' in SU(2): A1..A4 = rho(a1..a4) and
/// B1..B4 = rho(b1..b4). The square relations are not enforced on
/// construction; relation_residual measures them.
class Representation {
public:
  static constexpr double kValidResidual = 1e-9;

  Representation() = default;
  /// Components in the order A1..A4, B1..B4.
  explicit Representation(const std::array<UnitQuaternion, 8>& images) : images_(images) {}

  static Representation trivial() { return {}; }

  const UnitQuaternion& A(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const UnitQuaternion& B(int i) const { return images_.at(static_cast<std::size_t>(i + 3)); }
  const UnitQuaternion& operator[](const GeneratorLabel& g) const { return images_.at(slot(g)); }

  Representation with(const GeneratorLabel& g, const UnitQuaternion& q) const;

  const std::array<UnitQuaternion, 8>& images() const { return images_; }

  /// 32 numbers (A1..A4, B1..B4, each w x y z), 17 significant digits.
  std::string to_line() const;
  /// Parses to_line() output; throws ParseError. Components are renormalized.
  static Representation from_line(std::string_view line);

  static std::size_t slot(const GeneratorLabel& g);

private:
  std::array<UnitQuaternion, 8> images_{};
};

/// max over the four squares of |bottom·right - left·top|.
double relation_residual(const Representation& rho);

/// g·rho·g^-1 componentwise.
Representation conjugate_rep(const Representation& rho, const UnitQuaternion& g);

/// Ordered product of the letter images; inverse letters contribute inverses.
/// The running product is renormalized every 64 factors.
UnitQuaternion evaluate_word(const TypedWord& w, const Representation& rho);

/// (rho·phi)(g) = rho(phi(g)). Contravariant: pullback(rho, phi∘psi) equals
/// pullback(pullback(rho, phi), psi).
Representation pullback(const Representation& rho, const Automorphism& phi);

/// Independent seed for sub-stream `stream` of `base` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct SamplerConfig {
  std::uint64_t seed = 0;
  double degeneracy_tolerance = 1e-6;
  int max_attempts = 100;
};

/// Draws a point of the representation variety by solving the square
/// relations in turn: B1, A1, A3 Haar; B2 from the first square; A2 from the
/// second; B3 on the kernel of the trace-matching functional; B4 from the
/// third; A4 on the circle of conjugators for the fourth.
/// Throws DegenerateSample after cfg.max_attempts rejected draws.
Representation sample_rep(const SamplerConfig& cfg);
Representation sample_rep(Rng& rng, const SamplerConfig& cfg = {});

/// Returns g with g·p·g^-1 = q. The solutions form the circle
/// {g0·exp(t·axis(p))}; theta picks the point t = theta.
/// Throws TraceMismatch when Re p != Re q (tolerance 1e-9) and DegenerateAxis
/// when |Im p| is below the tolerance.
UnitQuaternion solve_conjugator(const UnitQuaternion& p, const UnitQuaternion& q, double theta = 0.0,
                                double axis_tolerance = 1e-9);

} // namespace sqtile
