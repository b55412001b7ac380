#pragma once

#include "sqtile/automorphism.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>

namespace sqtile {

using HomologyMatrix = Eigen::Matrix<std::int64_t, 4, 4>;

/// Coordinates of a loop in H1(S') over the basis
/// ([a1.a2], [a4.a1^-1], [b1], [b3]). The abelianized square relations give
/// [a2] = [a3], [b1] = [b2] and [b3] = [b4].
std::array<std::int64_t, 4> homology_class(const TypedWord& loop);

struct HomologyAction {
  HomologyMatrix matrix;   ///< column k is the image of basis class k
  std::int64_t determinant = 0;
  double spectral_radius = 0.0;
};

/// Action induced on H1(S'); multiplicative: matrix(phi∘psi) = matrix(phi)·matrix(psi).
HomologyAction homology_action(const Automorphism& phi);

std::int64_t integer_determinant(const HomologyMatrix& m);
double spectral_radius(const HomologyMatrix& m);

} // namespace sqtile
