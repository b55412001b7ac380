#include "sqtile/homology.hpp"

#include "sqtile/errors.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>

namespace sqtile {

std::array<std::int64_t, 4> homology_class(const TypedWord& loop) {
  if (!loop.is_loop()) throw NotALoop(loop.to_string() + " is not a loop");
  // Edge counts over the quotient basis {a1, a2 = a3, a4, b1 = b2, b3 = b4}.
  std::int64_t a1 = 0, a2 = 0, a4 = 0, b1 = 0, b3 = 0;
  for (const Letter& l : loop.letters()) {
    const int e = l.exponent;
    if (l.label.family == Family::a) {
      switch (l.label.index) {
      case 1: a1 += e; break;
      case 2:
      case 3: a2 += e; break;
      default: a4 += e; break;
      }
    } else {
      (l.label.index <= 2 ? b1 : b3) += e;
    }
  }
  // A cycle satisfies a1 - a2 + a4 = 0, so a1 = [a1.a2] - [a4.a1^-1] is implied.
  if (a1 - a2 + a4 != 0) throw std::logic_error("abelianized loop is not a cycle");
  return {a2, a4, b1, b3};
}

std::int64_t integer_determinant(const HomologyMatrix& m) {
  // Cofactor expansion along the first row with 3x3 minors.
  auto minor3 = [&](int skip_col) {
    std::int64_t r[3][3];
    for (int i = 1; i < 4; ++i) {
      int c = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == skip_col) continue;
        r[i - 1][c++] = m(i, j);
      }
    }
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  };
  std::int64_t det = 0;
  for (int j = 0; j < 4; ++j) det += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor3(j);
  return det;
}

double spectral_radius(const HomologyMatrix& m) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(m.cast<double>(), false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

HomologyAction homology_action(const Automorphism& phi) {
  static const char* const basis[] = {"a1.a2", "a4.a1^-1", "b1", "b3"};
  HomologyAction out;
  for (int k = 0; k < 4; ++k) {
    const auto c = homology_class(phi.apply(parse_word(basis[k])));
    for (int i = 0; i < 4; ++i) out.matrix(i, k) = c[static_cast<std::size_t>(i)];
  }
  out.determinant = integer_determinant(out.matrix);
  out.spectral_radius = spectral_radius(out.matrix);
  return out;
}

} // namespace sqtile
