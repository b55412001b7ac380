#pragma once

#include "sqtile/automorphism.hpp"
#include "sqtile/report.hpp"

namespace sqtile {

/// Frequently used products of the standard twists.
struct ChainProducts {
  Automorphism abc;         ///< ABC
  Automorphism abc2;        ///< (ABC)^2
  Automorphism abc4;        ///< (ABC)^4
  Automorphism abc_inv;     ///< (ABC)^-1
  Automorphism abc_inv2;    ///< (ABC)^-2
  Automorphism abc_inv4;    ///< (ABC)^-4
  Automorphism e2;          ///< E^2
  Automorphism e_inv2;      ///< E^-2
  Automorphism cd;          ///< CD
  Automorphism w_generator; ///< (CD)^-1 B (CD)
};

const ChainProducts& chain_products();

/// Checks the lift of the chain relation: every intermediate word identity of
/// the derivation, (ABC)^4 = Ad(b3^-1) E^2 on the loops at u,
/// (ABC)^4 = Ad(b4) E^2 on the loops at v, and their assembly into a single
/// groupoid identity with inner part Ad(b3^-1, b4).
Report verify_chain_lift(const WitnessSet& witnesses = default_witnesses(),
                         double tolerance = WitnessSet::kDefaultTolerance);

/// Stabilizer facts: C and D fix b1; A, B, C fix a4 and b4; E fixes b3 (all
/// letter-exact); B fixes a4.a2 and CD(b1.b3) = a2^-1.a4^-1 modulo relations.
Report verify_stabilizers(const WitnessSet& witnesses = default_witnesses(),
                          double tolerance = WitnessSet::kDefaultTolerance);

/// V Ad(b3) E^-2 W E^2 Ad(b3^-1) with its two rewritings.
struct GammaElement {
  Automorphism element;
  Automorphism gamma1_form; ///< V (ABC)^-4 W (ABC)^4, a word in A, B, C, D
  Automorphism gamma2_form; ///< Ad(b1)^-1 (V E^-2 W E^2) Ad(b1), a conjugated word in B, C, D, E
  double gamma1_residual = 0.0; ///< measured on the loops at the base point u
  double gamma2_residual = 0.0; ///< measured on all eight generators
};

/// Builds the element for V fixing b1 and W fixing b1.b3 (both modulo
/// relations); throws StabilizerViolation otherwise.
GammaElement gamma_generator(const Automorphism& V, const Automorphism& W,
                             const WitnessSet& witnesses = default_witnesses(),
                             double tolerance = WitnessSet::kDefaultTolerance);

/// Checks both rewritings of gamma_generator(CD, (CD)^-1 B (CD)).
Report verify_membership(const WitnessSet& witnesses = default_witnesses(),
                         double tolerance = WitnessSet::kDefaultTolerance);

} // namespace sqtile
