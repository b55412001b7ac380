#pragma once

#include "sqtile/automorphism.hpp"
#include "sqtile/invariants.hpp"
#include "sqtile/lemmas.hpp"

#include <functional>
#include <vector>

namespace sqtile {

/// Generators with their inverses, e.g. {A, A^-1, B, B^-1, ...}.
std::vector<Automorphism> with_inverses(const std::vector<Automorphism>& gens);

/// A, B, C, D and inverses.
const std::vector<Automorphism>& gamma1_alphabet();
/// Ad(b1)^-1 g Ad(b1) for g in B, C, D, E, and inverses.
const std::vector<Automorphism>& conjugated_gamma2_alphabet();

/// pullback along the product f1 f2 ... fk, i.e. f1 acts outermost.
Representation pullback_word(const Representation& rho, const std::vector<const Automorphism*>& word);

/// gamma_generator(C^i D^j, ((CD)^-1 B (CD))^m) for random exponents in
/// [-max_exponent, max_exponent].
std::vector<GammaElement> random_gamma_pool(Rng& rng, std::size_t count, int max_exponent = 3);

struct InvarianceStats {
  std::size_t trials = 0;
  double worst = 0.0; ///< largest observed change
};

/// Draws `trials` (rho, word) pairs, words of length 1..max_length over
/// `alphabet`, and measures |f(pullback(rho, word)) - f(rho)|.
InvarianceStats measure_invariance(Rng& rng, std::size_t trials, const std::vector<Automorphism>& alphabet,
                                   std::size_t max_length,
                                   const std::function<double(const Representation&, const Representation&)>& change);

double dir2_change(const Representation& before, const Representation& after);
double dir1_change(const Representation& before, const Representation& after);
double angle_change(const Representation& before, const Representation& after);

/// Worst |angle(g rho g^-1) - angle(rho)| over random rho and g.
InvarianceStats measure_conjugation_invariance(Rng& rng, std::size_t trials);

/// Largest single-step movements found over `samples` representations:
/// dir2 under E, dir1 under A, and the angle under A.
struct NegativeControls {
  double dir2_by_E = 0.0;
  double dir1_by_A = 0.0;
  double angle_by_A = 0.0;
};
NegativeControls measure_negative_controls(Rng& rng, std::size_t samples);

/// Representation with non-degenerate invariant directions.
Representation sample_generic(Rng& rng);

} // namespace sqtile
