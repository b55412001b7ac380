#include "sqtile/invariance.hpp"

#include "sqtile/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sqtile {

std::vector<Automorphism> with_inverses(const std::vector<Automorphism>& gens) {
  std::vector<Automorphism> out;
  for (const Automorphism& g : gens) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

const std::vector<Automorphism>& gamma1_alphabet() {
  static const std::vector<Automorphism> instance = [] {
    const StandardTwists& t = standard_twists();
    return with_inverses({t.A, t.B, t.C, t.D});
  }();
  return instance;
}

const std::vector<Automorphism>& conjugated_gamma2_alphabet() {
  static const std::vector<Automorphism> instance = [] {
    const StandardTwists& t = standard_twists();
    const Automorphism ad = inner(parse_word("b1"));
    std::vector<Automorphism> gens;
    for (const Automorphism* g : {&t.B, &t.C, &t.D, &t.E}) {
      gens.push_back((ad.inverse() * *g * ad).renamed("Ad(b1)^-1 " + g->name() + " Ad(b1)"));
    }
    return with_inverses(gens);
  }();
  return instance;
}

Representation pullback_word(const Representation& rho, const std::vector<const Automorphism*>& word) {
  Representation out = rho;
  for (const Automorphism* f : word) out = pullback(out, *f);
  return out;
}

std::vector<GammaElement> random_gamma_pool(Rng& rng, std::size_t count, int max_exponent) {
  const StandardTwists& t = standard_twists();
  const ChainProducts& p = chain_products();
  std::uniform_int_distribution<int> exponent(-max_exponent, max_exponent);
  std::vector<GammaElement> pool;
  while (pool.size() < count) {
    const int i = exponent(rng);
    const int j = exponent(rng);
    const int m = exponent(rng);
    if (i == 0 && j == 0 && m == 0) continue;
    const Automorphism V = (power(t.C, i) * power(t.D, j))
                               .renamed("C^" + std::to_string(i) + " D^" + std::to_string(j));
    const Automorphism W = power(p.w_generator, m).renamed("((CD)^-1 B (CD))^" + std::to_string(m));
    pool.push_back(gamma_generator(V, W));
  }
  return pool;
}

Representation sample_generic(Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Representation rho = sample_rep(rng);
    try {
      angle_invariant(rho);
      return rho;
    } catch (const DegenerateDirection&) {
    }
  }
  throw DegenerateSample("no generic representation in 100 attempts");
}

InvarianceStats measure_invariance(Rng& rng, std::size_t trials, const std::vector<Automorphism>& alphabet,
                                   std::size_t max_length,
                                   const std::function<double(const Representation&, const Representation&)>& change) {
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  InvarianceStats out;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation rho = sample_generic(rng);
    std::vector<const Automorphism*> word(length(rng));
    for (auto& f : word) f = &alphabet[pick(rng)];
    out.worst = std::max(out.worst, change(rho, pullback_word(rho, word)));
    ++out.trials;
  }
  return out;
}

double dir2_change(const Representation& before, const Representation& after) {
  return angle_between(dir_gamma1(before), dir_gamma1(after));
}

double dir1_change(const Representation& before, const Representation& after) {
  return angle_between(dir_gamma2_conj(before), dir_gamma2_conj(after));
}

double angle_change(const Representation& before, const Representation& after) {
  return std::abs(angle_invariant(before).angle - angle_invariant(after).angle);
}

InvarianceStats measure_conjugation_invariance(Rng& rng, std::size_t trials) {
  InvarianceStats out;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation rho = sample_generic(rng);
    const UnitQuaternion g = haar_random(rng);
    out.worst = std::max(out.worst, angle_change(rho, conjugate_rep(rho, g)));
    ++out.trials;
  }
  return out;
}

NegativeControls measure_negative_controls(Rng& rng, std::size_t samples) {
  const StandardTwists& t = standard_twists();
  NegativeControls out;
  for (std::size_t k = 0; k < samples; ++k) {
    const Representation rho = sample_generic(rng);
    const Representation by_e = pullback(rho, t.E);
    const Representation by_a = pullback(rho, t.A);
    try {
      out.dir2_by_E = std::max(out.dir2_by_E, dir2_change(rho, by_e));
      out.dir1_by_A = std::max(out.dir1_by_A, dir1_change(rho, by_a));
      out.angle_by_A = std::max(out.angle_by_A, angle_change(rho, by_a));
    } catch (const DegenerateDirection&) {
    }
  }
  return out;
}

} // namespace sqtile
