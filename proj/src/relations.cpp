#include "sqtile/relations.hpp"

#include "sqtile/errors.hpp"

#include <algorithm>

namespace sqtile {

WitnessSet::WitnessSet(int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("WitnessSet needs at least one witness");
  reps_.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    SamplerConfig cfg;
    cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(k));
    reps_.push_back(sample_rep(cfg));
  }
}

const WitnessSet& default_witnesses() {
  static const WitnessSet instance;
  return instance;
}

double word_discrepancy(const TypedWord& w1, const TypedWord& w2, const WitnessSet& witnesses) {
  if (w1.source() != w2.source() || w1.target() != w2.target()) {
    throw TypeMismatch(w1.to_string() + " and " + w2.to_string() + " have different endpoints");
  }
  if (free_reduce(w1) == free_reduce(w2)) return 0.0;
  double worst = 0.0;
  for (const Representation& rho : witnesses.reps()) {
    worst = std::max(worst, distance(evaluate_word(w1, rho), evaluate_word(w2, rho)));
  }
  return worst;
}

bool equal_mod_relations(const TypedWord& w1, const TypedWord& w2, const WitnessSet& witnesses, double tolerance) {
  return word_discrepancy(w1, w2, witnesses) < tolerance;
}

bool equal_mod_relations(const TypedWord& w1, const TypedWord& w2, int witnesses) {
  return equal_mod_relations(w1, w2, WitnessSet(witnesses));
}

} // namespace sqtile
