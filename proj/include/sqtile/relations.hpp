#pragma once

#include "sqtile/representation.hpp"
#include "sqtile/surface.hpp"

#include <cstdint>
#include <vector>

namespace sqtile {

/// A fixed family of sampled representations used to decide word equality
/// modulo the square relations: two words are equal when they evaluate to the
/// same quaternion on every witness.
class WitnessSet {
public:
  static constexpr int kDefaultCount = 32;
  static constexpr double kDefaultTolerance = 1e-6;
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'5157'a11e'0001ULL;

  explicit WitnessSet(int count = kDefaultCount, std::uint64_t seed = kDefaultSeed);
  explicit WitnessSet(std::vector<Representation> reps) : reps_(std::move(reps)) {}

  const std::vector<Representation>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

private:
  std::vector<Representation> reps_;
};

/// Shared default witness set (32 witnesses, fixed seed).
const WitnessSet& default_witnesses();

/// max over witnesses of |rho(w1) - rho(w2)|; zero when the free reductions
/// agree letter by letter. Throws TypeMismatch when endpoints differ.
double word_discrepancy(const TypedWord& w1, const TypedWord& w2, const WitnessSet& witnesses = default_witnesses());

bool equal_mod_relations(const TypedWord& w1, const TypedWord& w2, const WitnessSet& witnesses = default_witnesses(),
                         double tolerance = WitnessSet::kDefaultTolerance);

/// Same, with `witnesses` freshly sampled representations.
bool equal_mod_relations(const TypedWord& w1, const TypedWord& w2, int witnesses);

} // namespace sqtile
