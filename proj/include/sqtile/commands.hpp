#pragma once

#include "sqtile/invariants.hpp"
#include "sqtile/relations.hpp"
#include "sqtile/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sqtile {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 10000;    ///< scan size
  std::size_t trials = 100;       ///< random (rho, word) pairs per invariance family in verify
  std::size_t steps = 50;         ///< orbit length
  int witnesses = WitnessSet::kDefaultCount;
  double tol_residual = 1e-6;     ///< word equality and twist validation
  double tol_invariance = 1e-6;   ///< projective distance and angle
  double tol_conjugation = 1e-9;  ///< angle under global conjugation
  std::string out;                ///< output path; empty means stdout
  OutputFormat format = OutputFormat::csv;
  /// Test hook: replace A by the broken table a1 -> a1.b4 before validation.
  bool corrupt_twist = false;
};

/// Throws std::invalid_argument on non-positive counts or tolerances.
void validate_config(const RunConfig& cfg);

/// Runs every named check: topology, twist tables, chain lift, stabilizers,
/// membership, sampler, rank and intersection, invariance, conjugation.
Report run_verify(const RunConfig& cfg);

/// surjectivity_scan(cfg.samples) seeded with cfg.seed.
CoverageReport run_scan(const RunConfig& cfg);

/// Columns: seed, angle, cos2, dir1 x y z, dir2 x y z, residual.
void write_scan(std::ostream& os, const CoverageReport& report, OutputFormat format);
std::string scan_summary(const CoverageReport& report);

struct OrbitRow {
  std::size_t step = 0;
  double angle = 0.0; ///< NaN where a direction degenerates
  double residual = 0.0;
};

/// Pulls a sampled representation back cfg.steps times along the automorphism
/// named by `word_spec`; row 0 is the starting point.
std::vector<OrbitRow> run_orbit(const RunConfig& cfg, std::string_view word_spec);
void write_orbit(std::ostream& os, const std::vector<OrbitRow>& rows, OutputFormat format);

} // namespace sqtile
