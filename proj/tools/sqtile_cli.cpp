#include "sqtile/commands.hpp"
#include "sqtile/errors.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

namespace {

// Returns an open stream for cfg.out, or std::cout when no path is given.
std::ostream& open_output(const sqtile::RunConfig& cfg, std::ofstream& file) {
  if (cfg.out.empty()) return std::cout;
  file.open(cfg.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + cfg.out + "'");
  return file;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SQTILE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed SQTILE_SEED='" << env << "'\n";
    }
  }
  return 1;
}

} // namespace

int main(int argc, char** argv) {
  sqtile::RunConfig cfg;
  cfg.seed = default_seed();
  std::string word_spec;

  CLI::App app{"Lifted Dehn twists on a genus 2 square-tiled surface and their SU(2) invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Base seed (default from SQTILE_SEED, else 1)");
  app.add_option("--witnesses", cfg.witnesses, "Random witnesses for word equality")->check(CLI::PositiveNumber);
  app.add_option("--tol-residual", cfg.tol_residual, "Tolerance for word and relation residuals")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-invariance", cfg.tol_invariance, "Tolerance for projective distance and angle changes")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  const std::map<std::string, sqtile::OutputFormat> formats{{"csv", sqtile::OutputFormat::csv},
                                                            {"json", sqtile::OutputFormat::json}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--corrupt-twist", cfg.corrupt_twist)->group("");

  CLI::App* verify = app.add_subcommand("verify", "Run every identity and invariance check");
  verify->add_option("--samples", cfg.samples, "Representations for sampler checks")->check(CLI::PositiveNumber);
  verify->add_option("--trials", cfg.trials, "Random (rho, word) pairs per invariance family")
      ->check(CLI::PositiveNumber);

  CLI::App* scan = app.add_subcommand("scan", "Sample the invariant over the representation variety");
  scan->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);

  CLI::App* orbit = app.add_subcommand("orbit", "Follow the invariant along repeated pullbacks");
  orbit->add_option("word", word_spec, "Automorphism, e.g. \"gamma(CD, (CD)^-1 B (CD))\" or \"A\"")->required();
  orbit->add_option("--steps", cfg.steps, "Number of pullback steps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    sqtile::validate_config(cfg);
    std::ofstream file;
    if (verify->parsed()) {
      const sqtile::Report report = sqtile::run_verify(cfg);
      std::ostream& os = open_output(cfg, file);
      os << (cfg.format == sqtile::OutputFormat::json ? report.to_json() + "\n" : report.to_text());
      if (!cfg.out.empty()) std::cout << report.checks().size() - report.failures() << "/" << report.checks().size()
                                      << " checks passed\n";
      return report.all_passed() ? 0 : 1;
    }
    if (scan->parsed()) {
      const sqtile::CoverageReport report = sqtile::run_scan(cfg);
      sqtile::write_scan(open_output(cfg, file), report, cfg.format);
      std::cerr << sqtile::scan_summary(report) << '\n';
      return 0;
    }
    const auto rows = sqtile::run_orbit(cfg, word_spec);
    sqtile::write_orbit(open_output(cfg, file), rows, cfg.format);
    return 0;
  } catch (const sqtile::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
