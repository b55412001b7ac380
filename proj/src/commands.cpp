#include "sqtile/commands.hpp"

#include "sqtile/errors.hpp"
#include "sqtile/homology.hpp"
#include "sqtile/invariance.hpp"
#include "sqtile/lemmas.hpp"
#include "sqtile/word_spec.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace sqtile {

void validate_config(const RunConfig& cfg) {
  if (cfg.samples == 0 || cfg.trials == 0 || cfg.steps == 0 || cfg.witnesses <= 0) {
    throw std::invalid_argument("counts must be positive");
  }
  if (!(cfg.tol_residual > 0) || !(cfg.tol_invariance > 0) || !(cfg.tol_conjugation > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

namespace {

void verify_topology(Report& r) {
  const TopologyReport t = validate_topology(s_prime().squares());
  r.expect("topology.s_prime", "S' has 2 vertices, Euler characteristic -2, genus 2",
           t.vertices == 2 && t.euler == -2 && t.genus == 2,
           "V=" + std::to_string(t.vertices) + " chi=" + std::to_string(t.euler) + " g=" + std::to_string(t.genus));

  static const char* const words[] = {"a4.a1^-1", "a1.b2",          "b3.b1.a3^-1.b4", "a4^-1.a1",
                                      "b1.b3",    "a4.b2^-1.a2",    "a2^-1.b2",       "b3.a4.b2^-1.a2.b3^-1",
                                      "a4^-1.b1.a3^-1", "a2^-1.a4^-1", "a3^-1.b4",    "b1.a3^-1"};
  bool ok = true;
  std::string bad;
  for (const char* w : words) {
    try {
      parse_word(w);
    } catch (const Error&) {
      ok = false;
      bad += std::string(bad.empty() ? "" : ", ") + w;
    }
  }
  r.expect("topology.incidence", "every word of the chain-lift derivation is a composable path", ok,
           bad.empty() ? "" : "untyped: " + bad);
}

void verify_twists(Report& r, const RunConfig& cfg, const WitnessSet& witnesses) {
  StandardTwists t = build_standard_twists(witnesses);
  if (cfg.corrupt_twist) {
    const std::pair<const char*, const char*> fwd[] = {{"a1", "a1.b4"}};
    const std::pair<const char*, const char*> bwd[] = {{"a1", "a1.b4^-1"}};
    t.A = automorphism_from_images("A", fwd, bwd);
  }
  for (const Automorphism* phi : {&t.A, &t.B, &t.C, &t.D, &t.E}) {
    const InvariantCheck c = check_invariants(*phi, witnesses);
    r.check("twist." + phi->name() + ".relations", phi->name() + " sends each square relation to 1",
            c.relation_residual, cfg.tol_residual);
    r.check("twist." + phi->name() + ".inverse", phi->name() + "^-1 " + phi->name() + " = id",
            c.inverse_residual, cfg.tol_residual);
  }
  auto fragment = [&](std::string name, const Automorphism& phi, const char* arg, const char* expected) {
    const TypedWord got = phi.apply(parse_word(arg));
    r.expect(std::move(name), phi.name() + "(" + arg + ") = " + expected, got == parse_word(expected),
             "got " + got.to_string());
  };
  fragment("twist.fragment.A(a1)", t.A, "a1", "a1.b2");
  fragment("twist.fragment.E(a4)", t.E, "a4", "b3.a4");
  fragment("twist.fragment.B(b2)", t.B, "b2", "b2.a1^-1.a3^-1");
  fragment("twist.fragment.D(b3)", t.D, "b3", "b3.a2^-1.a4^-1");
  fragment("twist.fragment.C^-1(a3^-1)", t.C.inverse(), "a3^-1", "b3.b1.a3^-1");
}

void verify_homology(Report& r) {
  const StandardTwists& t = standard_twists();
  for (const Automorphism* phi : {&t.A, &t.B, &t.C, &t.D, &t.E}) {
    const HomologyAction h = homology_action(*phi);
    r.check("homology." + phi->name() + ".radius", "spectral radius of " + phi->name() + " on H1 is 1",
            std::abs(h.spectral_radius - 1.0), 1e-6);
  }
  const Automorphism pa = t.E * t.E * t.C * t.D * t.B * t.B;
  const HomologyAction h = homology_action(pa);
  std::ostringstream note;
  note << "spectral radius " << h.spectral_radius << (h.spectral_radius > 1.0 + 1e-6 ? ", off the unit circle" : ", on the unit circle");
  r.expect("homology.E^2CDB^2.unimodular", "E^2 C D B^2 acts on H1 with determinant +-1",
           h.determinant == 1 || h.determinant == -1, note.str());
  r.expect("homology.multiplicative", "matrix(E^2 C D B^2) = matrix(E)^2 matrix(C) matrix(D) matrix(B)^2",
           h.matrix == homology_action(t.E).matrix * homology_action(t.E).matrix * homology_action(t.C).matrix *
                           homology_action(t.D).matrix * homology_action(t.B).matrix * homology_action(t.B).matrix);
}

void verify_representations(Report& r, const RunConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, 0x7e57));
  const std::size_t n = std::min<std::size_t>(cfg.samples, 1000);
  double residual = 0.0, trace1 = 0.0, trace4 = 0.0, kernel = 0.0, images = 0.0, line = 0.0;
  std::size_t rank_ok = 0, line_ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Representation rho = sample_rep(rng);
    residual = std::max(residual, relation_residual(rho));
    trace1 = std::max(trace1, std::abs((rho.A(1) * rho.A(2)).trace() - (rho.A(1) * rho.A(3)).trace()));
    trace4 = std::max(trace4, std::abs((rho.A(4) * rho.A(2)).trace() - (rho.A(4) * rho.A(3)).trace()));
    const LinearEndoH phi = phi_map(rho);
    const LinearEndoH psi = psi_map(rho);
    kernel = std::max({kernel, apply(phi, rho.A(1).inverse()).norm(), apply(psi, rho.A(4).inverse()).norm()});
    const Quaternion diff = rho.A(2).value() - rho.A(3).value();
    images = std::max({images, distance(apply(phi, rho.A(3)), diff), distance(apply(psi, -rho.A(2).value()), diff)});
    if (numerical_rank(phi) == 2 && numerical_rank(psi) == 2) ++rank_ok;
    try {
      const double d = projective_distance(image_line_intersection(rho), QuaternionLine(diff));
      line = std::max(line, d);
      if (d < 1e-7) ++line_ok;
    } catch (const DegenerateIntersection&) {
    } catch (const DegenerateDirection&) {
    }
  }
  r.check("sampler.residual", "A1B2=B1A1, A2B1=B2A3, A3B3=B4A2, A4B4=B3A4 on sampled points", residual,
          Representation::kValidResidual);
  r.check("sampler.trace", "tr(A1A2)=tr(A1A3) and tr(A4A2)=tr(A4A3)", std::max(trace1, trace4), 1e-9);
  r.check("linear.kernel", "phi_B(A1^-1) = 0 and psi_B(A4^-1) = 0", kernel, 1e-9);
  r.check("linear.images", "phi_B(A3) = A2-A3 = psi_B(-A2)", images, 1e-9);
  const double frac_rank = static_cast<double>(rank_ok) / static_cast<double>(n);
  const double frac_line = static_cast<double>(line_ok) / static_cast<double>(n);
  r.expect("linear.rank", "rank phi_B = rank psi_B = 2 on >= 99% of samples", frac_rank >= 0.99,
           std::to_string(rank_ok) + "/" + std::to_string(n));
  r.expect("linear.intersection", "[A2-A3] = Im(phi_B) ∩ Im(psi_B) within 1e-7 on >= 99% of samples",
           frac_line >= 0.99, std::to_string(line_ok) + "/" + std::to_string(n) + ", worst " + std::to_string(line));
}

void verify_invariance(Report& r, const RunConfig& cfg) {
  Rng rng(derive_seed(cfg.seed, 0x1a7a));
  const auto g1 = measure_invariance(rng, cfg.trials, gamma1_alphabet(), 10, dir2_change);
  r.check("invariance.dir2.Gamma1", "[A4A2-A4A3] is invariant under words in A, B, C, D", g1.worst,
          cfg.tol_invariance);
  const auto g2 = measure_invariance(rng, cfg.trials, conjugated_gamma2_alphabet(), 10, dir1_change);
  r.check("invariance.dir1.Gamma2conj", "Ad(B1)^-1[A1A2-A1A3] is invariant under Ad(b1)^-1 <B,C,D,E> Ad(b1)",
          g2.worst, cfg.tol_invariance);
  std::vector<Automorphism> gammas;
  for (const GammaElement& g : random_gamma_pool(rng, 6)) gammas.push_back(g.element);
  const auto ga = measure_invariance(rng, cfg.trials, gammas, 10, angle_change);
  r.check("invariance.angle.Gamma", "the angle is invariant under products of gamma(V, W)", ga.worst,
          cfg.tol_invariance);
  const auto conj = measure_conjugation_invariance(rng, cfg.trials);
  r.check("invariance.angle.conjugation", "the angle is invariant under global conjugation", conj.worst,
          cfg.tol_conjugation);
  const NegativeControls neg = measure_negative_controls(rng, 20);
  r.expect("control.dir2.E", "E moves [A4A2-A4A3] by more than 1e-3 on some sample", neg.dir2_by_E > 1e-3,
           "max " + std::to_string(neg.dir2_by_E));
  r.expect("control.dir1.A", "A moves Ad(B1)^-1[A1A2-A1A3] by more than 1e-3 on some sample", neg.dir1_by_A > 1e-3,
           "max " + std::to_string(neg.dir1_by_A));
  r.expect("control.angle.A", "A moves the angle by more than 1e-3 on some sample", neg.angle_by_A > 1e-3,
           "max " + std::to_string(neg.angle_by_A));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

} // namespace

Report run_verify(const RunConfig& cfg) {
  validate_config(cfg);
  const WitnessSet witnesses(cfg.witnesses, derive_seed(cfg.seed, 0x3717));
  Report r;
  verify_topology(r);
  verify_twists(r, cfg, witnesses);
  if (cfg.corrupt_twist) return r;
  r.append(verify_stabilizers(witnesses, cfg.tol_residual));
  r.append(verify_chain_lift(witnesses, cfg.tol_residual));
  r.append(verify_membership(witnesses, cfg.tol_residual));
  verify_homology(r);
  verify_representations(r, cfg);
  verify_invariance(r, cfg);
  return r;
}

CoverageReport run_scan(const RunConfig& cfg) {
  validate_config(cfg);
  SamplerConfig sc;
  sc.seed = cfg.seed;
  return surjectivity_scan(cfg.samples, sc);
}

void write_scan(std::ostream& os, const CoverageReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ScanRow& r : report.rows) {
      const ImVec& d1 = r.value.dir1.vec();
      const ImVec& d2 = r.value.dir2.vec();
      rows.push_back({{"seed", r.seed},
                      {"angle", r.value.angle},
                      {"cos2", r.value.cos2},
                      {"dir1", {d1.x, d1.y, d1.z}},
                      {"dir2", {d2.x, d2.y, d2.z}},
                      {"residual", r.residual}});
    }
    nlohmann::json summary{{"samples", report.rows.size()},
                           {"octants_hit", report.octants_hit()},
                           {"octant_hits", report.octant_hits},
                           {"angle_min", report.angle_min},
                           {"angle_max", report.angle_max},
                           {"angle_mean", report.angle_mean},
                           {"angle_stddev", report.angle_stddev},
                           {"rejected", report.rejected}};
    os << nlohmann::json{{"summary", summary}, {"rows", rows}}.dump(1) << '\n';
    return;
  }
  os << "seed,angle,cos2,dir1_x,dir1_y,dir1_z,dir2_x,dir2_y,dir2_z,residual\n";
  for (const ScanRow& r : report.rows) {
    const ImVec& d1 = r.value.dir1.vec();
    const ImVec& d2 = r.value.dir2.vec();
    os << r.seed << ',' << fmt(r.value.angle) << ',' << fmt(r.value.cos2) << ',' << fmt(d1.x) << ',' << fmt(d1.y)
       << ',' << fmt(d1.z) << ',' << fmt(d2.x) << ',' << fmt(d2.y) << ',' << fmt(d2.z) << ',' << fmt(r.residual)
       << '\n';
  }
}

std::string scan_summary(const CoverageReport& report) {
  std::ostringstream os;
  os << "samples " << report.rows.size() << ", octants hit by dir1 " << report.octants_hit() << "/8"
     << ", angle range [" << report.angle_min << ", " << report.angle_max << "] spread " << report.angle_spread()
     << ", mean " << report.angle_mean << ", stddev " << report.angle_stddev << ", rejected draws "
     << report.rejected;
  return os.str();
}

std::vector<OrbitRow> run_orbit(const RunConfig& cfg, std::string_view word_spec) {
  validate_config(cfg);
  const Automorphism phi = parse_word_spec(word_spec);
  Rng rng(cfg.seed);
  Representation rho = sample_generic(rng);
  std::vector<OrbitRow> rows;
  for (std::size_t step = 0; step <= cfg.steps; ++step) {
    double angle = std::numeric_limits<double>::quiet_NaN();
    try {
      angle = angle_invariant(rho).angle;
    } catch (const DegenerateDirection&) {
    }
    rows.push_back({step, angle, relation_residual(rho)});
    if (step < cfg.steps) rho = pullback(rho, phi);
  }
  return rows;
}

void write_orbit(std::ostream& os, const std::vector<OrbitRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::json j = nlohmann::json::array();
    for (const OrbitRow& r : rows) {
      j.push_back({{"step", r.step},
                   {"angle", std::isnan(r.angle) ? nlohmann::json(nullptr) : nlohmann::json(r.angle)},
                   {"residual", r.residual}});
    }
    os << j.dump(1) << '\n';
    return;
  }
  os << "step,angle,residual\n";
  for (const OrbitRow& r : rows) os << r.step << ',' << fmt(r.angle) << ',' << fmt(r.residual) << '\n';
}

} // namespace sqtile
