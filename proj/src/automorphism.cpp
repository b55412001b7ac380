#include "sqtile/automorphism.hpp"

#include "sqtile/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sqtile {

namespace {

std::vector<TypedWord> identity_table() { return edge_words(); }

TypedWord substitute(const std::vector<TypedWord>& table, const TypedWord& w) {
  TypedWord out(w.source());
  for (const Letter& l : w.letters()) {
    const TypedWord& img = table[Representation::slot(l.label)];
    out = out * (l.exponent > 0 ? img : img.inverse());
  }
  return free_reduce(out);
}

} // namespace

Automorphism::Automorphism(std::string name, std::vector<TypedWord> forward, std::vector<TypedWord> backward)
    : name_(std::move(name)), forward_(std::move(forward)), backward_(std::move(backward)) {
  const auto& labels = s_prime().labels();
  if (forward_.size() != labels.size() || backward_.size() != labels.size()) {
    throw ConstructionInvalid(name_ + ": substitution table must list all " + std::to_string(labels.size()) +
                              " generators");
  }
  for (const GeneratorLabel& g : labels) {
    const std::size_t k = Representation::slot(g);
    for (const TypedWord* img : {&forward_[k], &backward_[k]}) {
      if (img->source() != s_prime().source(g) || img->target() != s_prime().target(g)) {
        throw ConstructionInvalid(name_ + ": image " + img->to_string() + " of " + g.to_string() +
                                  " does not share its endpoints");
      }
    }
  }
}

Automorphism Automorphism::identity() { return Automorphism("id", identity_table(), identity_table()); }

const TypedWord& Automorphism::image(const GeneratorLabel& g) const { return forward_[Representation::slot(g)]; }

const TypedWord& Automorphism::inverse_image(const GeneratorLabel& g) const {
  return backward_[Representation::slot(g)];
}

TypedWord Automorphism::apply(const TypedWord& w) const { return substitute(forward_, w); }

Automorphism Automorphism::inverse() const {
  const bool simple = name_.find(' ') == std::string::npos;
  return Automorphism(simple ? name_ + "^-1" : "(" + name_ + ")^-1", backward_, forward_);
}

Automorphism Automorphism::renamed(std::string name) const {
  Automorphism out = *this;
  out.name_ = std::move(name);
  return out;
}

std::string Automorphism::to_table() const {
  std::ostringstream os;
  for (const GeneratorLabel& g : s_prime().labels()) {
    os << g.to_string() << " -> " << image(g).to_string() << '\n';
  }
  return os.str();
}

Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  std::vector<TypedWord> fwd;
  std::vector<TypedWord> bwd;
  for (const GeneratorLabel& g : s_prime().labels()) {
    fwd.push_back(phi.apply(psi.image(g)));
    bwd.push_back(substitute(psi.backward(), phi.inverse_image(g)));
  }
  std::string name;
  if (phi.name() == "id") {
    name = psi.name();
  } else if (psi.name() == "id") {
    name = phi.name();
  } else {
    name = phi.name() + " " + psi.name();
  }
  return Automorphism(std::move(name), std::move(fwd), std::move(bwd));
}

Automorphism power(const Automorphism& phi, int n) {
  const Automorphism base = n < 0 ? phi.inverse() : phi;
  Automorphism out = Automorphism::identity();
  for (int k = 0; k < std::abs(n); ++k) out = compose(out, base);
  if (std::abs(n) > 1) {
    const bool simple = phi.name().find(' ') == std::string::npos;
    out = out.renamed((simple ? phi.name() : "(" + phi.name() + ")") + "^" + std::to_string(n));
  }
  return out;
}

Automorphism inner(const TypedWord& gamma) {
  if (!gamma.is_loop()) throw NotALoop(gamma.to_string() + " is not a loop");
  const VertexId x = gamma.source();
  const TypedWord trivial_other(x == kU ? kV : kU);
  if (x == kU) return inner(gamma, trivial_other).renamed("Ad(" + free_reduce(gamma).to_string() + ")");
  return inner(trivial_other, gamma).renamed("Ad(" + free_reduce(gamma).to_string() + ")");
}

Automorphism inner(const TypedWord& gamma_u, const TypedWord& gamma_v) {
  if (!gamma_u.is_loop() || gamma_u.source() != kU) throw NotALoop(gamma_u.to_string() + " is not a loop at u");
  if (!gamma_v.is_loop() || gamma_v.source() != kV) throw NotALoop(gamma_v.to_string() + " is not a loop at v");
  auto loop_at = [&](VertexId x, bool inverted) {
    const TypedWord& g = x == kU ? gamma_u : gamma_v;
    return inverted ? g.inverse() : g;
  };
  std::vector<TypedWord> fwd;
  std::vector<TypedWord> bwd;
  for (const TypedWord& e : edge_words()) {
    fwd.push_back(free_reduce(loop_at(e.source(), false) * e * loop_at(e.target(), true)));
    bwd.push_back(free_reduce(loop_at(e.source(), true) * e * loop_at(e.target(), false)));
  }
  return Automorphism("Ad(" + free_reduce(gamma_u).to_string() + ", " + free_reduce(gamma_v).to_string() + ")",
                      std::move(fwd), std::move(bwd));
}

std::vector<TypedWord> loop_generators(VertexId base) {
  static const char* const at_u[] = {"b1", "b3", "a1.b2.a1^-1", "a1.b4.a1^-1", "a1.a2", "a1.a3", "a4.a1^-1"};
  static const char* const at_v[] = {"a1^-1.b1.a1", "a1^-1.b3.a1", "b2", "b4", "a2.a1", "a3.a1", "a1^-1.a4"};
  std::vector<TypedWord> out;
  for (const char* text : base == kU ? at_u : at_v) out.push_back(parse_word(text));
  return out;
}

std::vector<TypedWord> edge_words() {
  std::vector<TypedWord> out;
  for (const GeneratorLabel& g : s_prime().labels()) out.push_back(s_prime().letter(g));
  return out;
}

double automorphism_discrepancy(const Automorphism& phi, const Automorphism& psi, std::span<const TypedWord> words,
                                const WitnessSet& witnesses) {
  double worst = 0.0;
  for (const TypedWord& w : words) {
    worst = std::max(worst, word_discrepancy(phi.apply(w), psi.apply(w), witnesses));
  }
  return worst;
}

bool automorphism_equal(const Automorphism& phi, const Automorphism& psi, const WitnessSet& witnesses,
                        double tolerance) {
  return automorphism_discrepancy(phi, psi, edge_words(), witnesses) < tolerance;
}

bool automorphism_equal_at(const Automorphism& phi, const Automorphism& psi, VertexId base,
                           const WitnessSet& witnesses, double tolerance) {
  return automorphism_discrepancy(phi, psi, loop_generators(base), witnesses) < tolerance;
}

InvariantCheck check_invariants(const Automorphism& phi, const WitnessSet& witnesses) {
  InvariantCheck out;
  for (const TypedWord& r : s_prime().relation_words()) {
    out.relation_residual =
        std::max(out.relation_residual, word_discrepancy(phi.apply(r), TypedWord(r.source()), witnesses));
  }
  const Automorphism there_and_back = compose(phi.inverse(), phi);
  const Automorphism back_and_there = compose(phi, phi.inverse());
  const Automorphism id = Automorphism::identity();
  const auto gens = edge_words();
  out.inverse_residual = std::max(automorphism_discrepancy(there_and_back, id, gens, witnesses),
                                  automorphism_discrepancy(back_and_there, id, gens, witnesses));
  return out;
}

void validate(const Automorphism& phi, const WitnessSet& witnesses, double tolerance) {
  const InvariantCheck c = check_invariants(phi, witnesses);
  if (!c.ok(tolerance)) {
    std::ostringstream os;
    os << phi.name() << ": relation residual " << c.relation_residual << ", inverse residual " << c.inverse_residual;
    throw ConstructionInvalid(os.str());
  }
}

Automorphism automorphism_from_images(std::string name, std::span<const std::pair<const char*, const char*>> forward,
                                      std::span<const std::pair<const char*, const char*>> backward) {
  auto table = [](std::span<const std::pair<const char*, const char*>> entries) {
    std::vector<TypedWord> t = identity_table();
    for (const auto& [gen, img] : entries) {
      t[Representation::slot(parse_label(gen))] = parse_word(img);
    }
    return t;
  };
  return Automorphism(std::move(name), table(forward), table(backward));
}

StandardTwists build_standard_twists(const WitnessSet& witnesses) {
  using Entry = std::pair<const char*, const char*>;
  const Entry a_fwd[] = {{"a1", "a1.b2"}};
  const Entry a_bwd[] = {{"a1", "a1.b2^-1"}};
  const Entry b_fwd[] = {{"b1", "b1.a3^-1.a1^-1"}, {"b2", "b2.a1^-1.a3^-1"}};
  const Entry b_bwd[] = {{"b1", "b1.a1.a3"}, {"b2", "b2.a3.a1"}};
  const Entry c_fwd[] = {{"a2", "a2.b1.b3"}, {"a3", "a3.b3.b1"}};
  const Entry c_bwd[] = {{"a2", "a2.b3^-1.b1^-1"}, {"a3", "a3.b1^-1.b3^-1"}};
  const Entry d_fwd[] = {{"b3", "b3.a2^-1.a4^-1"}, {"b4", "b4.a4^-1.a2^-1"}};
  const Entry d_bwd[] = {{"b3", "b3.a4.a2"}, {"b4", "b4.a2.a4"}};
  const Entry e_fwd[] = {{"a4", "b3.a4"}};
  const Entry e_bwd[] = {{"a4", "b3^-1.a4"}};

  StandardTwists t{
      automorphism_from_images("A", a_fwd, a_bwd), automorphism_from_images("B", b_fwd, b_bwd),
      automorphism_from_images("C", c_fwd, c_bwd), automorphism_from_images("D", d_fwd, d_bwd),
      automorphism_from_images("E", e_fwd, e_bwd),
  };
  for (const Automorphism* phi : {&t.A, &t.B, &t.C, &t.D, &t.E}) validate(*phi, witnesses);
  return t;
}

const StandardTwists& standard_twists() {
  static const StandardTwists instance = build_standard_twists();
  return instance;
}

} // namespace sqtile
