#include "sqtile/lemmas.hpp"

#include "sqtile/errors.hpp"

namespace sqtile {

namespace {

TypedWord w(const char* text) { return parse_word(text); }

// Records lhs == rhs modulo relations.
void same(Report& r, std::string name, const TypedWord& lhs, const TypedWord& rhs, const WitnessSet& witnesses,
          double tolerance, const std::string& lhs_text = {}) {
  const double residual = word_discrepancy(lhs, rhs, witnesses);
  r.check(std::move(name), (lhs_text.empty() ? lhs.to_string() : lhs_text) + " = " + rhs.to_string(), residual,
          tolerance);
}

// Records lhs == rhs letter for letter after free reduction.
void exact(Report& r, std::string name, const std::string& lhs_text, const TypedWord& lhs, const TypedWord& rhs) {
  const bool ok = free_reduce(lhs) == free_reduce(rhs);
  r.expect(std::move(name), lhs_text + " = " + rhs.to_string() + " (letterwise)", ok,
           ok ? std::string{} : "got " + free_reduce(lhs).to_string());
}

} // namespace

const ChainProducts& chain_products() {
  static const ChainProducts instance = [] {
    const StandardTwists& t = standard_twists();
    const Automorphism abc = (t.A * (t.B * t.C)).renamed("ABC");
    const Automorphism abc_inv = abc.inverse().renamed("(ABC)^-1");
    const Automorphism cd = (t.C * t.D).renamed("CD");
    return ChainProducts{
        abc,
        power(abc, 2).renamed("(ABC)^2"),
        power(abc, 4).renamed("(ABC)^4"),
        abc_inv,
        power(abc, -2).renamed("(ABC)^-2"),
        power(abc, -4).renamed("(ABC)^-4"),
        power(t.E, 2).renamed("E^2"),
        power(t.E, -2).renamed("E^-2"),
        cd,
        (cd.inverse() * t.B * cd).renamed("(CD)^-1 B (CD)"),
    };
  }();
  return instance;
}

Report verify_chain_lift(const WitnessSet& witnesses, double tol) {
  const StandardTwists& t = standard_twists();
  const ChainProducts& p = chain_products();
  Report r;

  // Base point u: compare (ABC)^2 and (ABC)^-2 E^2 on a4.a1^-1.
  exact(r, "chain.u.ABC(a1)", "ABC(a1)", p.abc.apply(w("a1")), w("a1.b2"));
  exact(r, "chain.u.ABC(b2)", "ABC(b2)", p.abc.apply(w("b2")), w("a1^-1.a3^-1"));
  exact(r, "chain.u.AB(b2)", "A(b2.a1^-1.a3^-1)", t.A.apply(w("b2.a1^-1.a3^-1")), w("a1^-1.a3^-1"));
  same(r, "chain.u.ABC2(a1).first", p.abc2.apply(w("a1")), w("a1.b2.a1^-1.a3^-1"), witnesses, tol, "(ABC)^2(a1)");
  same(r, "chain.u.ABC2(a1).second", p.abc2.apply(w("a1")), w("b1.a3^-1"), witnesses, tol, "(ABC)^2(a1)");
  same(r, "chain.u.ABC2(a1).third", p.abc2.apply(w("a1")), w("a2^-1.b2"), witnesses, tol, "(ABC)^2(a1)");
  exact(r, "chain.u.ABC(a4)", "ABC(a4)", p.abc.apply(w("a4")), w("a4"));
  same(r, "chain.u.ABC2(a4.a1^-1)", p.abc2.apply(w("a4.a1^-1")), w("a4.b2^-1.a2"), witnesses, tol,
       "(ABC)^2(a4.a1^-1)");
  exact(r, "chain.u.B^-1A^-1(a1)", "B^-1 A^-1(a1)", (t.B.inverse() * t.A.inverse()).apply(w("a1")),
        w("a3^-1.b2^-1"));
  exact(r, "chain.u.C^-1(a3^-1)", "C^-1(a3^-1)", t.C.inverse().apply(w("a3^-1")), w("b3.b1.a3^-1"));
  exact(r, "chain.u.ABC^-1(a1).first", "(ABC)^-1(a1)", p.abc_inv.apply(w("a1")), w("b3.b1.a3^-1.b2^-1"));
  same(r, "chain.u.ABC^-1(a1).second", p.abc_inv.apply(w("a1")), w("a3^-1.b4"), witnesses, tol, "(ABC)^-1(a1)");
  same(r, "chain.u.ABC^-1(a3^-1.b4)", p.abc_inv.apply(w("a3^-1.b4")), w("b3.b1.a3^-1.b4"), witnesses, tol,
       "(ABC)^-1(a3^-1.b4)");
  same(r, "chain.u.ABC^-2(a1)", p.abc_inv2.apply(w("a1")), w("b3.b1.a3^-1.b4"), witnesses, tol, "(ABC)^-2(a1)");
  exact(r, "chain.u.E(a4)", "E(a4)", t.E.apply(w("a4")), w("b3.a4"));
  exact(r, "chain.u.E(a1)", "E(a1)", t.E.apply(w("a1")), w("a1"));
  const TypedWord pulled_u = (p.abc_inv2 * p.e2).apply(w("a4.a1^-1"));
  same(r, "chain.u.ABC^-2E^2(a4.a1^-1).first", pulled_u, w("b3^2.a4.b4^-1.a3.b1^-1.b3^-1"), witnesses, tol,
       "(ABC)^-2 E^2(a4.a1^-1)");
  same(r, "chain.u.relation.a3b1", w("a3.b1^-1"), w("b2^-1.a2"), witnesses, tol);
  same(r, "chain.u.relation.b3a4b4", w("b3.a4.b4^-1"), w("a4"), witnesses, tol);
  same(r, "chain.u.ABC^-2E^2(a4.a1^-1).second", pulled_u, w("b3.a4.b2^-1.a2.b3^-1"), witnesses, tol,
       "(ABC)^-2 E^2(a4.a1^-1)");
  same(r, "chain.u.compare", pulled_u, inner(w("b3")).apply(p.abc2.apply(w("a4.a1^-1"))), witnesses, tol,
       "(ABC)^-2 E^2(a4.a1^-1) = Ad(b3)(ABC)^2(a4.a1^-1), i.e. " + pulled_u.to_string());

  const Automorphism rhs_u = inner(w("b3^-1")) * p.e2;
  const auto loops_u = loop_generators(kU);
  r.check("chain.u.conclusion", "(ABC)^4 = Ad(b3^-1) E^2 on loops at u",
          automorphism_discrepancy(p.abc4, rhs_u, loops_u, witnesses), tol);

  // Base point v.
  same(r, "chain.v.ABC2(a4^-1.a1)", p.abc2.apply(w("a4^-1.a1")), w("a4^-1.b1.a3^-1"), witnesses, tol,
       "(ABC)^2(a4^-1.a1)");
  same(r, "chain.v.ABC^-2(a4^-1.a1)", p.abc_inv2.apply(w("a4^-1.a1")), w("a4^-1.b3.b1.a3^-1.b4"), witnesses, tol,
       "(ABC)^-2(a4^-1.a1)");
  const TypedWord pulled_v = (p.abc_inv2 * p.e2).apply(w("a4^-1.a1"));
  same(r, "chain.v.ABC^-2E^2(a4^-1.a1).first", pulled_v, w("b4^-2.a4^-1.b3.b1.a3^-1.b4"), witnesses, tol,
       "(ABC)^-2 E^2(a4^-1.a1)");
  same(r, "chain.v.relation.b4a4b3", w("b4^-1.a4^-1.b3"), w("a4^-1"), witnesses, tol);
  same(r, "chain.v.ABC^-2E^2(a4^-1.a1).second", pulled_v, w("b4^-1.a4^-1.b1.a3^-1.b4"), witnesses, tol,
       "(ABC)^-2 E^2(a4^-1.a1)");

  const Automorphism rhs_v = inner(w("b4")) * p.e2;
  const auto loops_v = loop_generators(kV);
  r.check("chain.v.conclusion", "(ABC)^4 = Ad(b4) E^2 on loops at v",
          automorphism_discrepancy(p.abc4, rhs_v, loops_v, witnesses), tol);

  const Automorphism rhs_both = inner(w("b3^-1"), w("b4")) * p.e2;
  r.check("chain.groupoid", "(ABC)^4 = Ad(b3^-1, b4) E^2 on all eight edges",
          automorphism_discrepancy(p.abc4, rhs_both, edge_words(), witnesses), tol);
  return r;
}

Report verify_stabilizers(const WitnessSet& witnesses, double tol) {
  const StandardTwists& t = standard_twists();
  const ChainProducts& p = chain_products();
  Report r;
  exact(r, "stab.C(b1)", "C(b1)", t.C.apply(w("b1")), w("b1"));
  exact(r, "stab.D(b1)", "D(b1)", t.D.apply(w("b1")), w("b1"));
  for (const auto* phi : {&t.A, &t.B, &t.C}) {
    for (const char* g : {"a4", "b4"}) {
      exact(r, "stab." + phi->name() + "(" + g + ")", phi->name() + "(" + g + ")", phi->apply(w(g)), w(g));
    }
  }
  exact(r, "stab.E(b3)", "E(b3)", t.E.apply(w("b3")), w("b3"));
  same(r, "stab.B(a4.a2)", t.B.apply(w("a4.a2")), w("a4.a2"), witnesses, tol, "B(a4.a2)");
  same(r, "stab.CD(b1.b3)", p.cd.apply(w("b1.b3")), w("a2^-1.a4^-1"), witnesses, tol, "CD(b1.b3)");
  same(r, "stab.W(b1.b3)", p.w_generator.apply(w("b1.b3")), w("b1.b3"), witnesses, tol, "(CD)^-1 B (CD)(b1.b3)");
  same(r, "stab.E(b1.b3)", t.E.apply(w("b1.b3")), w("b1.b3"), witnesses, tol, "E(b1.b3)");
  return r;
}

GammaElement gamma_generator(const Automorphism& V, const Automorphism& W, const WitnessSet& witnesses,
                             double tol) {
  const ChainProducts& p = chain_products();
  const TypedWord b1 = w("b1");
  const TypedWord b1b3 = w("b1.b3");
  if (const double d = word_discrepancy(V.apply(b1), b1, witnesses); !(d < tol)) {
    throw StabilizerViolation(V.name() + " moves b1 (residual " + std::to_string(d) + ")");
  }
  if (const double d = word_discrepancy(W.apply(b1b3), b1b3, witnesses); !(d < tol)) {
    throw StabilizerViolation(W.name() + " moves b1.b3 (residual " + std::to_string(d) + ")");
  }

  const Automorphism ad_b3 = inner(w("b3"));
  const Automorphism ad_b3_inv = inner(w("b3^-1"));
  const Automorphism ad_b1 = inner(b1);
  const std::string label = "gamma(" + V.name() + ", " + W.name() + ")";

  GammaElement out{
      (V * ad_b3 * p.e_inv2 * W * p.e2 * ad_b3_inv).renamed(label),
      (V * p.abc_inv4 * W * p.abc4).renamed(label + " as Gamma1 word"),
      (ad_b1.inverse() * V * p.e_inv2 * W * p.e2 * ad_b1).renamed(label + " as conjugated Gamma2 word"),
  };
  out.gamma1_residual = automorphism_discrepancy(out.element, out.gamma1_form, loop_generators(kU), witnesses);
  out.gamma2_residual = automorphism_discrepancy(out.element, out.gamma2_form, edge_words(), witnesses);
  return out;
}

Report verify_membership(const WitnessSet& witnesses, double tol) {
  const ChainProducts& p = chain_products();
  Report r;
  const GammaElement g = gamma_generator(p.cd, p.w_generator, witnesses, tol);
  r.check("membership.gamma1", "V Ad(b3) E^-2 W E^2 Ad(b3^-1) = V (ABC)^-4 W (ABC)^4 on loops at u",
          g.gamma1_residual, tol);
  r.check("membership.gamma2", "V Ad(b3) E^-2 W E^2 Ad(b3^-1) = Ad(b1)^-1 V E^-2 W E^2 Ad(b1) on all edges",
          g.gamma2_residual, tol);
  return r;
}

} // namespace sqtile
