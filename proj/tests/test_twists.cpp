#include "oracle.hpp"

#include "sqtile/automorphism.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/homology.hpp"
#include "sqtile/lemmas.hpp"

#include <doctest.h>

#include <utility>

using namespace sqtile;

namespace {

const StandardTwists& T = standard_twists();

TypedWord w(const char* s) { return parse_word(s); }

bool same(const TypedWord& x, const TypedWord& y) { return equal_mod_relations(x, y); }

std::vector<Representation> samples(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<Representation> out;
  for (int k = 0; k < n; ++k) out.push_back(sample_rep(rng));
  return out;
}

} // namespace

TEST_CASE("twist fragments") {
  CHECK(T.A.apply(w("a1")) == w("a1.b2"));
  CHECK(T.E.apply(w("a4")) == w("b3.a4"));
  CHECK(T.B.apply(w("b2")) == w("b2.a1^-1.a3^-1"));
  CHECK(T.D.apply(w("b3")) == w("b3.a2^-1.a4^-1"));
  CHECK(T.C.inverse().apply(w("a3")) == w("a3.b1^-1.b3^-1"));
  CHECK(T.C.inverse().apply(w("a3^-1")) == w("b3.b1.a3^-1"));
  CHECK(T.B.apply(w("b1")) == w("b1.a3^-1.a1^-1"));
}

TEST_CASE("B(b1) is forced by the first square") {
  // With B2 -> B2 A1^-1 A3^-1, the relation A1 B2 = B1 A1 survives for B1 -> B1 A3^-1 A1^-1
  // and breaks for the other ordering.
  for (const Representation& r : samples(8, 20)) {
    const auto A1 = oracle::eig(r.A(1)), A3 = oracle::eig(r.A(3));
    const auto B1 = oracle::eig(r.B(1)), B2 = oracle::eig(r.B(2));
    const auto B2n = B2 * A1.conjugate() * A3.conjugate();
    const auto good = B1 * A3.conjugate() * A1.conjugate();
    const auto bad = B1 * A1.conjugate() * A3.conjugate();
    CHECK(oracle::dist(A1 * B2n, good * A1) < 1e-12);
    CHECK(oracle::dist(A1 * B2n, bad * A1) > 1e-3);
  }
}

TEST_CASE("every twist preserves the square relations") {
  for (const Automorphism* phi : {&T.A, &T.B, &T.C, &T.D, &T.E}) {
    CAPTURE(phi->name());
    for (const Representation& r : samples(21, 25)) {
      CHECK(oracle::residual(pullback(r, *phi)) < 1e-9);
      CHECK(oracle::residual(pullback(r, phi->inverse())) < 1e-9);
    }
    CHECK(automorphism_equal(compose(*phi, phi->inverse()), Automorphism::identity()));
    CHECK(automorphism_equal(compose(phi->inverse(), *phi), Automorphism::identity()));
  }
}

TEST_CASE("pullback by single twists") {
  for (const Representation& r : samples(4, 10)) {
    const Representation ra = pullback(r, T.A);
    CHECK(oracle::dist(oracle::eig(ra.A(1)), oracle::eig(r.A(1)) * oracle::eig(r.B(2))) < 1e-14);
    const Representation re = pullback(r, T.E);
    CHECK(oracle::dist(oracle::eig(re.A(4)), oracle::eig(r.B(3)) * oracle::eig(r.A(4))) < 1e-14);
    for (int i = 1; i <= 4; ++i) {
      if (i != 1) CHECK(ra.A(i).value() == r.A(i).value());
      if (i != 4) CHECK(re.A(i).value() == r.A(i).value());
      CHECK(ra.B(i).value() == r.B(i).value());
      CHECK(re.B(i).value() == r.B(i).value());
    }
    CHECK(pullback(r, Automorphism::identity()).to_line() == r.to_line());
  }
}

TEST_CASE("pullback is contravariant") {
  for (const Representation& r : samples(12, 10)) {
    const Representation lhs = pullback(pullback(r, T.B), T.D);
    const Representation rhs = pullback(r, compose(T.B, T.D));
    for (const GeneratorLabel& g : s_prime().labels()) CHECK(distance(lhs[g].value(), rhs[g].value()) < 1e-12);
  }
}

TEST_CASE("composite images") {
  const Automorphism abc = T.A * T.B * T.C;
  CHECK(abc.apply(w("a1")) == w("a1.b2"));
  CHECK(same((abc * abc).apply(w("a4.a1^-1")), w("a4.b2^-1.a2")));
  CHECK(same(compose(T.C.inverse(), compose(T.B.inverse(), T.A.inverse())).apply(w("a1")), w("a3^-1.b4")));
  CHECK(same(power(abc, -2).apply(w("a1")), w("b3.b1.a3^-1.b4")));
  const TypedWord x = w("a1.a1^-1.a4.b4.b4^-1");
  CHECK(Automorphism::identity().apply(x) == free_reduce(x));
}

TEST_CASE("inner automorphisms") {
  CHECK(automorphism_equal(inner(parse_word("", kU)), Automorphism::identity()));
  CHECK(inner(w("b3")).apply(w("a4.a1^-1")) == w("b3.a4.a1^-1.b3^-1"));
  const TypedWord g = w("b1.a1.b2.a3"), d = w("b3^-1.a4.a2");
  CHECK(automorphism_equal(inner(g) * inner(d), inner(g * d)));
  CHECK_THROWS_AS(inner(w("a1")), NotALoop);
}

TEST_CASE("automorphism equality") {
  CHECK(automorphism_equal(T.D, T.D));
  CHECK_FALSE(automorphism_equal(T.A, T.B));
  CHECK(automorphism_discrepancy(T.A, T.B, edge_words()) > 0.1);
}

TEST_CASE("invalid tables are rejected") {
  const std::pair<const char*, const char*> fwd[] = {{"a1", "a1.b4"}};
  const std::pair<const char*, const char*> bwd[] = {{"a1", "a1.b4^-1"}};
  const Automorphism broken = automorphism_from_images("broken", fwd, bwd);
  CHECK(check_invariants(broken).relation_residual > 0.1);
  CHECK_THROWS_AS(validate(broken), ConstructionInvalid);

  const std::pair<const char*, const char*> bad_end[] = {{"a1", "a1.a2"}};
  CHECK_THROWS_AS(automorphism_from_images("bad", bad_end, bad_end), ConstructionInvalid);

  const std::pair<const char*, const char*> fa[] = {{"a1", "a1.b2"}};
  const std::pair<const char*, const char*> wrong_inverse[] = {{"a1", "a1.b2"}};
  CHECK(check_invariants(automorphism_from_images("half", fa, wrong_inverse)).inverse_residual > 0.1);
}

TEST_CASE("word-level relation checks pass for composites too") {
  const Automorphism big = T.E * T.E * T.C * T.D * T.B.inverse() * T.A;
  CHECK(check_invariants(big).ok(1e-6));
}

TEST_CASE("homology of the identity and single twists") {
  const HomologyAction id = homology_action(Automorphism::identity());
  CHECK(id.matrix == HomologyMatrix::Identity());
  CHECK(id.spectral_radius == doctest::Approx(1.0));
  for (const Automorphism* phi : {&T.A, &T.B, &T.C, &T.D, &T.E}) {
    CAPTURE(phi->name());
    const HomologyAction h = homology_action(*phi);
    const HomologyMatrix n = h.matrix - HomologyMatrix::Identity();
    // transvection: rank one and square zero
    CHECK(n != HomologyMatrix::Zero());
    CHECK(n * n == HomologyMatrix::Zero());
    CHECK(n.cast<double>().fullPivLu().rank() == 1);
    CHECK(h.determinant == 1);
    CHECK(h.spectral_radius == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("homology classes") {
  CHECK(homology_class(w("b1")) == std::array<std::int64_t, 4>{0, 0, 1, 0});
  CHECK(homology_class(w("b2")) == homology_class(w("b1")));
  CHECK(homology_class(w("a1.b4.a1^-1")) == homology_class(w("b3")));
  CHECK(homology_class(w("a1.a3")) == homology_class(w("a1.a2")));
  for (const TypedWord& r : s_prime().relation_words()) CHECK(homology_class(r) == std::array<std::int64_t, 4>{});
  CHECK_THROWS_AS(homology_class(w("a1")), NotALoop);
}

TEST_CASE("homology action is multiplicative and symplectic") {
  // Intersection form fixed by all five twists, the unique solution of M^T J M = J up to scale.
  HomologyMatrix J;
  J << 0, 0, 1, 0, 0, 0, -1, 1, -1, 1, 0, 0, 0, -1, 0, 0;
  const Automorphism* gens[] = {&T.A, &T.B, &T.C, &T.D, &T.E};
  Rng rng(99);
  std::uniform_int_distribution<int> pick(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    Automorphism phi = Automorphism::identity();
    HomologyMatrix m = HomologyMatrix::Identity();
    for (int k = 0; k < 6; ++k) {
      const int c = pick(rng);
      const Automorphism g = c < 5 ? *gens[c] : gens[c - 5]->inverse();
      phi = phi * g;
      m = m * homology_action(g).matrix;
    }
    const HomologyAction h = homology_action(phi);
    CHECK(h.matrix == m);
    CHECK(h.matrix.transpose() * J * h.matrix == J);
    CHECK((h.determinant == 1 || h.determinant == -1));
  }
}

TEST_CASE("homology of E^2 C D B^2") {
  const HomologyAction h = homology_action(T.E * T.E * T.C * T.D * T.B * T.B);
  CHECK(std::abs(h.determinant) == 1);
  // characteristic polynomial (x+1)^2 (x^2-x+1): every eigenvalue on the unit circle
  CHECK(h.spectral_radius == doctest::Approx(1.0).epsilon(1e-6));
  const HomologyAction g = homology_action(T.E * T.E * T.C * (T.D * T.B * T.B).inverse());
  CHECK(g.spectral_radius == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-9));
}
