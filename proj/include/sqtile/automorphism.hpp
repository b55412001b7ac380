#pragma once

#include "sqtile/relations.hpp"
#include "sqtile/surface.hpp"

#include <span>
#include <string>
#include <vector>

namespace sqtile {

/// Automorphism of the edge groupoid of S' fixing both vertices, stored as a
/// substitution table generator -> word together with the table of its
/// inverse.
class Automorphism {
public:
  /// Tables are indexed like Representation (a1..a4, b1..b4). Throws
  /// ConstructionInvalid if a table has the wrong size or an image does not
  /// share the endpoints of its generator.
  Automorphism(std::string name, std::vector<TypedWord> forward, std::vector<TypedWord> backward);

  static Automorphism identity();

  const std::string& name() const { return name_; }
  const TypedWord& image(const GeneratorLabel& g) const;
  const TypedWord& inverse_image(const GeneratorLabel& g) const;
  const std::vector<TypedWord>& forward() const { return forward_; }
  const std::vector<TypedWord>& backward() const { return backward_; }

  /// Letterwise substitution followed by free reduction.
  TypedWord apply(const TypedWord& w) const;
  Automorphism inverse() const;
  Automorphism renamed(std::string name) const;

  /// One line per generator: "a1 -> a1.b2".
  std::string to_table() const;

private:
  std::string name_;
  std::vector<TypedWord> forward_;
  std::vector<TypedWord> backward_;
};

inline TypedWord apply(const Automorphism& phi, const TypedWord& w) { return phi.apply(w); }

/// compose(phi, psi)(g) = phi(psi(g)): psi acts first, so the product ABC
/// of the text is compose(A, compose(B, C)).
Automorphism compose(const Automorphism& phi, const Automorphism& psi);
inline Automorphism operator*(const Automorphism& phi, const Automorphism& psi) { return compose(phi, psi); }
inline Automorphism inverse(const Automorphism& phi) { return phi.inverse(); }
/// phi^n for any integer n.
Automorphism power(const Automorphism& phi, int n);

/// Ad_gamma for a loop gamma at vertex x: paths leaving x are left-multiplied
/// by gamma, paths entering x are right-multiplied by gamma^-1, so loops at x
/// are conjugated and loops at the other vertex are untouched.
/// Throws NotALoop.
Automorphism inner(const TypedWord& gamma);

/// Groupoid inner automorphism with a loop at each vertex: a path p from x to
/// y goes to gamma_x · p · gamma_y^-1.
Automorphism inner(const TypedWord& gamma_u, const TypedWord& gamma_v);

/// Seven loops generating the fundamental group at `base` (spanning tree {a1}).
std::vector<TypedWord> loop_generators(VertexId base);

/// All eight edges as one-letter words.
std::vector<TypedWord> edge_words();

/// max discrepancy of phi(w) and psi(w) over the given words.
double automorphism_discrepancy(const Automorphism& phi, const Automorphism& psi, std::span<const TypedWord> words,
                                const WitnessSet& witnesses = default_witnesses());

/// Equality on the eight generators modulo relations.
bool automorphism_equal(const Automorphism& phi, const Automorphism& psi,
                        const WitnessSet& witnesses = default_witnesses(),
                        double tolerance = WitnessSet::kDefaultTolerance);

/// Equality on the loops at one vertex (restriction to a vertex group).
bool automorphism_equal_at(const Automorphism& phi, const Automorphism& psi, VertexId base,
                           const WitnessSet& witnesses = default_witnesses(),
                           double tolerance = WitnessSet::kDefaultTolerance);

struct InvariantCheck {
  double relation_residual = 0.0; ///< worst relation word image vs. empty loop
  double inverse_residual = 0.0;  ///< worst backward∘forward and forward∘backward vs. identity
  bool ok(double tolerance) const { return relation_residual < tolerance && inverse_residual < tolerance; }
};

/// Measures the automorphism invariants (relations preserved, tables mutually
/// inverse) on a witness set.
InvariantCheck check_invariants(const Automorphism& phi, const WitnessSet& witnesses = default_witnesses());

/// Throws ConstructionInvalid when check_invariants fails at `tolerance`.
void validate(const Automorphism& phi, const WitnessSet& witnesses = default_witnesses(),
              double tolerance = WitnessSet::kDefaultTolerance);

/// Lifted twists supported on the cylinders of alpha1, beta1, gamma1, beta2
/// and alpha2.
struct StandardTwists {
  Automorphism A; ///< a1 -> a1.b2
  Automorphism B; ///< b1 -> b1.a3^-1.a1^-1, b2 -> b2.a1^-1.a3^-1
  Automorphism C; ///< a2 -> a2.b1.b3, a3 -> a3.b3.b1
  Automorphism D; ///< b3 -> b3.a2^-1.a4^-1, b4 -> b4.a4^-1.a2^-1
  Automorphism E; ///< a4 -> b3.a4
};

/// Builds and validates the five tables; throws ConstructionInvalid.
StandardTwists build_standard_twists(const WitnessSet& witnesses = default_witnesses());

/// Process-wide validated instance.
const StandardTwists& standard_twists();

/// Builds an automorphism from textual images; generators not listed are
/// fixed. Used for the standard tables and for test hooks.
Automorphism automorphism_from_images(std::string name, std::span<const std::pair<const char*, const char*>> forward,
                                      std::span<const std::pair<const char*, const char*>> backward);

} // namespace sqtile
