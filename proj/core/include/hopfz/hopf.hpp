#pragma once

// Graded Hopf algebra structures on free tensor algebras, presented by the
// reduced coproducts of their generators.

#include "hopfz/freealg.hpp"
#include "hopfz/linz.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfz {

/// Generators with degrees plus the reduced coproduct of each generator.
///
/// The full coproduct of a generator is g⊗1 + 1⊗g + Δ̃(g); it extends to
/// all words multiplicatively through tensor_multiply. Construction checks
/// homogeneity and that both tensor factors have positive degree.
/// Coassociativity is not assumed; see verify_coassociativity.
class HopfPresentation {
public:
  HopfPresentation(AlphabetPtr alphabet, std::map<Letter, TensorSquareElement> reduced,
                   int truncation_degree);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int truncation_degree() const { return truncation_degree_; }

  const TensorSquareElement& reduced_coproduct_of(Letter g) const { return reduced_[g]; }
  TensorSquareElement coproduct_of(Letter g) const;

  /// True when every generator has zero reduced coproduct.
  bool is_primitively_presented() const;

private:
  AlphabetPtr alphabet_;
  std::vector<TensorSquareElement> reduced_;
  int truncation_degree_;
};

/// The presentation on `alphabet` in which every generator is primitive.
HopfPresentation lie_hopf_presentation(AlphabetPtr alphabet, int truncation_degree);

/// Δ as the algebra-morphism extension of the generator coproducts.
/// Throws TruncationError for terms above the truncation degree.
TensorSquareElement full_coproduct(const HopfPresentation& p, const Element& x);

/// Δ(x) - x⊗1 - 1⊗x. Throws PreconditionError if x has a degree-0 term.
TensorSquareElement reduced_coproduct(const HopfPresentation& p, const Element& x);

bool is_primitive(const HopfPresentation& p, const Element& x);

/// Antipode: S(g) = -g - Σ S(g')·g'' over Δ̃(g) = Σ g'⊗g'', extended by
/// S(xy) = (-1)^(|x||y|) S(y)S(x).
Element antipode(const HopfPresentation& p, const Element& x);

/// Outcome of an axiom or isomorphism check. Failures are report content.
struct AxiomReport {
  std::string check;
  bool passed = true;
  std::optional<int> failing_degree;
  std::string failing_element;
  std::string detail;
};

/// (Id⊗Δ)Δ = (Δ⊗Id)Δ on every generator of degree <= max_degree.
AxiomReport verify_coassociativity(const HopfPresentation& p, int max_degree);

/// m(Id⊗ε)Δ = Id = m(ε⊗Id)Δ on every word of degree <= max_degree.
AxiomReport verify_counit(const HopfPresentation& p, int max_degree);

/// m(Id⊗S)Δ = ηε = m(S⊗Id)Δ on every word of positive degree <= max_degree.
AxiomReport verify_antipode(const HopfPresentation& p, int max_degree);

/// All of the above, stopping at the first failure.
std::vector<AxiomReport> verify_hopf_axioms(const HopfPresentation& p, int max_degree);

/// Structure constants of the graded dual algebra in the basis dual to words.
///
/// The coefficient of dual(w) in dual(w1)·dual(w2) is the coefficient of
/// w1⊗w2 in Δ(w). Only positive-degree w1, w2 are tabulated; dual(1) is the
/// unit.
struct DualAlgebraTable {
  AlphabetPtr alphabet;
  int max_degree = 0;
  std::map<int, std::vector<Word>> basis;
  std::map<WordPair, std::map<Word, Integer>> constants;

  /// dual(w1)·dual(w2) as word → coefficient (empty when zero).
  std::map<Word, Integer> product(const Word& w1, const Word& w2) const;
};

DualAlgebraTable dual_multiplication_table(const HopfPresentation& p, int max_degree);

/// Algebra map on generators: images[g] is the image of source generator g.
struct IsoCandidate {
  std::vector<Element> images;
  bool triangular = true;
};

/// Extends the generator images multiplicatively and linearly.
Element apply_algebra_map(const IsoCandidate& f, const Element& x);

/// f⊗f applied termwise.
TensorSquareElement apply_tensor_map(const IsoCandidate& f, const TensorSquareElement& x,
                                     const AlphabetPtr& target);

/// Checks through `max_degree` that f is a graded Hopf isomorphism src → dst:
/// invertible linear part in every degree, (f⊗f)Δ_src = Δ_dst f and ε
/// compatibility on generators, plus an antipode spot-check on generators.
/// Throws PreconditionError when an image is not homogeneous of its
/// generator's degree.
AxiomReport verify_hopf_iso(const IsoCandidate& f, const HopfPresentation& src,
                            const HopfPresentation& dst, int max_degree);

/// Inverse of a triangular algebra map between free algebras with the same
/// alphabet, provided the linear part is the identity.
IsoCandidate invert_triangular(const IsoCandidate& f, const AlphabetPtr& alphabet);

} // namespace hopfz
