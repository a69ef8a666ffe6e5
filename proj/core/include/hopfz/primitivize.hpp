#pragma once

// Deciding whether a presented Hopf algebra is isomorphic over Z to a
// primitively generated (Lie-Hopf) one.
//
// For each generator g of degree d we look for a correction c in the span of
// decomposable words of degree d such that g + c is primitive. The
// coefficients solve the integer system Σ λ_α Δ̃(m_α) = -Δ̃(g), written in the
// basis of word pairs of total degree d.
//
// Completeness of the per-generator search: the degree-d linear combinations
// of generators that admit a primitive correction form a subgroup S of the
// free abelian group on the degree-d generators. A unimodular change of
// generators lands inside S exactly when S is the whole group, which happens
// exactly when every original generator lies in S. So the identity linear
// part loses nothing, and because every system is written in the original
// alphabet, choices made in lower degrees never affect higher ones.
// Reducing arbitrary graded isomorphisms to triangular ones is assumed, not
// re-proved here.

#include "hopfz/hopf.hpp"
#include "hopfz/linz.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hopfz {

/// Integer system whose unknowns are correction coefficients.
struct CorrectionSystem {
  std::vector<Word> columns;  // decomposable words, canonical order
  std::vector<WordPair> rows; // word pairs, canonical pair order
  IntMatrix matrix;
  IntVector rhs;
};

/// Assembles Σ λ_α Δ̃(m_α) = -Δ̃(g) for generator g.
CorrectionSystem correction_system(const HopfPresentation& p, Letter g);

struct ObstructionCertificate {
  std::vector<Generator> alphabet;
  int degree = 0;
  std::string generator;
  CorrectionSystem system;
  DivisibilityWitness witness;

  /// "2λ1 = -1" style rendering of the system.
  std::string equations() const;
};

struct GeneratorCorrection {
  Element correction;
  std::vector<IntVector> kernel_basis;
};

using PrimitivizeOutcome = std::variant<GeneratorCorrection, ObstructionCertificate>;

/// Canonical correction for one generator, or the obstruction data.
PrimitivizeOutcome primitivize_generator(const HopfPresentation& p, Letter g);
PrimitivizeOutcome primitivize_generator(const HopfPresentation& p, std::string_view id);

/// w_g = g + c_g for every generator; every w_g is primitive.
struct ChangeOfBasis {
  AlphabetPtr alphabet;
  std::vector<Element> corrections;
  std::vector<Element> new_generators;

  /// Map from the Lie-Hopf presentation on the same alphabet into the source:
  /// g ↦ w_g.
  IsoCandidate from_lie_hopf() const;
  /// Its inverse, source → Lie-Hopf.
  IsoCandidate to_lie_hopf() const;
};

struct LieHopfDecision {
  std::variant<ChangeOfBasis, ObstructionCertificate> outcome;

  bool is_lie_hopf() const { return outcome.index() == 0; }
  const ChangeOfBasis& change_of_basis() const { return std::get<ChangeOfBasis>(outcome); }
  const ObstructionCertificate& certificate() const {
    return std::get<ObstructionCertificate>(outcome);
  }
};

/// Processes generators by ascending degree, then presentation order; reports
/// the first obstruction found. Throws PresentationError when the
/// presentation fails coassociativity or counit through its truncation degree.
LieHopfDecision lie_hopf_decision(const HopfPresentation& p);

/// Rebuilds the system from p and re-verifies the divisibility witness.
/// Returns false for a tampered system or witness; throws AlphabetError when
/// the certificate does not belong to p's alphabet.
bool check_certificate(const ObstructionCertificate& cert, const HopfPresentation& p);

} // namespace hopfz
