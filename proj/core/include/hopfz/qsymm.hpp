#pragma once

// Compositions, quasi-symmetric monomials and their duality with the free
// Leibnitz-Hopf algebra Z<Z1, Z2, ...>.

#include "hopfz/error.hpp"
#include "hopfz/integer.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hopfz::qsymm {

/// Ordered list of positive parts. Parts equal to 1 are allowed.
class Composition {
public:
  Composition() = default;
  /// Throws PreconditionError for parts < 1.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }

  /// "(3,1)"; "()" for the empty composition.
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
};

/// Parses "3,1", "(3,1)", "()" or "".
Composition parse_composition(const std::string& text);

/// Every composition of n, ordered lexicographically by parts.
std::vector<Composition> compositions_of(int n);

/// Integer combination of quasi-symmetric monomials M_ω.
using QSymmElement = std::map<Composition, Integer>;

/// Commutative polynomial: exponent vector → coefficient.
using Polynomial = std::map<std::vector<int>, Integer>;

/// M_ω in numvars variables: Σ over l_1 < ... < l_k of t_{l_1}^{j_1}…t_{l_k}^{j_k}.
Polynomial monomial_expand(const Composition& omega, int numvars);

/// Overlapping shuffle (quasi-shuffle) product of M_ω' and M_ω''.
QSymmElement overlapping_shuffle(const Composition& a, const Composition& b);

/// Bilinear extension of overlapping_shuffle.
QSymmElement multiply(const QSymmElement& x, const QSymmElement& y);

/// The length+1 splits of ω, in order.
std::vector<std::pair<Composition, Composition>> deconcatenation(const Composition& omega);

/// Z_{i1}…Z_{ik} as its index list.
using NSymmWord = std::vector<int>;

/// Leibnitz coproduct of a word: Π (Σ_{i+j=n} Z_i⊗Z_j), Z_0 = 1.
std::map<std::pair<NSymmWord, NSymmWord>, Integer> nsymm_coproduct(const NSymmWord& x);

/// Kronecker pairing ⟨Z_x, M_ω⟩.
Integer pairing(const NSymmWord& x, const Composition& omega);
Integer pairing(const NSymmWord& x, const QSymmElement& element);

struct DualityReport {
  bool passed = true;
  int max_weight = 0;
  std::size_t checks = 0;
  std::string failure;
};

/// For all words and compositions of weight <= max_weight:
///   ⟨Δx, α⊗β⟩ = ⟨x, α·β⟩  and  ⟨xy, α⟩ = ⟨x⊗y, Δα⟩.
DualityReport verify_duality(int max_weight);

std::string to_string(const QSymmElement& x);

} // namespace hopfz::qsymm
