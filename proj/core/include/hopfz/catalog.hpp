#pragma once

// Named Hopf presentations, the intersection-form construction for
// simply connected 4-manifolds, and desuspension obstructions.

#include "hopfz/hopf.hpp"
#include "hopfz/linz.hpp"
#include "hopfz/primitivize.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopfz::catalog {

struct PresetInfo {
  std::string name;
  std::string description;
  /// Truncation degree used when none is given.
  int default_degree;
};

const std::vector<PresetInfo>& preset_list();

/// Builds a named presentation keeping generators of degree <= max_degree.
/// Homology degrees are used verbatim: u_n, w_n and xi_n have degree 2n.
///
///   leibnitz              u_n, Δ̃u_n = Σ_{i+j=n} u_i⊗u_j
///   binomial              w_n, Δ̃w_n = Σ_{0<k<n} C(n,k) w_k⊗w_{n-k}
///   primitive_spheres     xi_n primitive
///   polynomial_primitive  single primitive w of degree 2
///   cp2                   u1 (2), u2 (4) with Δ̃u2 = u1⊗u1
///   s2xs2                 u1, u2 (2), v (4) with Δ̃v = u1⊗u2 + u2⊗u1
///   square_manifold       a1, a2 (3), b (6) with Δ̃b = a1⊗a2 - a2⊗a1
///   pentagon_manifold     a1..a5 (3), b1..b5 (4), c (7) with
///                         Δ̃c = Σ a_i⊗b_i + b_i⊗a_i
///
/// Throws PreconditionError for unknown names or max_degree < 1.
HopfPresentation preset(std::string_view name, int max_degree);
HopfPresentation preset(std::string_view name);

/// Symmetric intersection form on k degree-2 classes; the top class has
/// degree 4.
struct IntersectionFormInput {
  IntMatrix a;

  /// Throws PreconditionError unless a is square, k >= 1 and symmetric.
  void validate() const;
};

/// u_1..u_k primitive of degree 2, v of degree 4 with Δ̃v = Σ A_ij u_i⊗u_j.
HopfPresentation presentation_from_intersection_form(const IntersectionFormInput& input);

/// ΛᵀAΛ = -Γ - Γᵀ with Λ unimodular.
struct GammaSolution {
  IntMatrix gamma;
  IntMatrix lambda;
};

struct GammaObstruction {
  std::size_t index;
  Integer diagonal_entry;
};

/// With Λ = identity: Γ = -(strict upper part of A) - diag(A)/2 when every
/// diagonal entry is even, otherwise the first odd diagonal entry.
std::variant<GammaSolution, GammaObstruction> solve_gamma(const IntersectionFormInput& input);

/// ΛᵀAΛ == -Γ - Γᵀ exactly.
bool verify_gamma(const IntersectionFormInput& input, const GammaSolution& solution);

struct ObstructionElement {
  int n = 0;
  /// The primitive image of xi_n in the binomial presentation.
  Element a_xi;
  /// w_n - a_xi.
  Element obstruction;
};

/// Canonical primitive a₊ξ_n ≡ w_n modulo decomposables in
/// preset("binomial", max_degree). Requires 2n <= max_degree.
ObstructionElement desuspension_obstruction(int n, int max_degree);

/// ξ_n ↦ a₊ξ_n for every ξ_n of degree <= max_degree, as a candidate from
/// preset("primitive_spheres") to preset("binomial").
IsoCandidate desuspension_isomorphism(int max_degree);

} // namespace hopfz::catalog
