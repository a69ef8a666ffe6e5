#pragma once

// Integral cohomology of moment-angle complexes through the Koszul algebra
// Λ[u_1..u_m] ⊗ Z[K], |u_i| = 1, |v_i| = 2, d(u_i) = v_i, and its
// dualization into a Hopf presentation.
//
// The differential and the product both preserve the multidegree
// indicator(S) + a of u_S v^a, so cohomology is computed block by block.
// Each block only contains the monomials u_S v^(c - 1_S) for S inside the
// support of c, which keeps every matrix at most 2^|supp c| wide.

#include "hopfz/error.hpp"
#include "hopfz/hopf.hpp"
#include "hopfz/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopfz::koszul {

/// Bit i-1 set for vertex i. Complexes have at most 64 vertices.
using VertexSet = std::uint64_t;

/// Vertices are numbered 1..m.
class SimplicialComplex {
public:
  /// Closure of the given faces. Every vertex must lie in some face.
  static SimplicialComplex from_maximal_faces(int m, const std::vector<std::vector<int>>& faces);
  /// The face list must already be closed under subsets and contain every
  /// singleton; the empty face may be omitted.
  static SimplicialComplex from_faces(int m, const std::vector<std::vector<int>>& faces);

  static SimplicialComplex simplex(int m);
  static SimplicialComplex simplex_boundary(int m);
  /// Boundary of the n-gon, vertices in cyclic order.
  static SimplicialComplex polygon(int n);

  int vertex_count() const { return m_; }
  bool is_face(VertexSet s) const;
  /// Every face including the empty one, as sorted vertex lists.
  std::vector<std::vector<int>> faces() const;
  std::vector<std::vector<int>> maximal_faces() const;
  /// Generators of the Stanley-Reisner ideal.
  std::vector<std::vector<int>> minimal_nonfaces() const;

private:
  SimplicialComplex(int m, std::vector<VertexSet> faces);
  int m_ = 0;
  std::vector<VertexSet> faces_; // sorted
};

std::vector<int> vertices_of(VertexSet s);

/// u_S v^a. Exponents are indexed by vertex - 1.
struct Monomial {
  VertexSet u = 0;
  std::vector<int> v;

  int degree() const;
  /// indicator(u) + v.
  std::vector<int> multidegree() const;
  auto operator<=>(const Monomial&) const = default;
};

class Dga {
public:
  explicit Dga(SimplicialComplex k) : complex_(std::move(k)) {}
  const SimplicialComplex& complex() const { return complex_; }
  int vertex_count() const { return complex_.vertex_count(); }
  /// False when the support of the polynomial part is a non-face.
  bool is_nonzero(const Monomial& mono) const;
  /// Nonzero monomials of the given degree, grouped by multidegree.
  std::vector<Monomial> monomials_of_degree(int degree) const;

private:
  SimplicialComplex complex_;
};

using DgaPtr = std::shared_ptr<const Dga>;

DgaPtr build_dga(SimplicialComplex k);

class DgaElement {
public:
  using Terms = std::map<Monomial, Integer>;

  explicit DgaElement(DgaPtr dga);
  static DgaElement one(DgaPtr dga);
  /// u_{us[0]} u_{us[1]} ... v_{vs[0]} v_{vs[1]} ...; the u letters are
  /// sorted with the permutation sign, repeated u letters give zero.
  static DgaElement monomial(DgaPtr dga, const std::vector<int>& us, const std::vector<int>& vs,
                             const Integer& coeff = 1);

  const DgaPtr& dga() const { return dga_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& mono) const;
  /// Monomials killed by the Stanley-Reisner relations are dropped.
  void add_term(const Monomial& mono, const Integer& coeff);
  bool is_homogeneous_of_degree(int d) const;

  DgaElement& operator+=(const DgaElement& other);
  DgaElement& operator-=(const DgaElement& other);
  DgaElement& operator*=(const Integer& scalar);
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
  friend DgaElement operator-(DgaElement a) { return a *= -1; }
  friend DgaElement operator*(const Integer& s, DgaElement a) { return a *= s; }
  bool operator==(const DgaElement& other) const { return terms_ == other.terms_; }

  /// "u1u2v3v4 - v1^2"; "0" for zero.
  std::string to_string() const;

private:
  DgaPtr dga_;
  Terms terms_;
};

std::string to_string(const Monomial& mono);

DgaElement multiply(const DgaElement& x, const DgaElement& y);
inline DgaElement operator*(const DgaElement& x, const DgaElement& y) { return multiply(x, y); }
DgaElement differential(const DgaElement& x);

struct CohomologyClass {
  int degree = 0;
  std::vector<int> multidegree;
  DgaElement representative;
  std::string label;
};

struct DegreeSummary {
  int degree = 0;
  std::size_t rank = 0;
  /// Invariant factors > 1.
  IntVector torsion;
};

struct CohomologyOptions {
  /// Shuffle the monomial order inside every block before any elimination.
  std::optional<std::uint64_t> scramble_seed;
};

class Cohomology {
public:
  const DgaPtr& dga() const { return dga_; }
  int max_degree() const { return max_degree_; }
  /// Index d holds degree d, for d = 0..max_degree.
  const std::vector<DegreeSummary>& degrees() const { return degrees_; }
  std::vector<std::size_t> ranks() const;
  bool has_torsion() const;
  /// Free classes ordered by degree, then multidegree as a sorted vertex
  /// list, labelled "h<degree>_<k>".
  const std::vector<CohomologyClass>& classes() const { return classes_; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Coordinates of a homogeneous cocycle of degree <= max_degree in the
  /// class basis. Throws PreconditionError for non-cocycles and TorsionError
  /// when the degree carries torsion.
  std::map<std::size_t, Integer> coordinates(const DgaElement& cocycle) const;
  /// x - y is a coboundary.
  bool cohomologous(const DgaElement& x, const DgaElement& y) const;

private:
  friend Cohomology cohomology(const DgaPtr&, int, const CohomologyOptions&);

  struct BlockDegree {
    std::vector<Monomial> basis;
    /// Columns are coboundaries in basis coordinates.
    std::vector<IntVector> coboundaries;
    std::vector<std::size_t> class_indices;
  };

  DgaPtr dga_;
  int max_degree_ = 0;
  std::vector<DegreeSummary> degrees_;
  std::vector<CohomologyClass> classes_;
  std::map<std::pair<std::vector<int>, int>, BlockDegree> blocks_;
};

/// Throws PreconditionError when max_degree < 0.
Cohomology cohomology(const DgaPtr& dga, int max_degree, const CohomologyOptions& options = {});

/// products[{i, j}] = coordinates of classes[i]·classes[j], nonzero products
/// with total degree <= max_degree only.
struct CupStructure {
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Integer>> products;

  /// Coefficient of class k in classes[i]·classes[j].
  Integer constant(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Throws TorsionError when a target degree carries torsion.
CupStructure cup_structure(const Cohomology& h);

/// Generators are the duals of the positive-degree classes, named by their
/// labels, with Δ̃ẑ = Σ c(x,y;z) x̂⊗ŷ where x·y = Σ c(x,y;z) z. Truncation
/// degree is the cohomology range. Throws TorsionError on any torsion.
HopfPresentation coalgebra_from_ring(const Cohomology& h, const CupStructure& cup);

/// Same dualization in another basis: one named cocycle per class, forming
/// a unimodular change of basis in every positive degree. Throws
/// PreconditionError otherwise.
HopfPresentation coalgebra_from_cocycles(const Cohomology& h,
                                         const std::vector<std::pair<std::string, DgaElement>>& basis);

} // namespace hopfz::koszul
