#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, integer
// kernels and complete solution of linear systems over Z.

#include "hopfz/error.hpp"
#include "hopfz/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hopfz {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix transpose(const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Column-style Hermite form: a · u = h with u unimodular.
///
/// h is lower staircase: pivot j sits at (pivot_rows[j], j) with
/// pivot_rows strictly increasing, each pivot positive, entries to the left
/// of a pivot in its row reduced into [0, pivot), and every entry above a
/// pivot in its column zero. Columns at index >= rank are zero.
struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteResult hermite_normal_form(const IntMatrix& m);

/// u · a · v = s with s diagonal, d1 | d2 | ..., every d >= 0.
struct SmithResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  /// Diagonal entries d1..d_min(rows, cols).
  IntVector diagonal() const;
  std::size_t rank() const;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// A row functional y with every entry of yᵀM divisible by `modulus` while
/// yᵀb = `residue` is not. Proves that Mx = b has no integer solution.
struct DivisibilityWitness {
  IntVector functional;
  Integer modulus;
  Integer residue;
};

/// Re-verifies a witness against a system from scratch.
bool verify_witness(const IntMatrix& m, const IntVector& b, const DivisibilityWitness& w);

struct IntSolveResult {
  enum class Tag { Solvable, Unsolvable };

  Tag tag = Tag::Unsolvable;
  IntVector particular;
  /// Lattice basis of the full integer kernel, in canonical echelon form.
  std::vector<IntVector> kernel_basis;
  std::optional<DivisibilityWitness> witness;

  bool solvable() const { return tag == Tag::Solvable; }
};

/// Complete integer solution set of m·x = b.
///
/// The particular solution is the canonical coset representative: it is
/// reduced against the kernel lattice from the last coordinate to the first,
/// so it is supported on the earliest columns the system allows.
IntSolveResult solve_integer(const IntMatrix& m, const IntVector& b);

/// Canonical lattice basis of {x : m·x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Hermite basis of the lattice spanned by `generators` (all of length n),
/// eliminated from the last coordinate to the first. Every returned vector
/// has a distinct trailing (last nonzero) coordinate holding a positive
/// value, and vectors are listed with trailing coordinates decreasing.
std::vector<IntVector> trailing_echelon(std::vector<IntVector> generators, std::size_t n);

/// Reduces x modulo a lattice given in trailing_echelon form, so that each
/// trailing coordinate of the basis lands in [0, pivot).
IntVector reduce_modulo(IntVector x, const std::vector<IntVector>& echelon);

} // namespace hopfz
