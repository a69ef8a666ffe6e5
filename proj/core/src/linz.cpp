#include "hopfz/linz.hpp"

#include <algorithm>
#include <sstream>

namespace hopfz {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector dimension mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return abs(determinant(a)) == 1;
}

// --- Hermite ---------------------------------------------------------------------

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult out{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t n = m.cols();
  std::size_t piv = 0;

  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    h.add_col_multiple(dst, src, k);
    u.add_col_multiple(dst, src, k);
  };

  for (std::size_t r = 0; r < m.rows() && piv < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j) {
        if (h(r, j) == 0) continue;
        if (best == n || abs(h(r, j)) < abs(h(r, best))) best = j;
      }
      if (best == n) break;
      h.swap_cols(piv, best);
      u.swap_cols(piv, best);
      bool done = true;
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (h(r, j) == 0) continue;
        col_op(j, piv, -floor_div(h(r, j), h(r, piv)));
        if (h(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, piv) == 0) continue;
    if (h(r, piv) < 0) {
      h.negate_col(piv);
      u.negate_col(piv);
    }
    for (std::size_t k = 0; k < piv; ++k) col_op(k, piv, -floor_div(h(r, k), h(r, piv)));
    out.pivot_rows.push_back(r);
    ++piv;
  }
  return out;
}

// --- Smith -----------------------------------------------------------------------

IntVector SmithResult::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

std::size_t SmithResult::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t br = rows, bc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (br == rows || abs(s(i, j)) < abs(s(br, bc))) {
            br = i;
            bc = j;
          }
        }
      if (br == rows) return out;
      s.swap_rows(t, br);
      u.swap_rows(t, br);
      s.swap_cols(t, bc);
      v.swap_cols(t, bc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = -floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = -floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(s(t, t), s(i, j))) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

// --- Solving -----------------------------------------------------------------------

bool verify_witness(const IntMatrix& m, const IntVector& b, const DivisibilityWitness& w) {
  if (w.functional.size() != m.rows() || b.size() != m.rows()) return false;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) acc += w.functional[r] * m(r, c);
    if (!divides(w.modulus, acc)) return false;
  }
  Integer residue = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) residue += w.functional[r] * b[r];
  return residue == w.residue && !divides(w.modulus, w.residue);
}

std::vector<IntVector> trailing_echelon(std::vector<IntVector> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.size() != n) throw DimensionError("lattice generator length mismatch");
  std::vector<IntVector> basis;
  std::vector<std::size_t> leads;
  for (std::size_t cc = n; cc-- > 0;) {
    for (;;) {
      std::size_t best = gens.size();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i][cc] == 0) continue;
        if (best == gens.size() || abs(gens[i][cc]) < abs(gens[best][cc])) best = i;
      }
      if (best == gens.size()) break;
      bool done = true;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i == best || gens[i][cc] == 0) continue;
        Integer q = floor_div(gens[i][cc], gens[best][cc]);
        for (std::size_t k = 0; k < n; ++k) gens[i][k] -= q * gens[best][k];
        if (gens[i][cc] != 0) done = false;
      }
      if (!done) continue;
      IntVector p = std::move(gens[best]);
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(best));
      if (p[cc] < 0)
        for (auto& x : p) x = -x;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Integer q = floor_div(basis[j][cc], p[cc]);
        if (q != 0)
          for (std::size_t k = 0; k < n; ++k) basis[j][k] -= q * p[k];
      }
      basis.push_back(std::move(p));
      leads.push_back(cc);
      break;
    }
  }
  return basis;
}

IntVector reduce_modulo(IntVector x, const std::vector<IntVector>& echelon) {
  for (const auto& v : echelon) {
    std::size_t lead = v.size();
    while (lead-- > 0 && v[lead] == 0) {
    }
    if (lead >= v.size()) continue;
    Integer q = floor_div(x[lead], v[lead]);
    if (q != 0)
      for (std::size_t k = 0; k < x.size(); ++k) x[k] -= q * v[k];
  }
  return x;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const HermiteResult hnf = hermite_normal_form(m);
  std::vector<IntVector> gens;
  for (std::size_t j = hnf.rank(); j < m.cols(); ++j) gens.push_back(hnf.u.column(j));
  return trailing_echelon(std::move(gens), m.cols());
}

IntSolveResult solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw DimensionError("right-hand side has " + std::to_string(b.size()) +
                         " entries; system has " + std::to_string(m.rows()) + " rows");
  const HermiteResult hnf = hermite_normal_form(m);
  const std::size_t rank = hnf.rank();

  IntVector y(m.cols());
  bool ok = true;
  for (std::size_t j = 0; j < rank && ok; ++j) {
    const std::size_t r = hnf.pivot_rows[j];
    Integer residual = b[r];
    for (std::size_t k = 0; k < j; ++k) residual -= hnf.h(r, k) * y[k];
    if (!divides(hnf.h(r, j), residual)) ok = false;
    else y[j] = residual / hnf.h(r, j);
  }
  if (ok) ok = (hnf.h * y) == b;

  IntSolveResult out;
  if (!ok) {
    const SmithResult snf = smith_normal_form(m);
    const IntVector c = snf.u * b;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Integer g = i < std::min(m.rows(), m.cols()) ? snf.s(i, i) : Integer(0);
      if (!divides(g, c[i])) {
        out.witness = DivisibilityWitness{snf.u.row(i), g, c[i]};
        break;
      }
    }
    out.tag = IntSolveResult::Tag::Unsolvable;
    return out;
  }

  std::vector<IntVector> gens;
  for (std::size_t j = rank; j < m.cols(); ++j) gens.push_back(hnf.u.column(j));
  out.tag = IntSolveResult::Tag::Solvable;
  out.kernel_basis = trailing_echelon(std::move(gens), m.cols());
  out.particular = reduce_modulo(hnf.u * y, out.kernel_basis);
  return out;
}

} // namespace hopfz
