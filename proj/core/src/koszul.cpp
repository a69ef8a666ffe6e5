#include "hopfz/koszul.hpp"

#include "hopfz/linz.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

namespace hopfz::koszul {

namespace {

constexpr int kMaxVertices = 64;

VertexSet bit(int vertex) { return VertexSet{1} << (vertex - 1); }

void check_vertex_count(int m) {
  if (m < 1 || m > kMaxVertices)
    throw PreconditionError("vertex count must lie in 1..64, got " + std::to_string(m));
}

VertexSet mask_of(int m, const std::vector<int>& face) {
  VertexSet s = 0;
  for (int v : face) {
    if (v < 1 || v > m)
      throw PreconditionError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
    s |= bit(v);
  }
  return s;
}

std::string face_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices_of(s)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Multidegree as a sorted vertex list with repetition: (2,0,1) → [1,1,3].
std::vector<int> vertex_list(const std::vector<int>& multidegree) {
  std::vector<int> out;
  for (std::size_t i = 0; i < multidegree.size(); ++i)
    for (int k = 0; k < multidegree[i]; ++k) out.push_back(static_cast<int>(i) + 1);
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto ka = vertex_list(a.multidegree());
  const auto kb = vertex_list(b.multidegree());
  if (ka != kb) return ka < kb;
  return vertices_of(a.u) < vertices_of(b.u);
}

/// Calls fn(c) for every exponent vector c of length m with |c| <= max_sum.
void for_each_multidegree(int m, int max_sum, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == m) {
      fn(c);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      c[i] = e;
      rec(i + 1, budget - e);
    }
    c[i] = 0;
  };
  rec(0, max_sum);
}

/// Nonzero monomials u_S v^(c - 1_S) of the block c.
std::vector<Monomial> block_monomials(const Dga& dga, const std::vector<int>& c) {
  VertexSet support = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > 0) support |= VertexSet{1} << i;
  std::vector<Monomial> out;
  for (VertexSet s = support;; s = (s - 1) & support) {
    Monomial mono{s, c};
    for (std::size_t i = 0; i < c.size(); ++i)
      if (s & (VertexSet{1} << i)) --mono.v[i];
    if (dga.is_nonzero(mono)) out.push_back(std::move(mono));
    if (s == 0) break;
  }
  return out;
}

/// (-1)^{#(s, t) with s in a, t in b, s > t}
int merge_sign(VertexSet a, VertexSet b) {
  int inversions = 0;
  for (VertexSet t = b; t; t &= t - 1) {
    const int tb = std::countr_zero(t);
    inversions += std::popcount(tb + 1 < 64 ? a >> (tb + 1) : VertexSet{0});
  }
  return inversions % 2 ? -1 : 1;
}

} // namespace

std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

// --- simplicial complexes ------------------------------------------------------

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> faces)
    : m_(m), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::from_maximal_faces(int m,
                                                        const std::vector<std::vector<int>>& faces) {
  check_vertex_count(m);
  std::vector<VertexSet> all{0};
  VertexSet covered = 0;
  for (const auto& f : faces) {
    const VertexSet top = mask_of(m, f);
    covered |= top;
    for (VertexSet s = top;; s = (s - 1) & top) {
      all.push_back(s);
      if (s == 0) break;
    }
  }
  for (int v = 1; v <= m; ++v)
    if (!(covered & bit(v)))
      throw PreconditionError("vertex " + std::to_string(v) + " lies in no face");
  return SimplicialComplex(m, std::move(all));
}

SimplicialComplex SimplicialComplex::from_faces(int m, const std::vector<std::vector<int>>& faces) {
  check_vertex_count(m);
  std::vector<VertexSet> all{0};
  for (const auto& f : faces) all.push_back(mask_of(m, f));
  SimplicialComplex k(m, std::move(all));
  for (VertexSet f : k.faces_)
    for (VertexSet rest = f; rest; rest &= rest - 1) {
      const VertexSet sub = f & ~(rest & -rest);
      if (!k.is_face(sub))
        throw PreconditionError("face set is not closed: " + face_string(f) +
                                " is listed but " + face_string(sub) + " is not");
    }
  for (int v = 1; v <= m; ++v)
    if (!k.is_face(bit(v)))
      throw PreconditionError("vertex " + std::to_string(v) + " is not a face");
  return k;
}

SimplicialComplex SimplicialComplex::simplex(int m) {
  check_vertex_count(m);
  std::vector<int> all;
  for (int v = 1; v <= m; ++v) all.push_back(v);
  return from_maximal_faces(m, {all});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
  if (m < 2) throw PreconditionError("simplex boundary needs at least 2 vertices");
  std::vector<std::vector<int>> facets;
  for (int skip = 1; skip <= m; ++skip) {
    std::vector<int> f;
    for (int v = 1; v <= m; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return from_maximal_faces(m, facets);
}

SimplicialComplex SimplicialComplex::polygon(int n) {
  if (n < 3) throw PreconditionError("a polygon needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  for (int v = 1; v <= n; ++v) edges.push_back({v, v % n + 1});
  return from_maximal_faces(n, edges);
}

bool SimplicialComplex::is_face(VertexSet s) const {
  return std::binary_search(faces_.begin(), faces_.end(), s);
}

std::vector<std::vector<int>> SimplicialComplex::faces() const {
  std::vector<std::vector<int>> out;
  for (VertexSet f : faces_) out.push_back(vertices_of(f));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::maximal_faces() const {
  std::vector<std::vector<int>> out;
  for (VertexSet f : faces_) {
    bool maximal = true;
    for (int v = 1; v <= m_ && maximal; ++v)
      if (!(f & bit(v)) && is_face(f | bit(v))) maximal = false;
    if (maximal) out.push_back(vertices_of(f));
  }
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::minimal_nonfaces() const {
  std::vector<VertexSet> found;
  for (VertexSet f : faces_)
    for (int v = 1; v <= m_; ++v) {
      const VertexSet g = f | bit(v);
      if (g == f || is_face(g)) continue;
      bool minimal = true;
      for (VertexSet rest = g; rest && minimal; rest &= rest - 1)
        if (!is_face(g & ~(rest & -rest))) minimal = false;
      if (minimal) found.push_back(g);
    }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<std::vector<int>> out;
  for (VertexSet g : found) out.push_back(vertices_of(g));
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

// --- monomials and the algebra -------------------------------------------------

int Monomial::degree() const {
  int d = std::popcount(u);
  for (int e : v) d += 2 * e;
  return d;
}

std::vector<int> Monomial::multidegree() const {
  std::vector<int> c = v;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (u & (VertexSet{1} << i)) ++c[i];
  return c;
}

std::string to_string(const Monomial& mono) {
  std::string out;
  for (int i : vertices_of(mono.u)) out += "u" + std::to_string(i);
  for (std::size_t i = 0; i < mono.v.size(); ++i) {
    if (mono.v[i] == 0) continue;
    out += "v" + std::to_string(i + 1);
    if (mono.v[i] > 1) out += "^" + std::to_string(mono.v[i]);
  }
  return out.empty() ? "1" : out;
}

bool Dga::is_nonzero(const Monomial& mono) const {
  VertexSet support = 0;
  for (std::size_t i = 0; i < mono.v.size(); ++i)
    if (mono.v[i] > 0) support |= VertexSet{1} << i;
  return complex_.is_face(support);
}

std::vector<Monomial> Dga::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for_each_multidegree(vertex_count(), degree, [&](const std::vector<int>& c) {
    for (auto& mono : block_monomials(*this, c))
      if (mono.degree() == degree) out.push_back(std::move(mono));
  });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

DgaPtr build_dga(SimplicialComplex k) { return std::make_shared<const Dga>(std::move(k)); }

DgaElement::DgaElement(DgaPtr dga) : dga_(std::move(dga)) {
  if (!dga_) throw PreconditionError("DgaElement needs an algebra");
}

DgaElement DgaElement::one(DgaPtr dga) {
  DgaElement x(std::move(dga));
  x.add_term(Monomial{0, std::vector<int>(static_cast<std::size_t>(x.dga_->vertex_count()), 0)}, 1);
  return x;
}

DgaElement DgaElement::monomial(DgaPtr dga, const std::vector<int>& us, const std::vector<int>& vs,
                                const Integer& coeff) {
  DgaElement x(std::move(dga));
  const int m = x.dga_->vertex_count();
  Monomial mono{0, std::vector<int>(static_cast<std::size_t>(m), 0)};
  int inversions = 0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    mask_of(m, {us[i]});
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      if (us[i] == us[j]) return x;
      if (us[i] > us[j]) ++inversions;
    }
    mono.u |= bit(us[i]);
  }
  for (int v : vs) {
    mask_of(m, {v});
    ++mono.v[static_cast<std::size_t>(v - 1)];
  }
  x.add_term(mono, inversions % 2 ? Integer(-coeff) : coeff);
  return x;
}

Integer DgaElement::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Integer(0) : it->second;
}

void DgaElement::add_term(const Monomial& mono, const Integer& coeff) {
  if (coeff == 0 || !dga_->is_nonzero(mono)) return;
  if (mono.v.size() != static_cast<std::size_t>(dga_->vertex_count()))
    throw PreconditionError("monomial has the wrong number of exponents");
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool DgaElement::is_homogeneous_of_degree(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree() == d; });
}

DgaElement& DgaElement::operator+=(const DgaElement& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

DgaElement& DgaElement::operator-=(const DgaElement& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

DgaElement& DgaElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

std::string DgaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : sorted) {
    const Integer mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    const std::string body = koszul::to_string(mono);
    if (mag != 1 || body == "1") os << mag.get_str();
    if (body != "1") os << body;
    first = false;
  }
  return os.str();
}

DgaElement multiply(const DgaElement& x, const DgaElement& y) {
  if (x.dga() != y.dga() && x.dga()->complex().faces() != y.dga()->complex().faces())
    throw PreconditionError("elements belong to different algebras");
  DgaElement out(x.dga());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      if (a.u & b.u) continue;
      Monomial prod{a.u | b.u, a.v};
      for (std::size_t i = 0; i < prod.v.size(); ++i) prod.v[i] += b.v[i];
      out.add_term(prod, merge_sign(a.u, b.u) * ca * cb);
    }
  return out;
}

DgaElement differential(const DgaElement& x) {
  DgaElement out(x.dga());
  for (const auto& [mono, c] : x.terms()) {
    int position = 0;
    for (VertexSet s = mono.u; s; s &= s - 1, ++position) {
      const int b = std::countr_zero(s);
      Monomial image{mono.u & ~(VertexSet{1} << b), mono.v};
      ++image.v[static_cast<std::size_t>(b)];
      out.add_term(image, position % 2 ? Integer(-c) : c);
    }
  }
  return out;
}

// --- cohomology ----------------------------------------------------------------

namespace {

IntVector to_coordinates(const DgaElement& x, const std::map<Monomial, std::size_t>& index,
                         std::size_t n) {
  IntVector out(n, Integer(0));
  for (const auto& [mono, c] : x.terms()) out[index.at(mono)] = c;
  return out;
}

IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

struct PendingClass {
  int degree;
  std::vector<int> key;
  std::vector<int> multidegree;
  std::size_t order;
  DgaElement representative;
};

} // namespace

std::vector<std::size_t> Cohomology::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.rank);
  return out;
}

bool Cohomology::has_torsion() const {
  return std::any_of(degrees_.begin(), degrees_.end(),
                     [](const DegreeSummary& d) { return !d.torsion.empty(); });
}

std::optional<std::size_t> Cohomology::find(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  return std::nullopt;
}

Cohomology cohomology(const DgaPtr& dga, int max_degree, const CohomologyOptions& options) {
  if (max_degree < 0) throw PreconditionError("cohomology degree cap must be >= 0");
  Cohomology h;
  h.dga_ = dga;
  h.max_degree_ = max_degree;
  for (int d = 0; d <= max_degree; ++d) h.degrees_.push_back({d, 0, {}});

  std::mt19937_64 rng(options.scramble_seed.value_or(0));
  std::vector<PendingClass> pending;

  for_each_multidegree(dga->vertex_count(), max_degree, [&](const std::vector<int>& c) {
    std::map<int, std::vector<Monomial>> by_degree;
    for (auto& mono : block_monomials(*dga, c)) by_degree[mono.degree()].push_back(std::move(mono));
    if (by_degree.empty()) return;
    for (auto& [d, list] : by_degree) {
      std::sort(list.begin(), list.end(), canonical_less);
      if (options.scramble_seed) std::shuffle(list.begin(), list.end(), rng);
    }
    auto basis_of = [&](int d) -> const std::vector<Monomial>& {
      static const std::vector<Monomial> empty;
      auto it = by_degree.find(d);
      return it == by_degree.end() ? empty : it->second;
    };
    auto index_of = [](const std::vector<Monomial>& basis) {
      std::map<Monomial, std::size_t> idx;
      for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
      return idx;
    };

    for (const auto& [k, basis] : by_degree) {
      if (k > max_degree) continue;
      const std::size_t n = basis.size();
      const auto& above = basis_of(k + 1);
      const auto& below = basis_of(k - 1);
      const auto idx_k = index_of(basis);
      const auto idx_up = index_of(above);

      // cocycles
      std::vector<IntVector> cocycles;
      if (above.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          IntVector e(n, Integer(0));
          e[i] = 1;
          cocycles.push_back(std::move(e));
        }
      } else {
        std::vector<IntVector> images;
        for (const auto& mono : basis) {
          DgaElement x(dga);
          x.add_term(mono, 1);
          images.push_back(to_coordinates(differential(x), idx_up, above.size()));
        }
        cocycles = integer_kernel(from_columns(images, above.size()));
      }

      // coboundaries
      std::vector<IntVector> coboundaries;
      for (const auto& mono : below) {
        DgaElement x(dga);
        x.add_term(mono, 1);
        IntVector b = to_coordinates(differential(x), idx_k, n);
        if (!is_zero_vector(b)) coboundaries.push_back(std::move(b));
      }

      Cohomology::BlockDegree& record = h.blocks_[{c, k}];
      record.basis = basis;
      record.coboundaries = coboundaries;

      const std::size_t z = cocycles.size();
      if (z == 0) continue;
      const IntMatrix kmat = from_columns(cocycles, n);

      std::vector<IntVector> reps;
      if (coboundaries.empty()) {
        reps = cocycles;
      } else {
        std::vector<IntVector> in_z;
        for (const auto& b : coboundaries) in_z.push_back(solve_integer(kmat, b).particular);
        const SmithResult snf = smith_normal_form(from_columns(in_z, z));
        const IntVector diag = snf.diagonal();
        const std::size_t r = snf.rank();
        for (std::size_t i = 0; i < r; ++i)
          if (diag[i] != 1) h.degrees_[k].torsion.push_back(diag[i]);
        for (std::size_t j = r; j < z; ++j) {
          IntVector e(z, Integer(0));
          e[j] = 1;
          reps.push_back(kmat * solve_integer(snf.u, e).particular);
        }
      }
      h.degrees_[k].rank += reps.size();
      if (reps.empty()) continue;

      const auto boundary_echelon = trailing_echelon(coboundaries, n);
      for (auto& r : reps) r = reduce_modulo(std::move(r), boundary_echelon);
      reps = trailing_echelon(std::move(reps), n);
      std::reverse(reps.begin(), reps.end());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        IntVector r = reduce_modulo(std::move(reps[i]), boundary_echelon);
        auto lead = std::find_if(r.begin(), r.end(), [](const Integer& x) { return x != 0; });
        if (lead != r.end() && *lead < 0)
          for (auto& x : r) x = -x;
        DgaElement rep(dga);
        for (std::size_t j = 0; j < n; ++j) rep.add_term(basis[j], r[j]);
        pending.push_back({k, vertex_list(c), c, i, std::move(rep)});
      }
    }
  });

  std::sort(pending.begin(), pending.end(), [](const PendingClass& a, const PendingClass& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.key != b.key) return a.key < b.key;
    return a.order < b.order;
  });
  std::map<int, int> counter;
  for (auto& p : pending) {
    const std::size_t index = h.classes_.size();
    h.blocks_.at({p.multidegree, p.degree}).class_indices.push_back(index);
    h.classes_.push_back({p.degree, p.multidegree, std::move(p.representative),
                          "h" + std::to_string(p.degree) + "_" + std::to_string(++counter[p.degree])});
  }
  return h;
}

std::map<std::size_t, Integer> Cohomology::coordinates(const DgaElement& cocycle) const {
  std::map<std::size_t, Integer> out;
  if (cocycle.is_zero()) return out;
  const int d = cocycle.terms().begin()->first.degree();
  if (!cocycle.is_homogeneous_of_degree(d))
    throw PreconditionError("cocycle is not homogeneous");
  if (d > max_degree_)
    throw TruncationError("degree " + std::to_string(d) + " exceeds the cohomology range " +
                          std::to_string(max_degree_));
  if (!differential(cocycle).is_zero())
    throw PreconditionError("'" + cocycle.to_string() + "' is not a cocycle");
  if (!degrees_[d].torsion.empty())
    throw TorsionError("degree " + std::to_string(d) + " cohomology has torsion");

  std::map<std::vector<int>, DgaElement> parts;
  for (const auto& [mono, c] : cocycle.terms()) {
    auto [it, _] = parts.try_emplace(mono.multidegree(), dga_);
    it->second.add_term(mono, c);
  }
  for (const auto& [c, part] : parts) {
    const BlockDegree& block = blocks_.at({c, d});
    const std::size_t n = block.basis.size();
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx.emplace(block.basis[i], i);
    std::vector<IntVector> columns;
    for (std::size_t ci : block.class_indices) {
      IntVector v(n, Integer(0));
      for (const auto& [mono, k] : classes_[ci].representative.terms()) v[idx.at(mono)] = k;
      columns.push_back(std::move(v));
    }
    for (const auto& b : block.coboundaries) columns.push_back(b);
    const IntVector x = to_coordinates(part, idx, n);
    if (columns.empty()) continue;
    const IntSolveResult sol = solve_integer(from_columns(columns, n), x);
    if (!sol.solvable()) throw Error("cocycle not expressible in the class basis");
    for (std::size_t j = 0; j < block.class_indices.size(); ++j)
      if (sol.particular[j] != 0) out[block.class_indices[j]] = sol.particular[j];
  }
  return out;
}

bool Cohomology::cohomologous(const DgaElement& x, const DgaElement& y) const {
  const DgaElement diff = x - y;
  if (diff.is_zero()) return true;
  if (!differential(diff).is_zero()) return false;
  std::map<std::pair<std::vector<int>, int>, DgaElement> parts;
  for (const auto& [mono, c] : diff.terms()) {
    auto [it, _] = parts.try_emplace({mono.multidegree(), mono.degree()}, dga_);
    it->second.add_term(mono, c);
  }
  for (const auto& [key, part] : parts) {
    if (key.second > max_degree_)
      throw TruncationError("degree " + std::to_string(key.second) +
                            " exceeds the cohomology range");
    const BlockDegree& block = blocks_.at(key);
    if (block.coboundaries.empty()) return false;
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < block.basis.size(); ++i) idx.emplace(block.basis[i], i);
    const IntVector v = to_coordinates(part, idx, block.basis.size());
    if (!solve_integer(from_columns(block.coboundaries, block.basis.size()), v).solvable())
      return false;
  }
  return true;
}

Integer CupStructure::constant(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = products.find({i, j});
  if (it == products.end()) return 0;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? Integer(0) : jt->second;
}

CupStructure cup_structure(const Cohomology& h) {
  CupStructure out;
  const auto& cls = h.classes();
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j) {
      if (cls[i].degree + cls[j].degree > h.max_degree()) continue;
      const DgaElement p = cls[i].representative * cls[j].representative;
      if (p.is_zero()) continue;
      auto coords = h.coordinates(p);
      if (!coords.empty()) out.products.emplace(std::make_pair(i, j), std::move(coords));
    }
  return out;
}

HopfPresentation coalgebra_from_ring(const Cohomology& h, const CupStructure& cup) {
  for (const auto& d : h.degrees())
    if (!d.torsion.empty())
      throw TorsionError("cohomology has torsion in degree " + std::to_string(d.degree) +
                         "; the coalgebra needs torsion-free homology");
  const auto& cls = h.classes();
  std::vector<Generator> gens;
  std::map<std::size_t, Letter> letter_of;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].degree == 0) continue;
    letter_of.emplace(i, static_cast<Letter>(gens.size()));
    gens.push_back({cls[i].label, cls[i].degree});
  }
  auto alpha = make_alphabet(std::move(gens));
  std::map<Letter, TensorSquareElement> reduced;
  for (const auto& [pair, coords] : cup.products) {
    auto li = letter_of.find(pair.first);
    auto lj = letter_of.find(pair.second);
    if (li == letter_of.end() || lj == letter_of.end()) continue;
    for (const auto& [k, c] : coords) {
      auto [it, _] = reduced.try_emplace(letter_of.at(k), alpha);
      it->second.add_term(Word{li->second}, Word{lj->second}, c);
    }
  }
  return HopfPresentation(alpha, std::move(reduced), std::max(1, h.max_degree()));
}

HopfPresentation coalgebra_from_cocycles(const Cohomology& h,
                                         const std::vector<std::pair<std::string, DgaElement>>& basis) {
  for (const auto& d : h.degrees())
    if (!d.torsion.empty())
      throw TorsionError("cohomology has torsion in degree " + std::to_string(d.degree));
  const auto& cls = h.classes();

  // Per degree: old class indices, and the matrix whose columns are the new
  // basis in old coordinates.
  std::map<int, std::vector<std::size_t>> old_of;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].degree > 0) old_of[cls[i].degree].push_back(i);
  std::map<int, std::vector<std::size_t>> new_of;
  std::vector<int> degree_of(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const DgaElement& x = basis[b].second;
    if (x.is_zero()) throw PreconditionError("basis cocycle '" + basis[b].first + "' is zero");
    degree_of[b] = x.terms().begin()->first.degree();
    if (degree_of[b] == 0) throw PreconditionError("basis cocycles must have positive degree");
    new_of[degree_of[b]].push_back(b);
  }
  auto old_coordinates = [&](int d, const std::map<std::size_t, Integer>& coords) {
    const auto& olds = old_of[d];
    IntVector v(olds.size(), Integer(0));
    for (const auto& [k, c] : coords)
      v[static_cast<std::size_t>(std::find(olds.begin(), olds.end(), k) - olds.begin())] = c;
    return v;
  };
  std::map<int, IntMatrix> change;
  for (const auto& [d, olds] : old_of) {
    const auto& news = new_of[d];
    if (news.size() != olds.size())
      throw PreconditionError("degree " + std::to_string(d) + " needs " +
                              std::to_string(olds.size()) + " basis cocycles, got " +
                              std::to_string(news.size()));
    std::vector<IntVector> columns;
    for (std::size_t b : news) columns.push_back(old_coordinates(d, h.coordinates(basis[b].second)));
    IntMatrix m = from_columns(columns, olds.size());
    if (!is_unimodular(m))
      throw PreconditionError("basis cocycles in degree " + std::to_string(d) +
                              " are not a basis of the cohomology");
    change.emplace(d, std::move(m));
  }
  for (const auto& [d, news] : new_of)
    if (!old_of.count(d))
      throw PreconditionError("no cohomology in degree " + std::to_string(d));

  std::vector<Generator> gens;
  for (const auto& [label, x] : basis) gens.push_back({label, x.terms().begin()->first.degree()});
  auto alpha = make_alphabet(std::move(gens));
  std::map<Letter, TensorSquareElement> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const int d = degree_of[i] + degree_of[j];
      if (d > h.max_degree() || !change.count(d)) continue;
      const DgaElement p = basis[i].second * basis[j].second;
      if (p.is_zero()) continue;
      const IntVector q = solve_integer(change.at(d), old_coordinates(d, h.coordinates(p))).particular;
      const auto& news = new_of.at(d);
      for (std::size_t k = 0; k < news.size(); ++k) {
        if (q[k] == 0) continue;
        auto [it, _] = reduced.try_emplace(static_cast<Letter>(news[k]), alpha);
        it->second.add_term(Word{static_cast<Letter>(i)}, Word{static_cast<Letter>(j)}, q[k]);
      }
    }
  return HopfPresentation(alpha, std::move(reduced), std::max(1, h.max_degree()));
}

} // namespace hopfz::koszul
