#include "hopfz/catalog.hpp"

#include <functional>
#include <tuple>

namespace hopfz::catalog {

namespace {

using Builder = std::function<HopfPresentation(int)>;

std::string indexed(const char* stem, int i) { return stem + std::to_string(i); }

HopfPresentation build_family(const char* stem, int max_degree,
                              const std::function<Integer(int n, int k)>& coeff) {
  std::vector<Generator> gens;
  for (int n = 1; 2 * n <= max_degree; ++n) gens.push_back({indexed(stem, n), 2 * n});
  auto alpha = make_alphabet(std::move(gens));
  std::map<Letter, TensorSquareElement> reduced;
  for (Letter g = 0; g < alpha->size(); ++g) {
    const int n = static_cast<int>(g) + 1;
    TensorSquareElement t(alpha);
    for (int k = 1; k < n; ++k)
      t.add_term(Word{static_cast<Letter>(k - 1)}, Word{static_cast<Letter>(n - k - 1)},
                 coeff(n, k));
    reduced.emplace(g, std::move(t));
  }
  return HopfPresentation(alpha, std::move(reduced), max_degree);
}

/// Keeps generators of degree <= max_degree; coproduct terms refer to ids.
struct FixedData {
  std::vector<Generator> gens;
  std::vector<std::tuple<std::string, std::string, std::string, long>> terms;
};

HopfPresentation build_fixed(const FixedData& data, int max_degree) {
  std::vector<Generator> gens;
  for (const auto& g : data.gens)
    if (g.degree <= max_degree) gens.push_back(g);
  auto alpha = make_alphabet(std::move(gens));
  std::map<Letter, TensorSquareElement> reduced;
  for (const auto& [gen, left, right, c] : data.terms) {
    auto g = alpha->find(gen);
    if (!g) continue;
    auto [it, _] = reduced.try_emplace(*g, alpha);
    it->second.add_term(Word{alpha->index_of(left)}, Word{alpha->index_of(right)}, c);
  }
  return HopfPresentation(alpha, std::move(reduced), max_degree);
}

FixedData pentagon_data() {
  FixedData s;
  for (int i = 1; i <= 5; ++i) s.gens.push_back({indexed("a", i), 3});
  for (int i = 1; i <= 5; ++i) s.gens.push_back({indexed("b", i), 4});
  s.gens.push_back({"c", 7});
  for (int i = 1; i <= 5; ++i) {
    s.terms.emplace_back("c", indexed("a", i), indexed("b", i), 1);
    s.terms.emplace_back("c", indexed("b", i), indexed("a", i), 1);
  }
  return s;
}

struct Entry {
  PresetInfo info;
  Builder build;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"leibnitz", "free Leibnitz-Hopf algebra Z<u1,u2,...>, Δu_n = Σ u_i⊗u_j", 12},
       [](int d) { return build_family("u", d, [](int, int) { return Integer(1); }); }},
      {{"binomial", "Z<w1,w2,...> with Δw_n = Σ C(n,k) w_k⊗w_{n-k}", 12},
       [](int d) {
         return build_family("w", d, [](int n, int k) {
           return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
         });
       }},
      {{"primitive_spheres", "Z<xi1,xi2,...> with every xi_n primitive", 12},
       [](int d) { return build_family("xi", d, [](int, int) { return Integer(0); }); }},
      {{"polynomial_primitive", "Z[w] with w primitive of degree 2", 12},
       [](int d) { return build_fixed({{{"w", 2}}, {}}, d); }},
      {{"cp2", "loop-suspension homology of CP^2", 4},
       [](int d) { return build_fixed({{{"u1", 2}, {"u2", 4}}, {{"u2", "u1", "u1", 1}}}, d); }},
      {{"s2xs2", "loop-suspension homology of S^2 x S^2", 4},
       [](int d) {
         return build_fixed({{{"u1", 2}, {"u2", 2}, {"v", 4}},
                             {{"v", "u1", "u2", 1}, {"v", "u2", "u1", 1}}},
                            d);
       }},
      {{"square_manifold", "moment-angle manifold over the square", 6},
       [](int d) {
         return build_fixed({{{"a1", 3}, {"a2", 3}, {"b", 6}},
                             {{"b", "a1", "a2", 1}, {"b", "a2", "a1", -1}}},
                            d);
       }},
      {{"pentagon_manifold", "moment-angle manifold over the pentagon", 7},
       [](int d) { return build_fixed(pentagon_data(), d); }},
  };
  return entries;
}

const Entry& lookup(std::string_view name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw PreconditionError("unknown preset '" + std::string(name) + "'");
}

} // namespace

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> infos = [] {
    std::vector<PresetInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

HopfPresentation preset(std::string_view name, int max_degree) {
  const Entry& e = lookup(name);
  if (max_degree < 1) throw PreconditionError("preset degree must be >= 1");
  return e.build(max_degree);
}

HopfPresentation preset(std::string_view name) {
  return preset(name, lookup(name).info.default_degree);
}

// --- intersection forms ---------------------------------------------------------

void IntersectionFormInput::validate() const {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw PreconditionError("intersection form must be a nonempty square matrix");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i))
        throw PreconditionError("intersection form is not symmetric at (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
}

HopfPresentation presentation_from_intersection_form(const IntersectionFormInput& input) {
  input.validate();
  const std::size_t k = input.a.rows();
  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back({"u" + std::to_string(i), 2});
  gens.push_back({"v", 4});
  auto alpha = make_alphabet(std::move(gens));
  TensorSquareElement dv(alpha);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      dv.add_term(Word{static_cast<Letter>(i)}, Word{static_cast<Letter>(j)}, input.a(i, j));
  std::map<Letter, TensorSquareElement> reduced;
  reduced.emplace(static_cast<Letter>(k), std::move(dv));
  return HopfPresentation(alpha, std::move(reduced), 4);
}

std::variant<GammaSolution, GammaObstruction> solve_gamma(const IntersectionFormInput& input) {
  input.validate();
  const std::size_t k = input.a.rows();
  for (std::size_t i = 0; i < k; ++i)
    if (!divides(2, input.a(i, i))) return GammaObstruction{i, input.a(i, i)};
  GammaSolution sol{IntMatrix(k, k), IntMatrix::identity(k)};
  for (std::size_t i = 0; i < k; ++i) {
    sol.gamma(i, i) = -input.a(i, i) / 2;
    for (std::size_t j = i + 1; j < k; ++j) sol.gamma(i, j) = -input.a(i, j);
  }
  return sol;
}

bool verify_gamma(const IntersectionFormInput& input, const GammaSolution& solution) {
  const IntMatrix lhs = transpose(solution.lambda) * input.a * solution.lambda;
  const IntMatrix gt = transpose(solution.gamma);
  IntMatrix rhs(lhs.rows(), lhs.cols());
  for (std::size_t i = 0; i < rhs.rows(); ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) = -solution.gamma(i, j) - gt(i, j);
  return is_unimodular(solution.lambda) && lhs == rhs;
}

// --- desuspension --------------------------------------------------------------

ObstructionElement desuspension_obstruction(int n, int max_degree) {
  if (n < 1) throw PreconditionError("desuspension index must be >= 1");
  if (2 * n > max_degree)
    throw TruncationError("w" + std::to_string(n) + " has degree " + std::to_string(2 * n) +
                          " above the truncation degree " + std::to_string(max_degree));
  const HopfPresentation p = preset("binomial", max_degree);
  const Letter g = p.alphabet()->index_of("w" + std::to_string(n));
  PrimitivizeOutcome outcome = primitivize_generator(p, g);
  if (!std::holds_alternative<GeneratorCorrection>(outcome))
    throw Error("binomial presentation unexpectedly obstructed at w" + std::to_string(n));
  const Element& corr = std::get<GeneratorCorrection>(outcome).correction;
  return ObstructionElement{n, Element::word(p.alphabet(), Word{g}) + corr, -corr};
}

IsoCandidate desuspension_isomorphism(int max_degree) {
  IsoCandidate f;
  for (int n = 1; 2 * n <= max_degree; ++n)
    f.images.push_back(desuspension_obstruction(n, max_degree).a_xi);
  return f;
}

} // namespace hopfz::catalog
