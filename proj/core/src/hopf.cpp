#include "hopfz/hopf.hpp"

#include <algorithm>
#include <tuple>

namespace hopfz {

HopfPresentation::HopfPresentation(AlphabetPtr alphabet,
                                   std::map<Letter, TensorSquareElement> reduced,
                                   int truncation_degree)
    : alphabet_(std::move(alphabet)), truncation_degree_(truncation_degree) {
  if (!alphabet_) throw PresentationError("null alphabet");
  if (truncation_degree_ < 1) throw PresentationError("truncation degree must be >= 1");
  reduced_.assign(alphabet_->size(), TensorSquareElement(alphabet_));
  for (Letter g = 0; g < alphabet_->size(); ++g) {
    if (alphabet_->degree(g) > truncation_degree_)
      throw PresentationError("generator '" + (*alphabet_)[g].id + "' has degree " +
                              std::to_string(alphabet_->degree(g)) +
                              " above the truncation degree " +
                              std::to_string(truncation_degree_));
  }
  for (auto& [g, t] : reduced) {
    if (g >= alphabet_->size()) throw PresentationError("reduced coproduct for unknown generator");
    require_same_alphabet(alphabet_, t.alphabet());
    const std::string& id = (*alphabet_)[g].id;
    for (const auto& [pair, c] : t.terms()) {
      if (pair.first.empty() || pair.second.empty())
        throw PresentationError("reduced coproduct of '" + id +
                                "' has a tensor factor of degree 0");
    }
    if (!t.is_homogeneous_of_degree(alphabet_->degree(g)))
      throw PresentationError("reduced coproduct of '" + id + "' is not homogeneous of degree " +
                              std::to_string(alphabet_->degree(g)));
    reduced_[g] = t;
  }
}

TensorSquareElement HopfPresentation::coproduct_of(Letter g) const {
  TensorSquareElement out = reduced_[g];
  out.add_term(Word{g}, Word{}, 1);
  out.add_term(Word{}, Word{g}, 1);
  return out;
}

bool HopfPresentation::is_primitively_presented() const {
  return std::all_of(reduced_.begin(), reduced_.end(),
                     [](const TensorSquareElement& t) { return t.is_zero(); });
}

HopfPresentation lie_hopf_presentation(AlphabetPtr alphabet, int truncation_degree) {
  return HopfPresentation(std::move(alphabet), {}, truncation_degree);
}

namespace {

void check_truncation(const HopfPresentation& p, const Element& x) {
  require_same_alphabet(p.alphabet(), x.alphabet());
  if (auto d = x.max_degree(); d && *d > p.truncation_degree())
    throw TruncationError("element of degree " + std::to_string(*d) +
                          " exceeds truncation degree " + std::to_string(p.truncation_degree()));
}

TensorSquareElement word_coproduct(const HopfPresentation& p, const Word& w) {
  TensorSquareElement out = TensorSquareElement::pure(p.alphabet(), {}, {});
  for (Letter l : w) out = tensor_multiply(out, p.coproduct_of(l));
  return out;
}

/// Memoized word coproducts for repeated axiom checks.
class CoproductCache {
public:
  explicit CoproductCache(const HopfPresentation& p) : p_(p) {}

  const TensorSquareElement& get(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    TensorSquareElement value = w.empty() ? TensorSquareElement::pure(p_.alphabet(), {}, {})
                                          : [&] {
                                              Word prefix(w.begin(), w.end() - 1);
                                              return tensor_multiply(get(prefix),
                                                                     p_.coproduct_of(w.back()));
                                            }();
    return cache_.emplace(w, std::move(value)).first->second;
  }

private:
  const HopfPresentation& p_;
  std::map<Word, TensorSquareElement> cache_;
};

using Triple = std::tuple<Word, Word, Word>;
using TensorCube = std::map<Triple, Integer>;

void add_cube(TensorCube& t, Triple key, const Integer& c) {
  auto [it, inserted] = t.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

std::string format_cube_difference(const Alphabet& a, const TensorCube& lhs, const TensorCube& rhs) {
  for (const auto& [k, c] : lhs) {
    auto it = rhs.find(k);
    const Integer other = it == rhs.end() ? Integer(0) : it->second;
    if (other != c)
      return "coefficient of " + a.format_word(std::get<0>(k)) + " ⊗ " +
             a.format_word(std::get<1>(k)) + " ⊗ " + a.format_word(std::get<2>(k)) + ": " +
             c.get_str() + " vs " + other.get_str();
  }
  for (const auto& [k, c] : rhs)
    if (!lhs.count(k))
      return "coefficient of " + a.format_word(std::get<0>(k)) + " ⊗ " +
             a.format_word(std::get<1>(k)) + " ⊗ " + a.format_word(std::get<2>(k)) + ": 0 vs " +
             c.get_str();
  return {};
}

class AntipodeEvaluator {
public:
  explicit AntipodeEvaluator(const HopfPresentation& p)
      : p_(p), letters_(p.alphabet()->size()) {}

  Element of_word(const Word& w) {
    const Alphabet& a = *p_.alphabet();
    Element out = Element::unit(p_.alphabet());
    int sign_exponent = 0;
    int prefix_degree = 0;
    for (Letter l : w) {
      sign_exponent += (prefix_degree % 2) * (a.degree(l) % 2);
      prefix_degree += a.degree(l);
      out = multiply(of_letter(l), out);
    }
    if (sign_exponent % 2 != 0) out *= -1;
    return out;
  }

  Element of_element(const Element& x) {
    Element out(p_.alphabet());
    for (const auto& [w, c] : x.terms()) out += c * of_word(w);
    return out;
  }

private:
  const Element& of_letter(Letter g) {
    if (!letters_[g]) {
      Element s = -Element::word(p_.alphabet(), Word{g});
      for (const auto& [pair, c] : p_.reduced_coproduct_of(g).terms())
        s -= c * multiply(of_word(pair.first), Element::word(p_.alphabet(), pair.second));
      letters_[g] = std::move(s);
    }
    return *letters_[g];
  }

  const HopfPresentation& p_;
  std::vector<std::optional<Element>> letters_;
};

void require_within(const HopfPresentation& p, int max_degree) {
  if (max_degree > p.truncation_degree())
    throw TruncationError("check degree " + std::to_string(max_degree) +
                          " exceeds truncation degree " + std::to_string(p.truncation_degree()));
}

} // namespace

TensorSquareElement full_coproduct(const HopfPresentation& p, const Element& x) {
  check_truncation(p, x);
  TensorSquareElement out(p.alphabet());
  for (const auto& [w, c] : x.terms()) out += c * word_coproduct(p, w);
  return out;
}

TensorSquareElement reduced_coproduct(const HopfPresentation& p, const Element& x) {
  check_truncation(p, x);
  if (x.coefficient(Word{}) != 0)
    throw PreconditionError("reduced coproduct of an element with a degree-0 term");
  TensorSquareElement out = full_coproduct(p, x);
  for (const auto& [w, c] : x.terms()) {
    out.add_term(w, {}, -c);
    out.add_term({}, w, -c);
  }
  return out;
}

bool is_primitive(const HopfPresentation& p, const Element& x) {
  return reduced_coproduct(p, x).is_zero();
}

Element antipode(const HopfPresentation& p, const Element& x) {
  check_truncation(p, x);
  AntipodeEvaluator eval(p);
  return eval.of_element(x);
}

AxiomReport verify_coassociativity(const HopfPresentation& p, int max_degree) {
  require_within(p, max_degree);
  AxiomReport report;
  report.check = "coassociativity";
  const Alphabet& a = *p.alphabet();
  CoproductCache cache(p);
  for (Letter g = 0; g < a.size(); ++g) {
    if (a.degree(g) > max_degree) continue;
    TensorCube left, right;
    const TensorSquareElement delta = p.coproduct_of(g);
    for (const auto& [pair, c] : delta.terms()) {
      for (const auto& [inner, c2] : cache.get(pair.first).terms())
        add_cube(left, Triple{inner.first, inner.second, pair.second}, c * c2);
      for (const auto& [inner, c2] : cache.get(pair.second).terms())
        add_cube(right, Triple{pair.first, inner.first, inner.second}, c * c2);
    }
    if (left != right) {
      report.passed = false;
      report.failing_degree = a.degree(g);
      report.failing_element = a[g].id;
      report.detail = format_cube_difference(a, left, right);
      return report;
    }
  }
  return report;
}

AxiomReport verify_counit(const HopfPresentation& p, int max_degree) {
  require_within(p, max_degree);
  AxiomReport report;
  report.check = "counit";
  const AlphabetPtr& alpha = p.alphabet();
  CoproductCache cache(p);
  for (int d = 0; d <= max_degree; ++d) {
    for (const Word& w : words_of_degree(*alpha, d)) {
      Element left(alpha), right(alpha);
      for (const auto& [pair, c] : cache.get(w).terms()) {
        if (pair.second.empty()) left.add_term(pair.first, c);
        if (pair.first.empty()) right.add_term(pair.second, c);
      }
      const Element expected = Element::word(alpha, w);
      if (!(left == expected) || !(right == expected)) {
        report.passed = false;
        report.failing_degree = d;
        report.failing_element = alpha->format_word(w);
        report.detail = "m(Id⊗ε)Δ = " + left.to_string() + ", m(ε⊗Id)Δ = " + right.to_string();
        return report;
      }
    }
  }
  return report;
}

AxiomReport verify_antipode(const HopfPresentation& p, int max_degree) {
  require_within(p, max_degree);
  AxiomReport report;
  report.check = "antipode";
  const AlphabetPtr& alpha = p.alphabet();
  CoproductCache cache(p);
  AntipodeEvaluator s(p);
  std::map<Word, Element> s_cache;
  auto s_of = [&](const Word& w) -> const Element& {
    auto it = s_cache.find(w);
    if (it == s_cache.end()) it = s_cache.emplace(w, s.of_word(w)).first;
    return it->second;
  };
  for (int d = 1; d <= max_degree; ++d) {
    for (const Word& w : words_of_degree(*alpha, d)) {
      Element right(alpha), left(alpha);
      for (const auto& [pair, c] : cache.get(w).terms()) {
        right += c * multiply(Element::word(alpha, pair.first), s_of(pair.second));
        left += c * multiply(s_of(pair.first), Element::word(alpha, pair.second));
      }
      if (!right.is_zero() || !left.is_zero()) {
        report.passed = false;
        report.failing_degree = d;
        report.failing_element = alpha->format_word(w);
        report.detail = "m(Id⊗S)Δ = " + right.to_string() + ", m(S⊗Id)Δ = " + left.to_string();
        return report;
      }
    }
  }
  return report;
}

std::vector<AxiomReport> verify_hopf_axioms(const HopfPresentation& p, int max_degree) {
  std::vector<AxiomReport> out;
  out.push_back(verify_coassociativity(p, max_degree));
  if (!out.back().passed) return out;
  out.push_back(verify_counit(p, max_degree));
  if (!out.back().passed) return out;
  out.push_back(verify_antipode(p, max_degree));
  return out;
}

std::map<Word, Integer> DualAlgebraTable::product(const Word& w1, const Word& w2) const {
  auto it = constants.find(WordPair{w1, w2});
  return it == constants.end() ? std::map<Word, Integer>{} : it->second;
}

DualAlgebraTable dual_multiplication_table(const HopfPresentation& p, int max_degree) {
  require_within(p, max_degree);
  DualAlgebraTable table{p.alphabet(), max_degree, {}, {}};
  CoproductCache cache(p);
  for (int d = 1; d <= max_degree; ++d) {
    auto words = words_of_degree(*p.alphabet(), d);
    for (const Word& w : words) {
      for (const auto& [pair, c] : cache.get(w).terms()) {
        if (pair.first.empty() || pair.second.empty()) continue;
        table.constants[pair][w] += c;
      }
    }
    table.basis[d] = std::move(words);
  }
  return table;
}

Element apply_algebra_map(const IsoCandidate& f, const Element& x) {
  if (f.images.size() != x.alphabet()->size())
    throw AlphabetError("algebra map and element use different alphabets");
  if (f.images.empty()) return x;
  const AlphabetPtr& target = f.images.front().alphabet();
  Element out(target);
  for (const auto& [w, c] : x.terms()) {
    Element term = Element::unit(target);
    for (Letter l : w) term = multiply(term, f.images[l]);
    out += c * term;
  }
  return out;
}

TensorSquareElement apply_tensor_map(const IsoCandidate& f, const TensorSquareElement& x,
                                     const AlphabetPtr& target) {
  TensorSquareElement out(target);
  for (const auto& [pair, c] : x.terms()) {
    const Element l = apply_algebra_map(f, Element::word(x.alphabet(), pair.first));
    const Element r = apply_algebra_map(f, Element::word(x.alphabet(), pair.second));
    out += c * tensor(l, r);
  }
  return out;
}

AxiomReport verify_hopf_iso(const IsoCandidate& f, const HopfPresentation& src,
                            const HopfPresentation& dst, int max_degree) {
  require_within(src, max_degree);
  require_within(dst, max_degree);
  const Alphabet& sa = *src.alphabet();
  const Alphabet& da = *dst.alphabet();
  if (f.images.size() != sa.size())
    throw PreconditionError("candidate has " + std::to_string(f.images.size()) +
                            " images for " + std::to_string(sa.size()) + " generators");
  for (Letter g = 0; g < sa.size(); ++g) {
    require_same_alphabet(f.images[g].alphabet(), dst.alphabet());
    if (!f.images[g].is_homogeneous_of_degree(sa.degree(g)))
      throw PreconditionError("image of '" + sa[g].id + "' is not homogeneous of degree " +
                              std::to_string(sa.degree(g)));
  }

  AxiomReport report;
  report.check = "hopf_isomorphism";
  auto fail = [&](int degree, std::string element, std::string detail) {
    report.passed = false;
    report.failing_degree = degree;
    report.failing_element = std::move(element);
    report.detail = std::move(detail);
    return report;
  };

  // (i) the linear parts form an invertible change of generators per degree.
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<Letter> s_letters, d_letters;
    for (Letter g = 0; g < sa.size(); ++g)
      if (sa.degree(g) == d) s_letters.push_back(g);
    for (Letter g = 0; g < da.size(); ++g)
      if (da.degree(g) == d) d_letters.push_back(g);
    if (s_letters.size() != d_letters.size())
      return fail(d, "", "degree " + std::to_string(d) + " has " +
                             std::to_string(s_letters.size()) + " source and " +
                             std::to_string(d_letters.size()) + " target generators");
    IntMatrix lin(d_letters.size(), s_letters.size());
    for (std::size_t j = 0; j < s_letters.size(); ++j)
      for (std::size_t i = 0; i < d_letters.size(); ++i)
        lin(i, j) = f.images[s_letters[j]].coefficient(Word{d_letters[i]});
    if (!is_unimodular(lin))
      return fail(d, "", "linear part in degree " + std::to_string(d) + " is not unimodular: " +
                             lin.to_string());
  }

  // (ii) coproduct compatibility, (iii) counit, antipode spot-check.
  for (Letter g = 0; g < sa.size(); ++g) {
    if (sa.degree(g) > max_degree) continue;
    const Element image = f.images[g];
    const TensorSquareElement lhs = apply_tensor_map(f, src.coproduct_of(g), dst.alphabet());
    const TensorSquareElement rhs = full_coproduct(dst, image);
    if (!(lhs == rhs))
      return fail(sa.degree(g), sa[g].id,
                  "(f⊗f)Δ = " + lhs.to_string() + " but Δf = " + rhs.to_string());
    if (image.coefficient(Word{}) != 0)
      return fail(sa.degree(g), sa[g].id, "ε(f(g)) != ε(g)");
    const Element s_lhs =
        apply_algebra_map(f, antipode(src, Element::word(src.alphabet(), Word{g})));
    const Element s_rhs = antipode(dst, image);
    if (!(s_lhs == s_rhs))
      return fail(sa.degree(g), sa[g].id,
                  "f(S g) = " + s_lhs.to_string() + " but S f(g) = " + s_rhs.to_string());
  }
  return report;
}

IsoCandidate invert_triangular(const IsoCandidate& f, const AlphabetPtr& alphabet) {
  const Alphabet& a = *alphabet;
  if (f.images.size() != a.size()) throw PreconditionError("candidate/alphabet size mismatch");
  for (Letter g = 0; g < a.size(); ++g) {
    require_same_alphabet(f.images[g].alphabet(), alphabet);
    for (const auto& [w, c] : f.images[g].terms()) {
      if (w.size() == 1 && (w[0] != g || c != 1))
        throw PreconditionError("invert_triangular requires an identity linear part");
      if (w.size() == 1) continue;
      if (w.empty()) throw PreconditionError("image has a constant term");
    }
    if (f.images[g].coefficient(Word{g}) != 1)
      throw PreconditionError("invert_triangular requires an identity linear part");
  }
  std::vector<Letter> order(a.size());
  for (Letter g = 0; g < a.size(); ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(),
                   [&](Letter x, Letter y) { return a.degree(x) < a.degree(y); });

  // h(g) = g - h(c_g); c_g only involves letters of lower degree.
  IsoCandidate inverse;
  for (Letter g = 0; g < a.size(); ++g) inverse.images.push_back(Element::word(alphabet, Word{g}));
  for (Letter g : order) {
    Element correction = f.images[g] - Element::word(alphabet, Word{g});
    inverse.images[g] = Element::word(alphabet, Word{g}) - apply_algebra_map(inverse, correction);
  }
  return inverse;
}

} // namespace hopfz
