#include "hopfz/freealg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfz {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (Letter i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.id.empty()) throw PresentationError("generator id must be nonempty");
    if (g.degree < 1)
      throw PresentationError("generator '" + g.id + "' has degree " +
                              std::to_string(g.degree) + "; degrees must be >= 1");
    if (!index_.emplace(g.id, i).second)
      throw PresentationError("duplicate generator id '" + g.id + "'");
  }
  std::vector<Letter> order(generators_.size());
  std::iota(order.begin(), order.end(), Letter{0});
  std::sort(order.begin(), order.end(), [&](Letter a, Letter b) {
    const bool odd_a = generators_[a].degree % 2 != 0;
    const bool odd_b = generators_[b].degree % 2 != 0;
    if (odd_a != odd_b) return odd_a;
    return a > b;
  });
  rank_.resize(generators_.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = static_cast<int>(r);
}

std::optional<Letter> Alphabet::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw AlphabetError("unknown generator '" + std::string(id) + "'");
}

int Alphabet::word_degree(const Word& w) const {
  int d = 0;
  for (Letter l : w) d += generators_[l].degree;
  return d;
}

bool Alphabet::monomial_less(const Word& a, const Word& b) const {
  const int da = word_degree(a), db = word_degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  return false;
}

bool Alphabet::pair_less(const WordPair& a, const WordPair& b) const {
  const int da = word_degree(a.first) + word_degree(a.second);
  const int db = word_degree(b.first) + word_degree(b.second);
  if (da != db) return da < db;
  if (a.first != b.first) return monomial_less(a.first, b.first);
  return monomial_less(a.second, b.second);
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '|';
    out += generators_[w[i]].id;
  }
  return out;
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw AlphabetError("operands use different alphabets");
}

// --- Element -----------------------------------------------------------------

Element::Element(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("null alphabet");
}

Element Element::unit(AlphabetPtr alphabet) { return word(std::move(alphabet), {}); }

Element Element::letter(AlphabetPtr alphabet, std::string_view id) {
  const Letter l = alphabet->index_of(id);
  return word(std::move(alphabet), Word{l});
}

Element Element::word(AlphabetPtr alphabet, Word w, const Integer& coeff) {
  Element e(std::move(alphabet));
  for (Letter l : w)
    if (l >= e.alphabet_->size()) throw AlphabetError("letter index out of range");
  e.add_term(w, coeff);
  return e;
}

Integer Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Element::add_term(const Word& w, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Word, Integer>> Element::sorted_terms() const {
  std::vector<std::pair<Word, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return alphabet_->monomial_less(a.first, b.first); });
  return out;
}

std::optional<int> Element::max_degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) d = std::max(d.value_or(0), alphabet_->word_degree(w));
  return d;
}

bool Element::is_homogeneous_of_degree(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return alphabet_->word_degree(t.first) == d; });
}

Element& Element::operator+=(const Element& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Element& Element::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

bool Element::operator==(const Element& other) const {
  require_same_alphabet(alphabet_, other.alphabet_);
  return terms_ == other.terms_;
}

namespace {

void append_signed(std::ostringstream& os, bool first, const Integer& c, const std::string& body,
                   bool is_unit) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (is_unit) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << ' ';
    os << body;
  }
}

} // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : sorted_terms()) {
    append_signed(os, first, c, alphabet_->format_word(w), w.empty());
    first = false;
  }
  return os.str();
}

Element multiply(const Element& a, const Element& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  Element out(a.alphabet());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

Element graded_component(const Element& x, int d) {
  Element out(x.alphabet());
  for (const auto& [w, c] : x.terms())
    if (x.alphabet()->word_degree(w) == d) out.add_term(w, c);
  return out;
}

namespace {

void extend_words(const Alphabet& alphabet, int remaining, Word& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (Letter l = 0; l < alphabet.size(); ++l) {
    const int d = alphabet.degree(l);
    if (d > remaining) continue;
    prefix.push_back(l);
    extend_words(alphabet, remaining - d, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Word> words_of_degree(const Alphabet& alphabet, int d) {
  std::vector<Word> out;
  if (d < 0) return out;
  Word prefix;
  extend_words(alphabet, d, prefix, out);
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return alphabet.monomial_less(a, b); });
  return out;
}

std::vector<Word> decomposable_basis(const Alphabet& alphabet, int d) {
  if (d < 2) throw PreconditionError("decomposable_basis requires degree >= 2");
  auto all = words_of_degree(alphabet, d);
  std::vector<Word> out;
  for (auto& w : all)
    if (w.size() >= 2) out.push_back(std::move(w));
  return out;
}

// --- TensorSquareElement ------------------------------------------------------

TensorSquareElement::TensorSquareElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw AlphabetError("null alphabet");
}

TensorSquareElement TensorSquareElement::pure(AlphabetPtr alphabet, Word left, Word right,
                                              const Integer& coeff) {
  TensorSquareElement t(std::move(alphabet));
  for (Letter l : left)
    if (l >= t.alphabet_->size()) throw AlphabetError("letter index out of range");
  for (Letter l : right)
    if (l >= t.alphabet_->size()) throw AlphabetError("letter index out of range");
  t.add_term(left, right, coeff);
  return t;
}

Integer TensorSquareElement::coefficient(const Word& left, const Word& right) const {
  auto it = terms_.find(WordPair{left, right});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TensorSquareElement::add_term(const Word& left, const Word& right, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(WordPair{left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<WordPair, Integer>> TensorSquareElement::sorted_terms() const {
  std::vector<std::pair<WordPair, Integer>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return alphabet_->pair_less(a.first, b.first); });
  return out;
}

bool TensorSquareElement::is_homogeneous_of_degree(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return alphabet_->word_degree(t.first.first) + alphabet_->word_degree(t.first.second) == d;
  });
}

TensorSquareElement& TensorSquareElement::operator+=(const TensorSquareElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [p, c] : other.terms_) add_term(p.first, p.second, c);
  return *this;
}

TensorSquareElement& TensorSquareElement::operator-=(const TensorSquareElement& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  for (const auto& [p, c] : other.terms_) add_term(p.first, p.second, -c);
  return *this;
}

TensorSquareElement& TensorSquareElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

bool TensorSquareElement::operator==(const TensorSquareElement& other) const {
  require_same_alphabet(alphabet_, other.alphabet_);
  return terms_ == other.terms_;
}

std::string TensorSquareElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : sorted_terms()) {
    append_signed(os, first, c,
                  alphabet_->format_word(p.first) + " ⊗ " + alphabet_->format_word(p.second),
                  false);
    first = false;
  }
  return os.str();
}

TensorSquareElement tensor_multiply(const TensorSquareElement& x, const TensorSquareElement& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  const Alphabet& alpha = *x.alphabet();
  TensorSquareElement out(x.alphabet());
  for (const auto& [px, cx] : x.terms()) {
    const int deg_b = alpha.word_degree(px.second);
    for (const auto& [py, cy] : y.terms()) {
      const int deg_c = alpha.word_degree(py.first);
      Word left = px.first;
      left.insert(left.end(), py.first.begin(), py.first.end());
      Word right = px.second;
      right.insert(right.end(), py.second.begin(), py.second.end());
      Integer c = cx * cy;
      if ((deg_b % 2 != 0) && (deg_c % 2 != 0)) c = -c;
      out.add_term(left, right, c);
    }
  }
  return out;
}

TensorSquareElement tensor(const Element& a, const Element& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  TensorSquareElement out(a.alphabet());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
  return out;
}

} // namespace hopfz
