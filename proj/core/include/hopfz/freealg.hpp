#pragma once

// Free graded associative algebra over the integers and its tensor square.

#include "hopfz/error.hpp"
#include "hopfz/integer.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfz {

using Letter = std::uint32_t;

/// Sequence of letter indices into an Alphabet. The empty word is the unit.
using Word = std::vector<Letter>;
using WordPair = std::pair<Word, Word>;

struct Generator {
  std::string id;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

/// Ordered list of graded generators.
///
/// The canonical monomial order used for every deterministic listing compares
/// words by degree, then by length, then lexicographically by letter rank.
/// Letter rank puts odd-degree letters before even-degree letters, and within
/// one parity the letter with the higher index first.
class Alphabet {
public:
  explicit Alphabet(std::vector<Generator> generators);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](Letter i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }

  std::optional<Letter> find(std::string_view id) const;
  /// Throws AlphabetError for unknown ids.
  Letter index_of(std::string_view id) const;

  int degree(Letter i) const { return generators_[i].degree; }
  int word_degree(const Word& w) const;

  /// Strict weak order on words; see class comment.
  bool monomial_less(const Word& a, const Word& b) const;
  bool pair_less(const WordPair& a, const WordPair& b) const;

  /// "u1|u2"; "1" for the empty word.
  std::string format_word(const Word& w) const;

  bool operator==(const Alphabet& other) const { return generators_ == other.generators_; }

private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, Letter> index_;
  std::vector<int> rank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

/// Throws AlphabetError unless both alphabets hold the same generator list.
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Finite integer combination of words.
class Element {
public:
  using Terms = std::map<Word, Integer>;

  explicit Element(AlphabetPtr alphabet);

  static Element unit(AlphabetPtr alphabet);
  static Element letter(AlphabetPtr alphabet, std::string_view id);
  static Element word(AlphabetPtr alphabet, Word w, const Integer& coeff = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Word& w) const;
  void add_term(const Word& w, const Integer& coeff);

  /// Terms listed in the canonical monomial order.
  std::vector<std::pair<Word, Integer>> sorted_terms() const;

  /// Largest word degree, or nullopt for zero.
  std::optional<int> max_degree() const;
  bool is_homogeneous_of_degree(int d) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Integer& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1; }
  friend Element operator*(const Integer& s, Element a) { return a *= s; }
  friend Element operator*(Element a, const Integer& s) { return a *= s; }

  /// Term-set equality; alphabets must agree.
  bool operator==(const Element& other) const;

  std::string to_string() const;

private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/// Sub-sum of terms of word degree exactly d.
Element graded_component(const Element& x, int d);

/// All words of degree exactly d, in the canonical monomial order.
std::vector<Word> words_of_degree(const Alphabet& alphabet, int d);

/// Words of length >= 2 and degree exactly d, in the canonical monomial order.
/// Throws PreconditionError when d < 2.
std::vector<Word> decomposable_basis(const Alphabet& alphabet, int d);

/// Finite integer combination of ordered word pairs (left ⊗ right).
class TensorSquareElement {
public:
  using Terms = std::map<WordPair, Integer>;

  explicit TensorSquareElement(AlphabetPtr alphabet);

  static TensorSquareElement pure(AlphabetPtr alphabet, Word left, Word right,
                                  const Integer& coeff = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Word& left, const Word& right) const;
  void add_term(const Word& left, const Word& right, const Integer& coeff);

  std::vector<std::pair<WordPair, Integer>> sorted_terms() const;

  /// Every term has deg(left) + deg(right) == d.
  bool is_homogeneous_of_degree(int d) const;

  TensorSquareElement& operator+=(const TensorSquareElement& other);
  TensorSquareElement& operator-=(const TensorSquareElement& other);
  TensorSquareElement& operator*=(const Integer& scalar);

  friend TensorSquareElement operator+(TensorSquareElement a, const TensorSquareElement& b) {
    return a += b;
  }
  friend TensorSquareElement operator-(TensorSquareElement a, const TensorSquareElement& b) {
    return a -= b;
  }
  friend TensorSquareElement operator-(TensorSquareElement a) { return a *= -1; }
  friend TensorSquareElement operator*(const Integer& s, TensorSquareElement a) {
    return a *= s;
  }

  bool operator==(const TensorSquareElement& other) const;

  std::string to_string() const;

private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

/// (a⊗b)·(c⊗d) = (-1)^(deg b · deg c) ac⊗bd, extended bilinearly.
TensorSquareElement tensor_multiply(const TensorSquareElement& x, const TensorSquareElement& y);

/// Bilinear a ⊗ b.
TensorSquareElement tensor(const Element& a, const Element& b);

} // namespace hopfz
