#include "doctest.h"

#include "hopfz/qsymm.hpp"

using namespace hopfz;
using namespace hopfz::qsymm;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

Polynomial poly_multiply(const Polynomial& x, const Polynomial& y) {
  Polynomial out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) {
      std::vector<int> e(ex.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      out[e] += cx * cy;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Reads a quasi-symmetric polynomial back into the M basis: the coefficient
/// of M_ω is the coefficient of t_1^{ω_1}…t_k^{ω_k}.
QSymmElement to_qsymm(const Polynomial& f, int numvars, int weight) {
  QSymmElement out;
  for (int n = 0; n <= weight; ++n)
    for (const auto& omega : compositions_of(n)) {
      if (static_cast<int>(omega.length()) > numvars) continue;
      std::vector<int> e(static_cast<std::size_t>(numvars), 0);
      for (std::size_t i = 0; i < omega.length(); ++i) e[i] = omega.parts()[i];
      auto it = f.find(e);
      if (it != f.end()) out[omega] = it->second;
    }
  return out;
}

} // namespace

TEST_SUITE("qsymm") {

TEST_CASE("compositions") {
  CHECK(Composition().weight() == 0);
  CHECK(Composition().length() == 0);
  CHECK(C({3, 1}).to_string() == "(3,1)");
  CHECK(Composition().to_string() == "()");
  CHECK(parse_composition("3,1") == C({3, 1}));
  CHECK(parse_composition("(3,1)") == C({3, 1}));
  CHECK(parse_composition("()") == Composition());
  CHECK(parse_composition("") == Composition());
  CHECK_THROWS_AS(C({2, 0}), PreconditionError);
  CHECK_THROWS_AS(parse_composition("2,x"), ParseError);
  for (int n = 1; n <= 8; ++n) {
    auto all = compositions_of(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    for (const auto& c : all) CHECK(c.weight() == n);
  }
  CHECK(compositions_of(0).size() == 1);
}

TEST_CASE("monomial expansion") {
  CHECK(monomial_expand(Composition(), 3) == Polynomial{{{0, 0, 0}, 1}});
  CHECK(monomial_expand(C({2}), 3) == Polynomial{{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}});
  CHECK(monomial_expand(C({1, 2}), 3) ==
        Polynomial{{{1, 2, 0}, 1}, {{1, 0, 2}, 1}, {{0, 1, 2}, 1}});
  CHECK(monomial_expand(C({1, 1, 1}), 2).empty());
}

TEST_CASE("overlapping shuffle examples") {
  CHECK(overlapping_shuffle(C({1}), C({1})) == QSymmElement{{C({1, 1}), 2}, {C({2}), 1}});
  CHECK(overlapping_shuffle(Composition(), C({2, 1})) == QSymmElement{{C({2, 1}), 1}});
  CHECK(overlapping_shuffle(C({1}), C({2})) ==
        QSymmElement{{C({1, 2}), 1}, {C({2, 1}), 1}, {C({3}), 1}});
  CHECK(to_string(overlapping_shuffle(C({1}), C({1}))) == "2(1,1) + (2)");
}

TEST_CASE("property: products agree with polynomial multiplication") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2)
      for (const auto& a : compositions_of(n1))
        for (const auto& b : compositions_of(n2)) {
          const int vars = static_cast<int>(a.length() + b.length());
          auto f = poly_multiply(monomial_expand(a, vars), monomial_expand(b, vars));
          CHECK(overlapping_shuffle(a, b) == to_qsymm(f, vars, n1 + n2));
        }
}

TEST_CASE("property: commutative and associative through weight 6") {
  std::vector<Composition> small;
  for (int n = 0; n <= 3; ++n)
    for (const auto& c : compositions_of(n)) small.push_back(c);
  for (const auto& a : small)
    for (const auto& b : small) {
      CHECK(overlapping_shuffle(a, b) == overlapping_shuffle(b, a));
      for (const auto& c : small) {
        if (a.weight() + b.weight() + c.weight() > 6) continue;
        QSymmElement A{{a, 1}}, B{{b, 1}}, Cc{{c, 1}};
        CHECK(multiply(multiply(A, B), Cc) == multiply(A, multiply(B, Cc)));
      }
    }
}

TEST_CASE("deconcatenation") {
  auto s = deconcatenation(C({3, 1}));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == std::pair{Composition(), C({3, 1})});
  CHECK(s[1] == std::pair{C({3}), C({1})});
  CHECK(s[2] == std::pair{C({3, 1}), Composition()});
  CHECK(deconcatenation(Composition()).size() == 1);
  CHECK(deconcatenation(C({2, 2, 1})).size() == 4);

  // coassociativity: both iterated splittings list the same triples
  for (int n = 0; n <= 5; ++n)
    for (const auto& omega : compositions_of(n)) {
      std::map<std::vector<Composition>, int> left, right;
      for (const auto& [x, y] : deconcatenation(omega)) {
        for (const auto& [x1, x2] : deconcatenation(x)) ++left[{x1, x2, y}];
        for (const auto& [y1, y2] : deconcatenation(y)) ++right[{x, y1, y2}];
      }
      CHECK(left == right);
    }
}

TEST_CASE("pairing and duality") {
  CHECK(pairing(NSymmWord{2, 1}, C({2, 1})) == 1);
  CHECK(pairing(NSymmWord{2, 1}, C({1, 2})) == 0);
  CHECK(pairing(NSymmWord{1}, C({1})) == 1);

  // ⟨ΔZ3, (1)⊗(2)⟩ = ⟨Z3, (1)·(2)⟩ = 1
  Integer lhs = 0;
  for (const auto& [pair, c] : nsymm_coproduct(NSymmWord{3}))
    lhs += c * pairing(pair.first, C({1})) * pairing(pair.second, C({2}));
  CHECK(lhs == 1);
  CHECK(pairing(NSymmWord{3}, overlapping_shuffle(C({1}), C({2}))) == 1);

  for (int d : {1, 3, 5, 6}) {
    auto r = verify_duality(d);
    CAPTURE(r.failure);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}

}
