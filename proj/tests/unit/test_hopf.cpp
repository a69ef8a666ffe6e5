#include "doctest.h"

#include "hopfz/catalog.hpp"
#include "hopfz/hopf.hpp"
#include "hopfz/qsymm.hpp"
#include "support/random.hpp"

using namespace hopfz;
using hopfz::testing::Rng;

namespace {

const std::vector<std::string> kPresets{"leibnitz",  "binomial", "primitive_spheres",
                                        "polynomial_primitive", "cp2", "s2xs2",
                                        "square_manifold", "pentagon_manifold"};

Element L(const HopfPresentation& p, const char* id) { return Element::letter(p.alphabet(), id); }

TensorSquareElement T(const HopfPresentation& p, const Element& a, const Element& b) {
  return tensor(a, b);
}

qsymm::Composition as_composition(const Word& w) {
  std::vector<int> parts;
  for (Letter l : w) parts.push_back(static_cast<int>(l) + 1); // leibnitz letter i is u_{i+1}
  return qsymm::Composition(parts);
}

} // namespace

TEST_SUITE("hopf") {

TEST_CASE("coproducts of the small presets") {
  auto cp2 = catalog::preset("cp2");
  Element u1 = L(cp2, "u1"), u2 = L(cp2, "u2"), one = Element::unit(cp2.alphabet());
  CHECK(full_coproduct(cp2, u1) == T(cp2, u1, one) + T(cp2, one, u1));
  CHECK(full_coproduct(cp2, u2) == T(cp2, one, u2) + T(cp2, u1, u1) + T(cp2, u2, one));
  CHECK(reduced_coproduct(cp2, u2) == T(cp2, u1, u1));
  CHECK(reduced_coproduct(cp2, u1).is_zero());
  CHECK_THROWS_AS(reduced_coproduct(cp2, one), PreconditionError);
  CHECK_THROWS_AS(full_coproduct(cp2, u2 * u1), TruncationError);

  auto sq = catalog::preset("square_manifold");
  Element a1 = L(sq, "a1"), a2 = L(sq, "a2"), b = L(sq, "b"), e = Element::unit(sq.alphabet());
  CHECK(full_coproduct(sq, a2 * a1) ==
        T(sq, a2 * a1, e) + T(sq, e, a2 * a1) + T(sq, a2, a1) - T(sq, a1, a2));
  CHECK(is_primitive(sq, a1));
  CHECK(is_primitive(sq, a2));
  CHECK_FALSE(is_primitive(sq, b));
  CHECK(reduced_coproduct(sq, b + a2 * a1).is_zero());

  auto pent = catalog::preset("pentagon_manifold");
  Element w = L(pent, "c");
  for (int i = 1; i <= 5; ++i) {
    const std::string ai = "a" + std::to_string(i), bi = "b" + std::to_string(i);
    w -= Element::letter(pent.alphabet(), ai) * Element::letter(pent.alphabet(), bi);
  }
  CHECK(is_primitive(pent, w));
  CHECK_FALSE(is_primitive(pent, L(pent, "c")));
}

TEST_CASE("construction rejects inhomogeneous coproducts") {
  auto al = make_alphabet({{"g1", 2}, {"g2", 2}, {"g", 6}});
  std::map<Letter, TensorSquareElement> bad;
  bad.emplace(2, TensorSquareElement::pure(al, Word{0}, Word{1}));
  CHECK_THROWS_AS(HopfPresentation(al, bad, 6), PresentationError);

  std::map<Letter, TensorSquareElement> unit_factor;
  unit_factor.emplace(2, TensorSquareElement::pure(al, Word{}, Word{2}));
  CHECK_THROWS_AS(HopfPresentation(al, unit_factor, 6), PresentationError);
}

TEST_CASE("antipode examples") {
  auto cp2 = catalog::preset("cp2");
  Element u1 = L(cp2, "u1"), u2 = L(cp2, "u2");
  CHECK(antipode(cp2, u1) == -u1);
  CHECK(antipode(cp2, u2) == -u2 + u1 * u1);
  CHECK(antipode(cp2, u1 * u1) == u1 * u1);

  auto sq = catalog::preset("square_manifold");
  Element a1 = L(sq, "a1"), a2 = L(sq, "a2");
  // S(xy) = (-1)^{|x||y|} S(y)S(x) with odd letters
  CHECK(antipode(sq, a1 * a2) == -(a2 * a1));
}

TEST_CASE("coassociativity failure is reported, not thrown") {
  auto al = make_alphabet({{"x", 1}, {"y", 2}, {"z", 3}});
  std::map<Letter, TensorSquareElement> red;
  red.emplace(2, TensorSquareElement::pure(al, Word{1}, Word{0})); // y not primitive-compatible
  red.emplace(1, TensorSquareElement::pure(al, Word{0}, Word{0}));
  HopfPresentation p(al, red, 3);
  auto r = verify_coassociativity(p, 3);
  CHECK_FALSE(r.passed);
  CHECK(r.failing_degree == 3);
  CHECK(r.failing_element == "z");
}

TEST_CASE("axioms hold for every preset through degree 12") {
  for (const auto& name : kPresets) {
    CAPTURE(name);
    auto p = catalog::preset(name, 12);
    for (const auto& r : verify_hopf_axioms(p, 12)) {
      CAPTURE(r.check);
      CAPTURE(r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("property: Δ is multiplicative") {
  Rng rng(hopfz::testing::kSeed + 20);
  for (const char* name : {"leibnitz", "binomial", "square_manifold", "s2xs2"}) {
    auto p = catalog::preset(name, 8);
    for (int i = 0; i < 15; ++i) {
      Element x = hopfz::testing::random_element(rng, p.alphabet(), 4, 3, true);
      Element y = hopfz::testing::random_element(rng, p.alphabet(), 4, 3, true);
      CHECK(full_coproduct(p, x * y) == tensor_multiply(full_coproduct(p, x), full_coproduct(p, y)));
    }
  }
}

TEST_CASE("property: graded commutators of primitives are primitive") {
  Rng rng(hopfz::testing::kSeed + 21);
  auto sq = catalog::preset("square_manifold", 8);
  auto pent = catalog::preset("pentagon_manifold", 8);
  for (const auto* p : {&sq, &pent}) {
    // primitive letters of degree 3 and 4
    std::vector<Element> prims;
    for (Letter g = 0; g < p->alphabet()->size(); ++g)
      if (p->reduced_coproduct_of(g).is_zero()) prims.push_back(Element::word(p->alphabet(), Word{g}));
    for (int i = 0; i < 20; ++i) {
      auto pick = [&] { return prims[static_cast<std::size_t>(hopfz::testing::uniform(rng, 0, static_cast<long>(prims.size()) - 1))]; };
      Element x = pick(), y = pick();
      const int dx = *x.max_degree(), dy = *y.max_degree();
      if (dx + dy > 8) continue;
      Element bracket = x * y - ((dx * dy) % 2 ? -1 : 1) * (y * x);
      CHECK(is_primitive(*p, bracket));
      CHECK(is_primitive(*p, x + 3 * y - x));
    }
  }
}

TEST_CASE("dual of the primitive polynomial preset is a divided power algebra") {
  auto p = catalog::preset("polynomial_primitive", 12);
  auto table = dual_multiplication_table(p, 12);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; i + j <= 6; ++j) {
      Word wi(static_cast<std::size_t>(i), 0), wj(static_cast<std::size_t>(j), 0);
      Word wij(static_cast<std::size_t>(i + j), 0);
      auto prod = table.product(wi, wj);
      REQUIRE(prod.size() == 1);
      CHECK(prod.at(wij) == binomial(static_cast<unsigned long>(i + j), static_cast<unsigned long>(i)));
    }
}

TEST_CASE("dual of the Leibnitz preset is the quasi-shuffle algebra") {
  auto p = catalog::preset("leibnitz", 12);
  auto table = dual_multiplication_table(p, 12);
  // dual(u1)·dual(u1) = 2 dual(u1|u1) + dual(u2)
  auto sq = table.product(Word{0}, Word{0});
  CHECK(sq.size() == 2);
  CHECK(sq.at(Word{0, 0}) == 2);
  CHECK(sq.at(Word{1}) == 1);

  std::size_t compared = 0;
  for (const auto& [d1, words1] : table.basis)
    for (const auto& [d2, words2] : table.basis) {
      if (d1 == 0 || d2 == 0 || d1 + d2 > 12) continue;
      for (const auto& w1 : words1)
        for (const auto& w2 : words2) {
          auto expected = qsymm::overlapping_shuffle(as_composition(w1), as_composition(w2));
          auto got = table.product(w1, w2);
          REQUIRE(got.size() == expected.size());
          for (const auto& [w, c] : got) CHECK(expected.at(as_composition(w)) == c);
          ++compared;
        }
    }
  CHECK(compared > 100);
}

TEST_CASE("property: the Leibnitz dual is commutative and associative") {
  auto p = catalog::preset("leibnitz", 10);
  auto table = dual_multiplication_table(p, 10);
  auto mul = [&](const std::map<Word, Integer>& x, const std::map<Word, Integer>& y) {
    std::map<Word, Integer> out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y)
        for (const auto& [w, c] : table.product(a, b)) out[w] += ca * cb * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };
  for (const auto& [d1, b1] : table.basis)
    for (const auto& [d2, b2] : table.basis)
      for (const auto& [d3, b3] : table.basis) {
        if (d1 == 0 || d2 == 0 || d3 == 0 || d1 + d2 + d3 > 10) continue;
        for (const auto& x : b1)
          for (const auto& y : b2) {
            CHECK(table.product(x, y) == table.product(y, x));
            for (const auto& z : b3)
              CHECK(mul(mul({{x, 1}}, {{y, 1}}), {{z, 1}}) == mul({{x, 1}}, mul({{y, 1}}, {{z, 1}})));
          }
      }
}

TEST_CASE("isomorphism checks") {
  auto sq = catalog::preset("square_manifold");
  IsoCandidate identity;
  for (Letter g = 0; g < sq.alphabet()->size(); ++g)
    identity.images.push_back(Element::word(sq.alphabet(), Word{g}));
  CHECK(verify_hopf_iso(identity, sq, sq, 6).passed);

  auto lie = lie_hopf_presentation(sq.alphabet(), 6);
  IsoCandidate f{{L(sq, "a1"), L(sq, "a2"), L(sq, "b") + L(sq, "a2") * L(sq, "a1")}, true};
  CHECK(verify_hopf_iso(f, lie, sq, 6).passed);
  CHECK_FALSE(verify_hopf_iso(identity, lie, sq, 6).passed);

  auto cp2 = catalog::preset("cp2");
  auto cp2_lie = lie_hopf_presentation(cp2.alphabet(), 4);
  for (long lambda = -4; lambda <= 4; ++lambda) {
    IsoCandidate g{{L(cp2, "u1"), L(cp2, "u2") + lambda * (L(cp2, "u1") * L(cp2, "u1"))}, true};
    CHECK_FALSE(verify_hopf_iso(g, cp2_lie, cp2, 4).passed);
  }

  IsoCandidate wrong_degree{{L(cp2, "u2"), L(cp2, "u2")}, true};
  CHECK_THROWS_AS(verify_hopf_iso(wrong_degree, cp2_lie, cp2, 4), PreconditionError);

  IsoCandidate singular{{2 * L(cp2, "u1"), L(cp2, "u2")}, true};
  CHECK_FALSE(verify_hopf_iso(singular, cp2_lie, cp2_lie, 4).passed);
}

TEST_CASE("triangular inverses") {
  auto sq = catalog::preset("square_manifold");
  IsoCandidate f{{L(sq, "a1"), L(sq, "a2"), L(sq, "b") + L(sq, "a2") * L(sq, "a1")}, true};
  auto inv = invert_triangular(f, sq.alphabet());
  CHECK(inv.images[2] == L(sq, "b") - L(sq, "a2") * L(sq, "a1"));
  for (Letter g = 0; g < 3; ++g)
    CHECK(apply_algebra_map(inv, f.images[g]) == Element::word(sq.alphabet(), Word{g}));
}

}
