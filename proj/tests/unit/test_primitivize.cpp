#include "doctest.h"

#include "hopfz/catalog.hpp"
#include "hopfz/primitivize.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

#include <algorithm>

using namespace hopfz;
using hopfz::testing::Rng;

namespace {

Element L(const HopfPresentation& p, const char* id) { return Element::letter(p.alphabet(), id); }

void check_sound(const HopfPresentation& p, const LieHopfDecision& d) {
  if (d.is_lie_hopf()) {
    const auto& cb = d.change_of_basis();
    for (const auto& w : cb.new_generators) CHECK(is_primitive(p, w));
    for (const auto& c : cb.corrections)
      for (const auto& [word, coeff] : c.terms()) CHECK(word.size() >= 2);
    auto lie = lie_hopf_presentation(p.alphabet(), p.truncation_degree());
    CHECK(verify_hopf_iso(cb.from_lie_hopf(), lie, p, p.truncation_degree()).passed);
  } else {
    CHECK(check_certificate(d.certificate(), p));
  }
}

/// Relabels generators by `perm` (new position i holds old generator perm[i]).
HopfPresentation permuted(const HopfPresentation& p, const std::vector<Letter>& perm) {
  const auto& old = *p.alphabet();
  std::vector<Generator> gens;
  for (Letter i : perm) gens.push_back(old[i]);
  AlphabetPtr al = make_alphabet(gens);
  std::vector<Letter> where(perm.size());
  for (Letter i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  auto rename = [&](const Word& w) {
    Word out;
    for (Letter l : w) out.push_back(where[l]);
    return out;
  };
  std::map<Letter, TensorSquareElement> red;
  for (Letter i = 0; i < perm.size(); ++i) {
    TensorSquareElement t(al);
    for (const auto& [pair, c] : p.reduced_coproduct_of(perm[i]).terms())
      t.add_term(rename(pair.first), rename(pair.second), c);
    red.emplace(i, std::move(t));
  }
  return HopfPresentation(al, std::move(red), p.truncation_degree());
}

} // namespace

TEST_SUITE("primitivize") {

TEST_CASE("CP2: 2λ = -1") {
  auto p = catalog::preset("cp2");
  auto out = primitivize_generator(p, "u2");
  REQUIRE(std::holds_alternative<ObstructionCertificate>(out));
  const auto& cert = std::get<ObstructionCertificate>(out);
  CHECK(cert.degree == 4);
  CHECK(cert.system.matrix == IntMatrix{{2}});
  CHECK(cert.system.rhs == IntVector{Integer(-1)});
  CHECK(cert.witness.modulus == 2);
  CHECK(cert.witness.residue == -1);
  CHECK(cert.equations() == "2λ = -1");

  auto d = lie_hopf_decision(p);
  REQUIRE_FALSE(d.is_lie_hopf());
  CHECK(d.certificate().generator == "u2");
  CHECK(check_certificate(d.certificate(), p));

  auto u1 = primitivize_generator(p, "u1");
  REQUIRE(std::holds_alternative<GeneratorCorrection>(u1));
  CHECK(std::get<GeneratorCorrection>(u1).correction.is_zero());
}

TEST_CASE("S2xS2: coefficient -1 on the mixed word") {
  auto p = catalog::preset("s2xs2");
  auto d = lie_hopf_decision(p);
  REQUIRE(d.is_lie_hopf());
  const Element& c = d.change_of_basis().corrections[2];
  CHECK(c == -(L(p, "u2") * L(p, "u1")));
  CHECK(d.change_of_basis().new_generators[2].to_string() == "v - u2|u1");
  // the other member of the solution family is also primitive
  CHECK(is_primitive(p, L(p, "v") - L(p, "u1") * L(p, "u2")));
  auto g = std::get<GeneratorCorrection>(primitivize_generator(p, "v"));
  REQUIRE(g.kernel_basis.size() == 1);
  check_sound(p, d);
}

TEST_CASE("square manifold: w = b + a2|a1") {
  auto p = catalog::preset("square_manifold");
  auto d = lie_hopf_decision(p);
  REQUIRE(d.is_lie_hopf());
  CHECK(d.change_of_basis().corrections[2] == L(p, "a2") * L(p, "a1"));
  check_sound(p, d);
}

TEST_CASE("pentagon manifold: w = c - Σ a_i|b_i") {
  auto p = catalog::preset("pentagon_manifold");
  auto d = lie_hopf_decision(p);
  REQUIRE(d.is_lie_hopf());
  Element expected(p.alphabet());
  for (int i = 1; i <= 5; ++i)
    expected -= Element::letter(p.alphabet(), "a" + std::to_string(i)) *
                Element::letter(p.alphabet(), "b" + std::to_string(i));
  CHECK(d.change_of_basis().corrections.back() == expected);
  check_sound(p, d);
}

TEST_CASE("primitively presented algebras need no corrections") {
  auto p = catalog::preset("primitive_spheres", 8);
  CHECK(p.is_primitively_presented());
  auto d = lie_hopf_decision(p);
  REQUIRE(d.is_lie_hopf());
  for (const auto& c : d.change_of_basis().corrections) CHECK(c.is_zero());
}

TEST_CASE("certificates: tampering and replay") {
  auto cp2 = catalog::preset("cp2");
  auto cert = lie_hopf_decision(cp2).certificate();
  CHECK(check_certificate(cert, cp2));

  auto tampered = cert;
  tampered.system.rhs = IntVector{Integer(-2)};
  CHECK_FALSE(check_certificate(tampered, cp2));

  auto forged = cert;
  forged.witness.residue = 0;
  CHECK_FALSE(check_certificate(forged, cp2));

  CHECK_THROWS_AS(check_certificate(cert, catalog::preset("s2xs2")), AlphabetError);
}

TEST_CASE("the Leibnitz preset is obstructed in degree 4") {
  auto p = catalog::preset("leibnitz", 8);
  auto d = lie_hopf_decision(p);
  REQUIRE_FALSE(d.is_lie_hopf());
  CHECK(d.certificate().degree == 4);
  CHECK(d.certificate().equations() == "2λ = -1");
}

TEST_CASE("invalid presentations are refused") {
  auto al = make_alphabet({{"x", 1}, {"y", 2}, {"z", 3}});
  std::map<Letter, TensorSquareElement> red;
  red.emplace(1, TensorSquareElement::pure(al, Word{0}, Word{0}));
  red.emplace(2, TensorSquareElement::pure(al, Word{1}, Word{0}));
  CHECK_THROWS_AS(lie_hopf_decision(HopfPresentation(al, red, 3)), PresentationError);
}

TEST_CASE("property: decision against a boxed brute-force search") {
  Rng rng(hopfz::testing::kSeed + 30);
  int checked = 0, yes = 0, no = 0;
  for (int attempt = 0; attempt < 4000 && checked < 220; ++attempt) {
    auto p = hopfz::testing::random_presentation(rng);
    auto oracle = hopfz::testing::brute_force_lie_hopf(p, 12, 4);
    if (!oracle) continue;
    auto d = lie_hopf_decision(p);
    CHECK(d.is_lie_hopf() == *oracle);
    check_sound(p, d);
    ++checked;
    (*oracle ? yes : no) += 1;
  }
  CHECK(checked >= 200);
  CHECK(yes > 20);
  CHECK(no >= 10);
}

TEST_CASE("property: verdict survives sign changes and reordering") {
  Rng rng(hopfz::testing::kSeed + 31);
  for (int trial = 0; trial < 80; ++trial) {
    auto p = hopfz::testing::random_presentation(rng);
    const bool verdict = lie_hopf_decision(p).is_lie_hopf();
    const auto k = p.alphabet()->size();

    // g ↦ -g for one generator
    IsoCandidate flip;
    const auto target = static_cast<Letter>(hopfz::testing::uniform(rng, 0, static_cast<long>(k) - 1));
    for (Letter g = 0; g < k; ++g)
      flip.images.push_back(Element::word(p.alphabet(), Word{g}, g == target ? -1 : 1));
    flip.triangular = false;
    auto flipped = hopfz::testing::transport(p, flip, flip);
    CHECK(lie_hopf_decision(flipped).is_lie_hopf() == verdict);

    std::vector<Letter> perm(k);
    for (Letter i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(lie_hopf_decision(permuted(p, perm)).is_lie_hopf() == verdict);
  }
}

}
