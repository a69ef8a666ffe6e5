#include "doctest.h"

#include "hopfz/catalog.hpp"
#include "hopfz/io.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace hopfz;
using hopfz::testing::read_fixture;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    io::parse_presentation(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("presentation documents round-trip") {
  for (const auto& info : catalog::preset_list()) {
    CAPTURE(info.name);
    auto p = catalog::preset(info.name, 8);
    const std::string text = io::emit_presentation(p);
    auto back = io::parse_presentation(text);
    CHECK(*back.alphabet() == *p.alphabet());
    CHECK(back.truncation_degree() == p.truncation_degree());
    for (Letter g = 0; g < p.alphabet()->size(); ++g)
      CHECK(back.reduced_coproduct_of(g).sorted_terms() == p.reduced_coproduct_of(g).sorted_terms());
    CHECK(io::emit_presentation(back) == text);
  }
}

TEST_CASE("property: random presentations round-trip canonically") {
  hopfz::testing::Rng rng(hopfz::testing::kSeed + 50);
  for (int i = 0; i < 60; ++i) {
    auto p = hopfz::testing::random_presentation(rng);
    const std::string text = io::emit_presentation(p);
    CHECK(io::emit_presentation(io::parse_presentation(text)) == text);
  }
}

TEST_CASE("fixture documents") {
  auto cp2 = io::parse_presentation(read_fixture("cp2.json"));
  CHECK(cp2.reduced_coproduct_of(1).to_string() == catalog::preset("cp2").reduced_coproduct_of(1).to_string());
  CHECK(io::emit_presentation(cp2) == io::emit_presentation(catalog::preset("cp2")));
  CHECK(io::parse_presentation(read_fixture("zero_coproducts.json")).is_primitively_presented());
  CHECK(parse_error_of(read_fixture("broken_homogeneity.json")).find("not homogeneous") != std::string::npos);
}

TEST_CASE("diagnostics name the field or position") {
  CHECK(parse_error_of(read_fixture("malformed.json")).find("line") != std::string::npos);
  const std::string bad_coeff = R"({"format": "hopfz-presentation/1",
    "generators": [{"id": "u1", "degree": 2}, {"id": "u2", "degree": 4}],
    "reduced_coproducts": [{"generator": "u2", "terms": [{"left": ["u1"], "right": ["u1"], "coeff": "x"}]}],
    "truncation_degree": 4})";
  CHECK(parse_error_of(bad_coeff).find("reduced_coproducts[0].terms[0].coeff") != std::string::npos);
  const std::string unknown = R"({"format": "hopfz-presentation/1",
    "generators": [{"id": "u1", "degree": 2}],
    "reduced_coproducts": [{"generator": "u9", "terms": []}],
    "truncation_degree": 4})";
  CHECK(parse_error_of(unknown).find("reduced_coproducts[0].generator") != std::string::npos);
  CHECK(parse_error_of(R"({"format": "other/1"})").find("format") != std::string::npos);
}

TEST_CASE("complex documents") {
  auto sq = io::parse_complex(read_fixture("square.json"));
  CHECK(sq.maximal_faces() == koszul::SimplicialComplex::polygon(4).maximal_faces());
  auto s = io::parse_complex(read_fixture("simplex_boundary.json"));
  CHECK(s.maximal_faces() == koszul::SimplicialComplex::simplex_boundary(3).maximal_faces());
  CHECK_THROWS(io::parse_complex(read_fixture("not_closed.json")));
  auto again = io::parse_complex(io::emit_complex(sq));
  CHECK(again.faces() == sq.faces());
}

TEST_CASE("certificates round-trip and still check") {
  auto p = catalog::preset("cp2");
  auto cert = lie_hopf_decision(p).certificate();
  const std::string text = io::emit_certificate(cert);
  auto back = io::parse_certificate(text);
  CHECK(back.system.matrix == cert.system.matrix);
  CHECK(back.system.rhs == cert.system.rhs);
  CHECK(back.witness.modulus == 2);
  CHECK(check_certificate(back, p));
  CHECK(io::emit_certificate(back) == text);
}

TEST_CASE("element syntax") {
  auto p = catalog::preset("binomial", 6);
  const auto& al = p.alphabet();
  auto x = io::parse_element(al, "w3 - 3w2|w1 + 2*w1|w1|w1");
  CHECK(x.to_string() == "w3 - 3 w2|w1 + 2 w1|w1|w1");
  CHECK(io::parse_element(al, x.to_string()) == x);
  CHECK(io::parse_element(al, "1") == Element::unit(al));
  CHECK(io::parse_element(al, "0").is_zero());
  CHECK_THROWS_AS(io::parse_element(al, "w9"), ParseError);
  CHECK_THROWS_AS(io::parse_element(al, "w1 +"), ParseError);
  CHECK(io::emit_change_of_basis(lie_hopf_decision(p).change_of_basis()).find("w2 - w1|w1") != std::string::npos);
}

}
