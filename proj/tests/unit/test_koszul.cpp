#include "doctest.h"

#include "hopfz/koszul.hpp"
#include "hopfz/primitivize.hpp"
#include "support/random.hpp"

using namespace hopfz;
using namespace hopfz::koszul;
using hopfz::testing::Rng;

namespace {

DgaElement M(const DgaPtr& dga, std::vector<int> us, std::vector<int> vs, long c = 1) {
  return DgaElement::monomial(dga, us, vs, c);
}

SimplicialComplex rp2() {
  return SimplicialComplex::from_maximal_faces(
      6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

DgaElement random_monomial(Rng& rng, const DgaPtr& dga, int max_degree) {
  const int m = dga->vertex_count();
  while (true) {
    std::vector<int> us, vs;
    int degree = 0;
    for (int i = 1; i <= m; ++i)
      if (hopfz::testing::uniform(rng, 0, 3) == 0) us.push_back(i), degree += 1;
    const long nv = hopfz::testing::uniform(rng, 0, 2);
    for (long k = 0; k < nv; ++k) vs.push_back(static_cast<int>(hopfz::testing::uniform(rng, 1, m))), degree += 2;
    auto x = M(dga, us, vs, hopfz::testing::uniform(rng, -3, 3));
    if (degree <= max_degree && !x.is_zero()) return x;
  }
}

int degree_of(const DgaElement& x) { return x.terms().begin()->first.degree(); }

} // namespace

TEST_SUITE("koszul") {

TEST_CASE("complexes and Stanley-Reisner relations") {
  auto sq = SimplicialComplex::polygon(4);
  CHECK(sq.minimal_nonfaces() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  auto pent = SimplicialComplex::polygon(5);
  CHECK(pent.minimal_nonfaces() ==
        std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
  CHECK(SimplicialComplex::simplex(4).minimal_nonfaces().empty());
  CHECK(SimplicialComplex::simplex_boundary(3).minimal_nonfaces() ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(sq.maximal_faces() == std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {{1}, {2}, {3}, {1, 2, 3}}), PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces(3, {{1, 2}}), PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces(2, {{1, 3}}), PreconditionError);
  CHECK_NOTHROW(SimplicialComplex::from_faces(2, {{1}, {2}}));

  auto dga = build_dga(sq);
  CHECK(M(dga, {}, {1, 3}).is_zero());
  CHECK(M(dga, {}, {2, 4}).is_zero());
  CHECK_FALSE(M(dga, {}, {1, 2}).is_zero());
  CHECK(M(dga, {1}, {1, 1}).to_string() == "u1v1^2");
}

TEST_CASE("differential examples") {
  auto dga = build_dga(SimplicialComplex::polygon(4));
  CHECK(differential(M(dga, {1}, {})) == M(dga, {}, {1}));
  CHECK(differential(M(dga, {1}, {3})).is_zero());
  CHECK(differential(M(dga, {1, 2}, {})) == M(dga, {2}, {1}) - M(dga, {1}, {2}));
  CHECK(differential(differential(M(dga, {1, 2}, {}))).is_zero());
  // exterior signs: u2u1 = -u1u2, u1u1 = 0
  CHECK(M(dga, {2, 1}, {}) == M(dga, {1, 2}, {}, -1));
  CHECK(M(dga, {1, 1}, {}).is_zero());
}

TEST_CASE("property: d² = 0 on every monomial") {
  for (auto k : {SimplicialComplex::polygon(4), SimplicialComplex::polygon(5),
                 SimplicialComplex::simplex_boundary(3), SimplicialComplex::simplex(3)}) {
    auto dga = build_dga(k);
    for (int d = 0; d <= 8; ++d)
      for (const auto& mono : dga->monomials_of_degree(d)) {
        DgaElement x(dga);
        x.add_term(mono, 1);
        CHECK(differential(differential(x)).is_zero());
      }
  }
}

TEST_CASE("property: products are associative, graded commutative, and d is a derivation") {
  Rng rng(hopfz::testing::kSeed + 40);
  auto dga = build_dga(SimplicialComplex::polygon(5));
  for (int i = 0; i < 200; ++i) {
    auto x = random_monomial(rng, dga, 4), y = random_monomial(rng, dga, 4), z = random_monomial(rng, dga, 4);
    CHECK((x * y) * z == x * (y * z));
    const int dx = degree_of(x), dy = degree_of(y);
    CHECK(x * y == ((dx * dy) % 2 ? -1 : 1) * (y * x));
    CHECK(differential(x * y) == differential(x) * y + (dx % 2 ? -1 : 1) * (x * differential(y)));
  }
}

TEST_CASE("square: ranks, cocycles and intersection matrix") {
  auto dga = build_dga(SimplicialComplex::polygon(4));
  auto h = cohomology(dga, 6);
  CHECK(h.ranks() == std::vector<std::size_t>{1, 0, 0, 2, 0, 0, 1});
  CHECK_FALSE(h.has_torsion());

  auto a1 = M(dga, {1}, {3}), a2 = M(dga, {2}, {4}), b = M(dga, {1, 2}, {3, 4});
  for (const auto* x : {&a1, &a2, &b}) CHECK(differential(*x).is_zero());
  CHECK(h.cohomologous(a1, h.classes()[*h.find("h3_1")].representative));
  CHECK(h.cohomologous(a2, h.classes()[*h.find("h3_2")].representative));
  CHECK(h.cohomologous(b, h.classes()[*h.find("h6_1")].representative));
  CHECK_FALSE(h.cohomologous(a1, a2));

  auto cup = cup_structure(h);
  const std::size_t i1 = *h.find("h3_1"), i2 = *h.find("h3_2"), t = *h.find("h6_1");
  CHECK(cup.constant(i1, i2, t) == 1);
  CHECK(cup.constant(i2, i1, t) == -1);
  CHECK(cup.constant(i1, i1, t) == 0);
  CHECK(cup.constant(i2, i2, t) == 0);
  const std::size_t unit = *h.find("h0_1");
  CHECK(cup.constant(unit, i1, i1) == 1);

  CHECK_THROWS_AS(h.coordinates(M(dga, {1}, {})), PreconditionError);
  CHECK_THROWS_AS(h.coordinates(M(dga, {1}, {3, 3, 3})), TruncationError);
  CHECK(h.coordinates(a1 - 2 * a2) == std::map<std::size_t, Integer>{{i1, 1}, {i2, -2}});
}

TEST_CASE("pentagon: ranks and products a_i b_i = c") {
  auto dga = build_dga(SimplicialComplex::polygon(5));
  auto h = cohomology(dga, 7);
  CHECK(h.ranks() == std::vector<std::size_t>{1, 0, 0, 5, 5, 0, 0, 1});
  std::vector<DgaElement> a{M(dga, {1}, {3}), M(dga, {4}, {1}), M(dga, {2}, {4}), M(dga, {5}, {2}), M(dga, {3}, {5})};
  std::vector<DgaElement> b{M(dga, {4, 5}, {2}), M(dga, {2, 3}, {5}), M(dga, {5, 1}, {3}), M(dga, {3, 4}, {1}), M(dga, {1, 2}, {4})};
  auto c = M(dga, {1, 2, 3}, {4, 5});
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(differential(a[i]).is_zero());
    CHECK(differential(b[i]).is_zero());
    CHECK(h.cohomologous(a[i] * b[i], c));
    CHECK(h.cohomologous(b[i] * a[i], c));
    for (int j = 0; j < 5; ++j)
      if (j != i) CHECK(h.coordinates(a[i] * b[j]).empty());
  }
  // u3u4v1 is the negative of the computed h4_2
  CHECK(h.cohomologous(b[3], -h.classes()[*h.find("h4_2")].representative));
}

TEST_CASE("spheres, discs and scrambled orders") {
  auto s5 = cohomology(build_dga(SimplicialComplex::simplex_boundary(3)), 6);
  CHECK(s5.ranks() == std::vector<std::size_t>{1, 0, 0, 0, 0, 1, 0});

  auto disc = cohomology(build_dga(SimplicialComplex::simplex(3)), 8);
  CHECK(disc.ranks() == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(coalgebra_from_ring(disc, cup_structure(disc)).alphabet()->size() == 0);

  for (auto k : {SimplicialComplex::polygon(4), SimplicialComplex::polygon(5), SimplicialComplex::polygon(6)}) {
    auto dga = build_dga(k);
    const int top = k.vertex_count() + 2;
    auto plain = cohomology(dga, top);
    for (std::uint64_t seed : {1u, 7u, 42u}) {
      CohomologyOptions opt;
      opt.scramble_seed = seed;
      CHECK(cohomology(dga, top, opt).ranks() == plain.ranks());
    }
  }
  CHECK_THROWS_AS(cohomology(build_dga(SimplicialComplex::polygon(4)), -1), PreconditionError);
}

TEST_CASE("torsion is detected and blocks dualization") {
  auto h = cohomology(build_dga(rp2()), 9);
  CHECK(h.has_torsion());
  CHECK(h.degrees()[9].torsion == IntVector{Integer(2)});
  CHECK_THROWS_AS(coalgebra_from_ring(h, cup_structure(h)), TorsionError);
}

TEST_CASE("pipeline: square and pentagon dualize to Lie-Hopf presentations") {
  auto sq_dga = build_dga(SimplicialComplex::polygon(4));
  auto sq = cohomology(sq_dga, 6);
  auto p = coalgebra_from_ring(sq, cup_structure(sq));
  auto e = [&](const char* id) { return Element::letter(p.alphabet(), id); };
  CHECK(p.reduced_coproduct_of(p.alphabet()->index_of("h6_1")) ==
        tensor(e("h3_1"), e("h3_2")) - tensor(e("h3_2"), e("h3_1")));
  auto d = lie_hopf_decision(p);
  REQUIRE(d.is_lie_hopf());
  CHECK(d.change_of_basis().corrections[p.alphabet()->index_of("h6_1")] == e("h3_2") * e("h3_1"));

  // named cocycles
  auto named = coalgebra_from_cocycles(sq, {{"a1", M(sq_dga, {1}, {3})},
                                            {"a2", M(sq_dga, {2}, {4})},
                                            {"b", M(sq_dga, {1, 2}, {3, 4})}});
  auto n = [&](const char* id) { return Element::letter(named.alphabet(), id); };
  auto dn = lie_hopf_decision(named);
  REQUIRE(dn.is_lie_hopf());
  CHECK(dn.change_of_basis().new_generators[named.alphabet()->index_of("b")] == n("b") + n("a2") * n("a1"));

  CHECK_THROWS_AS(coalgebra_from_cocycles(sq, {{"a1", M(sq_dga, {1}, {3}, 2)},
                                                {"a2", M(sq_dga, {2}, {4})},
                                                {"b", M(sq_dga, {1, 2}, {3, 4})}}),
                  PreconditionError);

  auto pent = cohomology(build_dga(SimplicialComplex::polygon(5)), 7);
  auto pp = coalgebra_from_ring(pent, cup_structure(pent));
  CHECK(pp.alphabet()->size() == 11);
  CHECK(lie_hopf_decision(pp).is_lie_hopf());
}

}
