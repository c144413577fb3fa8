#include "gaut/graded_ring.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace gaut;
using namespace testing_support;

TEST_CASE("degree of a polynomial")
{
    GradedPolyRing s = runningRing();
    GradingGroup k = s.group();
    auto g = parsePolynomial(kRunningGenerator, s.naming());
    HomogeneityReport h = degreeOf(s, g);
    REQUIRE(h.homogeneous);
    CHECK(*h.degree == element(k, {0, 0, 2, 1}));
    CHECK(*degreeOf(s, parsePolynomial("T(3)", s.naming())).degree == s.degrees().column(2));

    HomogeneityReport mixed = degreeOf(s, parsePolynomial("T(1) + T(2)", s.naming()));
    CHECK_FALSE(mixed.homogeneous);
    CHECK(mixed.termDegrees.size() == 2);
    CHECK_THROWS_AS(degreeOf(s, Polynomial()), StructuralError);
}

TEST_CASE("monomial bases of the running ring")
{
    GradedPolyRing s = runningRing();
    for (std::size_t i = 0; i < 8; ++i) {
        auto b = monomialBasis(s, s.degrees().column(i));
        REQUIRE(b.size() == 1);
        CHECK(b[0] == Monomial::variable(static_cast<std::uint32_t>(i)));
    }
    auto one = monomialBasis(s, GroupElement::zero(s.group()));
    REQUIRE(one.size() == 1);
    CHECK(one[0].isOne());

    auto quad = monomialBasis(s, element(s.group(), {0, 0, 2, 1}));
    REQUIRE(quad.size() == 4);
    const char* expected[] = {"T(1)*T(6)", "T(2)*T(5)", "T(3)*T(4)", "T(7)*T(8)"};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(toString(quad[i], s.naming()) == expected[i]);

    CHECK(monomialBasis(s, element(s.group(), {0, 0, -1, 0})).empty());
}

TEST_CASE("monomial basis refuses unpointed gradings")
{
    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1, -1}}));
    CHECK_THROWS_AS(monomialBasis(s, element(s.group(), {0})), ValidationError);
}

TEST_CASE("monomial basis resource guard")
{
    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1, 1, 1, 1}}));
    CHECK_THROWS_AS(monomialBasis(s, element(s.group(), {30}), 100), ResourceGuardError);
}

TEST_CASE("ideal components")
{
    Ideal i = runningIdeal();
    GradingGroup k = i.ring().group();
    GradedComponent c = gradedComponent(i, element(k, {0, 0, 2, 1}));
    CHECK(c.dimension() == 4);
    REQUIRE(c.basis.size() == 1);
    CHECK(c.basis[0] == RatVec{1, 1, 1, 1});
    CHECK(c.forms.size() == 3);
    for (const auto& f : c.forms)
        CHECK(dot(f, c.basis[0]) == 0);

    for (const auto& q : i.ring().degrees().columns())
        CHECK(idealComponentBasis(i, q).rows.empty());
}

TEST_CASE("component of a principal monomial ideal")
{
    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1}}));
    Ideal i(s, {parsePolynomial("T(1)^2", s.naming())});
    ComponentBasis c = idealComponentBasis(i, element(s.group(), {2}));
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0] == RatVec{1});
    ComponentBasis c3 = idealComponentBasis(i, element(s.group(), {3}));
    CHECK(c3.rows.size() == 1);
}

TEST_CASE("annihilator forms edge cases")
{
    CHECK(annihilatorForms({}, 3).size() == 3);
    CHECK(annihilatorForms({{1, 0}, {0, 1}}, 2).empty());
    RatRows forms = annihilatorForms({{1, 1, 1, 1}}, 4);
    CHECK(forms.size() == 3);
}

TEST_CASE("coordinates in a monomial list")
{
    GradedPolyRing s = runningRing();
    auto quad = monomialBasis(s, element(s.group(), {0, 0, 2, 1}));
    auto g = parsePolynomial("2*T(7)*T(8) - T(2)*T(5)", s.naming());
    CHECK(coordinatesIn(quad, g) == RatVec{0, -1, 0, 2});
    CHECK_THROWS_AS(coordinatesIn(quad, parsePolynomial("T(1)", s.naming())), StructuralError);
}

TEST_CASE("ideal drops zero generators")
{
    GradedPolyRing s = runningRing();
    Ideal i(s, {Polynomial(), parsePolynomial(kRunningGenerator, s.naming())});
    CHECK(i.generators().size() == 1);
}
