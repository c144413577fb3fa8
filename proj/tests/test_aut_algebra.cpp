#include "gaut/aut_algebra.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace gaut;
using namespace testing_support;

namespace {

/// Coefficient rows of polynomials over the union of their monomials.
std::size_t spanRank(const std::vector<Polynomial>& ps)
{
    std::vector<Monomial> monomials;
    for (const auto& p : ps)
        for (const auto& [m, c] : p.terms())
            if (std::find(monomials.begin(), monomials.end(), m) == monomials.end())
                monomials.push_back(m);
    QMatrix rows;
    for (const auto& p : ps) {
        std::vector<mpq_class> row;
        for (const auto& m : monomials)
            row.push_back(p.coefficient(m));
        rows.push_back(row);
    }
    return naiveRank(rows);
}

} // namespace

TEST_CASE("ideal generator degrees")
{
    CHECK(idealGeneratorDegrees(runningIdeal()) == std::vector<GroupElement>{element(runningGroup(), {0, 0, 2, 1})});

    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1, 1}}));
    Ideal i(s, {parsePolynomial("T(1)^2", s.naming()), parsePolynomial("T(2)^3", s.naming()),
                parsePolynomial("T(1)*T(2)", s.naming())});
    CHECK(idealGeneratorDegrees(i) == std::vector<GroupElement>{element(s.group(), {2}), element(s.group(), {3})});
    CHECK(idealGeneratorDegrees(Ideal(s, {})).empty());

    GradedPolyRing r = runningRing();
    CHECK_THROWS_AS(idealGeneratorDegrees(Ideal(r, {parsePolynomial("T(1)*T(2) + T(3)", r.naming())})),
                    ValidationError);
}

TEST_CASE("stabilizer equations of the running example")
{
    StabilizerData st = autGradAlg(runningIdeal());
    REQUIRE(st.triples.size() == 4);
    const VariableNaming y = st.presentation.naming();

    const auto& j2 = st.triples[1].stabilizer;
    CHECK(j2.size() == 3);
    std::vector<Polynomial> printed;
    for (const char* s : {"-Y(24)*Y(31) + Y(52)*Y(59)", "Y(13)*Y(34) - Y(52)*Y(59)", "-Y(13)*Y(34) + Y(1)*Y(46)"})
        printed.push_back(parsePolynomial(s, y));
    std::vector<Polynomial> both = j2;
    both.insert(both.end(), printed.begin(), printed.end());
    CHECK(spanRank(j2) == 3);
    CHECK(spanRank(printed) == 3);
    CHECK(spanRank(both) == 3);

    // extended ideal: 56 vanishing Y's, the determinant generator, three quadrics
    CHECK(st.triples[1].ideal().size() == 60);

    // Y variables only
    for (const auto& t : st.triples)
        for (const auto& g : t.stabilizer) {
            CHECK(g.totalDegree() == 2);
            for (const auto& [m, c] : g.terms())
                CHECK(m.exponent(static_cast<std::uint32_t>(zVariable(8))) == 0);
        }
}

TEST_CASE("component bookkeeping")
{
    StabilizerData st = autGradAlg(runningIdeal());
    for (const auto& u : st.generatorDegrees) {
        const GradedComponent& c = st.component(u);
        CHECK(c.basis.size() + c.forms.size() == c.dimension());
        for (const auto& t : st.presentation.triples) {
            const GradedComponent& image = st.component(t.weightAutomorphism.apply(u));
            CHECK(image.basis.size() == c.basis.size());
            CHECK(image.forms.size() == c.forms.size());
        }
    }
    const GradedComponent& c = st.component(element(runningGroup(), {0, 0, 2, 1}));
    CHECK(c.dimension() == 4);
    CHECK(c.basis.size() == 1);
    CHECK(c.forms.size() == 3);
    CHECK_THROWS_AS(st.component(element(runningGroup(), {5, 0, 0, 0})), InternalError);
}

TEST_CASE("all-ones point on the second triple")
{
    StabilizerData st = autGradAlg(runningIdeal());
    std::vector<mpq_class> point(65, 0);
    for (std::size_t slot : st.triples[1].triple.matrix.nonzeroSlots())
        point[slot - 1] = 1;
    point[64] = -1;
    for (const auto& g : st.triples[1].ideal())
        CHECK(g.evaluate(point) == 0);
    // scaling one slot breaks the coefficient matching of g
    point[0] = 2;
    bool broken = false;
    for (const auto& g : st.triples[1].stabilizer)
        broken = broken || g.evaluate(point) != 0;
    CHECK(broken);
}

TEST_CASE("zero ideal leaves the triples unchanged")
{
    GradedPolyRing s = runningRing();
    StabilizerData st = autGradAlg(Ideal(s, {}));
    AutPresentation p = autKS(s);
    REQUIRE(st.triples.size() == p.triples.size());
    for (std::size_t t = 0; t < p.triples.size(); ++t) {
        CHECK(st.triples[t].stabilizer.empty());
        CHECK(st.triples[t].ideal() == p.triples[t].ideal);
    }
}

TEST_CASE("refusal when the ideal meets a generator weight")
{
    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1, 1, 2}}));
    Ideal i(s, {parsePolynomial("T(3) - T(1)*T(2)", s.naming())});
    try {
        autGradAlg(i);
        FAIL("expected a refusal");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("w = (2)") != std::string::npos);
    }
}

TEST_CASE("conic stabilizer against direct expansion")
{
    // Z-graded Q[T1, T2, T3], all degrees 1, I = <T1 T2 - T3^2>
    GradedPolyRing s(DegreeMatrix::fromRows(GradingGroup(1, {}), {{1, 1, 1}}));
    Polynomial g = parsePolynomial("T(1)*T(2) - T(3)^2", s.naming());
    StabilizerData st = autGradAlg(Ideal(s, {g}));
    REQUIRE(st.triples.size() == 1);
    const auto& jp = st.triples[0].stabilizer;
    CHECK(jp.size() == 5); // dim S_2 = 6, l = 1

    // A g is a multiple of g iff every J' generator vanishes at A
    auto check = [&](const std::vector<std::vector<mpq_class>>& a) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < 3; ++i) {
            Polynomial img;
            for (std::size_t j = 0; j < 3; ++j)
                img += Polynomial::term(Monomial::variable(static_cast<std::uint32_t>(j)), a[i][j]);
            images.push_back(img);
        }
        Polynomial ag = g.substitute(images);
        // proportional to g: ag = c g with c the T1T2 coefficient
        mpq_class c = ag.coefficient(Monomial::variable(0) * Monomial::variable(1));
        bool proportional = ag == g.scaled(c);
        std::vector<mpq_class> point(10, 0);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                point[i * 3 + j] = a[i][j];
        bool vanishes = true;
        for (const auto& h : jp)
            vanishes = vanishes && h.evaluate(point) == 0;
        CHECK(proportional == vanishes);
        return vanishes;
    };

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> x(-4, 4);
    int stabilizing = 0;
    for (int trial = 0; trial < 60; ++trial) {
        // half of the samples come from GL(2) acting on binary quadrics:
        // T1 = x^2, T2 = y^2, T3 = xy
        std::vector<std::vector<mpq_class>> a(3, std::vector<mpq_class>(3));
        if (trial % 2 == 0) {
            mpq_class p = x(rng), q = x(rng), r = x(rng), t = x(rng);
            a[0] = {p * p, q * q, 2 * p * q};
            a[1] = {r * r, t * t, 2 * r * t};
            a[2] = {p * r, q * t, p * t + q * r};
        } else {
            for (auto& row : a)
                for (auto& e : row)
                    e = x(rng);
        }
        stabilizing += check(a) ? 1 : 0;
    }
    CHECK(stabilizing >= 30);
}
