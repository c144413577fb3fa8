#include "gaut/graded_ring.hpp"

#include "gaut/cone.hpp"
#include "gaut/errors.hpp"

#include <algorithm>
#include <map>

namespace gaut {

GradedPolyRing::GradedPolyRing(DegreeMatrix degrees)
    : degrees_(std::move(degrees)), functional_(gaut::positiveFunctional(degrees_))
{
}

GroupElement GradedPolyRing::degreeOf(const Monomial& m) const
{
    return degreeOfExponent(degrees_, m.exponents(variableCount()));
}

HomogeneityReport degreeOf(const GradedPolyRing& ring, const Polynomial& f)
{
    if (f.isZero())
        throw StructuralError("degreeOf: the zero polynomial has no degree");
    HomogeneityReport report;
    for (const auto& [m, c] : f.terms()) {
        GroupElement d = ring.degreeOf(m);
        if (std::find(report.termDegrees.begin(), report.termDegrees.end(), d) == report.termDegrees.end())
            report.termDegrees.push_back(std::move(d));
    }
    report.homogeneous = report.termDegrees.size() == 1;
    if (report.homogeneous)
        report.degree = report.termDegrees.front();
    return report;
}

Ideal::Ideal(const GradedPolyRing& ring, std::vector<Polynomial> generators) : ring_(ring)
{
    for (auto& g : generators)
        if (!g.isZero())
            generators_.push_back(std::move(g));
}

namespace {

struct BasisSearch {
    const GradedPolyRing& ring;
    const GroupElement& target;
    std::vector<std::int64_t> weight; // phi(q_i^0) > 0
    std::vector<std::int64_t> exponent;
    std::vector<Monomial> found;
    std::size_t maxCount;

    void run(std::size_t var, std::int64_t budget)
    {
        const std::size_t r = weight.size();
        if (var == r) {
            if (budget == 0 && degreeOfExponent(ring.degrees(), exponent) == target) {
                if (found.size() >= maxCount)
                    throw ResourceGuardError("monomialBasis: more than " + std::to_string(maxCount) +
                                             " monomials in degree " + target.toString());
                found.push_back(Monomial::fromExponents(exponent));
            }
            return;
        }
        if (var + 1 == r) {
            // the last exponent is forced by the remaining budget
            if (budget % weight[var] != 0)
                return;
            exponent[var] = budget / weight[var];
            run(var + 1, 0);
            exponent[var] = 0;
            return;
        }
        for (std::int64_t e = budget / weight[var]; e >= 0; --e) {
            exponent[var] = e;
            run(var + 1, budget - e * weight[var]);
        }
        exponent[var] = 0;
    }
};

} // namespace

std::vector<Monomial> monomialBasis(const GradedPolyRing& ring, const GroupElement& w, std::size_t maxCount)
{
    if (!(w.group() == ring.group()))
        throw StructuralError("monomialBasis: degree from a different grading group");
    if (!ring.isPointed())
        throw ValidationError("monomialBasis: grading is not pointed, graded components may be infinite");
    const IntVec& phi = *ring.positiveFunctional();
    BasisSearch search{ring, w, {}, std::vector<std::int64_t>(ring.variableCount(), 0), {}, maxCount};
    for (const auto& q : ring.degrees().columns())
        search.weight.push_back(toInt64(dot(phi, q.freeVector())));
    const mpz_class budget = dot(phi, w.freeVector());
    if (budget < 0)
        return {};
    search.run(0, toInt64(budget));
    std::sort(search.found.begin(), search.found.end(), GrlexDescending{});
    return search.found;
}

RatVec coordinatesIn(const std::vector<Monomial>& monomials, const Polynomial& p)
{
    RatVec v(monomials.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), m, GrlexDescending{});
        if (it == monomials.end() || !(*it == m))
            throw StructuralError("coordinatesIn: term outside the given monomial basis");
        v[static_cast<std::size_t>(it - monomials.begin())] = c;
    }
    return v;
}

ComponentBasis idealComponentBasis(const Ideal& ideal, const GroupElement& u)
{
    const GradedPolyRing& ring = ideal.ring();
    ComponentBasis out{u, monomialBasis(ring, u), {}};
    RatRows spanning;
    std::map<GroupElement, std::vector<Monomial>> multipliers;
    for (const auto& g : ideal.generators()) {
        HomogeneityReport h = degreeOf(ring, g);
        if (!h.homogeneous)
            throw ValidationError("idealComponentBasis: generator is not homogeneous");
        const GroupElement shift = u - *h.degree;
        auto it = multipliers.find(shift);
        if (it == multipliers.end())
            it = multipliers.emplace(shift, monomialBasis(ring, shift)).first;
        for (const auto& m : it->second)
            spanning.push_back(coordinatesIn(out.monomials, Polynomial::term(m) * g));
    }
    out.rows = reducedRowEchelon(std::move(spanning), out.monomials.size()).rows;
    return out;
}

RatRows annihilatorForms(const RatRows& componentBasis, std::size_t dimension)
{
    return kernelBasis(componentBasis, dimension);
}

Polynomial GradedComponent::basisElement(std::size_t j) const
{
    Polynomial p;
    for (std::size_t c = 0; c < monomials.size(); ++c)
        p.addTerm(monomials[c], basis[j][c]);
    return p;
}

GradedComponent gradedComponent(const Ideal& ideal, const GroupElement& u)
{
    ComponentBasis cb = idealComponentBasis(ideal, u);
    GradedComponent out{u, std::move(cb.monomials), std::move(cb.rows), {}};
    out.forms = annihilatorForms(out.basis, out.monomials.size());
    return out;
}

} // namespace gaut
