#include "gaut/aut_algebra.hpp"

#include "gaut/errors.hpp"
#include "gaut/parallel.hpp"
#include "gaut/validation.hpp"

#include <algorithm>

namespace gaut {

std::vector<Polynomial> StabilizerTriple::ideal() const
{
    std::vector<Polynomial> out = triple.ideal;
    out.insert(out.end(), stabilizer.begin(), stabilizer.end());
    return out;
}

const GradedComponent& StabilizerData::component(const GroupElement& u) const
{
    auto it = std::find_if(components.begin(), components.end(), [&](const auto& c) { return c.degree == u; });
    if (it == components.end())
        throw InternalError("StabilizerData: no component data for degree " + u.toString());
    return *it;
}

ProductIdeal StabilizerData::combinedIdeal() const
{
    std::vector<std::vector<Polynomial>> factors;
    for (const auto& t : triples)
        factors.push_back(t.ideal());
    return ProductIdeal(std::move(factors));
}

std::vector<GroupElement> idealGeneratorDegrees(const Ideal& ideal)
{
    std::vector<GroupElement> out;
    for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
        HomogeneityReport h = degreeOf(ideal.ring(), ideal.generators()[j]);
        if (!h.homogeneous)
            throw ValidationError("idealGeneratorDegrees: generator " + std::to_string(j + 1) + " is not homogeneous");
        if (std::find(out.begin(), out.end(), *h.degree) == out.end())
            out.push_back(*h.degree);
    }
    return out;
}

std::map<Monomial, Polynomial, GrlexDescending> applyStructuredMatrix(const SymbolicMatrix& a,
                                                                      const ActionBasis& basis,
                                                                      const Polynomial& f)
{
    const std::size_t n = basis.size();
    const auto offset = static_cast<std::uint32_t>(basis.variableSlot.size());
    std::vector<Polynomial> images;
    for (std::size_t slot : basis.variableSlot) {
        Polynomial image;
        for (std::size_t j = 0; j < n; ++j)
            if (a.isNonzero(slot, j))
                image += Polynomial::term(basis.flat[j] * Monomial::variable(offset + yVariable(n, slot, j)));
        images.push_back(std::move(image));
    }
    return f.substitute(images).splitAt(offset);
}

std::vector<Polynomial> stabilizerIdealForTriple(const AutTriple& triple, const ActionBasis& basis,
                                                 const std::vector<GroupElement>& generatorDegrees,
                                                 const std::vector<GradedComponent>& components)
{
    auto find = [&](const GroupElement& u) -> const GradedComponent& {
        auto it = std::find_if(components.begin(), components.end(), [&](const auto& c) { return c.degree == u; });
        if (it == components.end())
            throw InternalError("stabilizerIdealForTriple: missing component data for " + u.toString());
        return *it;
    };

    std::vector<Polynomial> out;
    for (const auto& u : generatorDegrees) {
        const GradedComponent& source = find(u);
        const GradedComponent& target = find(triple.weightAutomorphism.apply(u));
        if (source.dimension() != target.dimension())
            throw InternalError("stabilizerIdealForTriple: B maps a component of dimension " +
                                std::to_string(source.dimension()) + " to one of dimension " +
                                std::to_string(target.dimension()));
        for (std::size_t j = 0; j < source.basis.size(); ++j) {
            auto image = applyStructuredMatrix(triple.matrix, basis, source.basisElement(j));
            // coefficient of each target monomial, as a Y-polynomial
            std::vector<Polynomial> coords(target.dimension());
            for (auto& [m, coeff] : image) {
                auto it = std::lower_bound(target.monomials.begin(), target.monomials.end(), m, GrlexDescending{});
                if (it == target.monomials.end() || !(*it == m))
                    throw InternalError("stabilizerIdealForTriple: image term outside the target component");
                coords[static_cast<std::size_t>(it - target.monomials.begin())] = std::move(coeff);
            }
            for (const auto& form : target.forms) {
                Polynomial g;
                for (std::size_t c = 0; c < form.size(); ++c)
                    if (form[c] != 0 && !coords[c].isZero())
                        g += coords[c].scaled(form[c]);
                if (!g.isZero())
                    out.push_back(std::move(g));
            }
        }
    }
    return out;
}

StabilizerData autGradAlg(const Ideal& ideal, const AutOptions& options)
{
    const GradedPolyRing& ring = ideal.ring();
    StabilizerData out;
    out.generatorDegrees = idealGeneratorDegrees(ideal);
    out.presentation = autKS(ring, options);

    for (const auto& w : out.presentation.basis.weights.weights)
        if (!idealComponentBasis(ideal, w).rows.empty())
            throw ValidationError("autGradAlg: the component I_w is nonzero for the generator weight w = " +
                                  w.toString() + "; the stabilizer would not present Aut_K(R)");

    std::vector<GroupElement> needed;
    for (const auto& u : out.generatorDegrees)
        for (const auto& t : out.presentation.triples) {
            GroupElement image = t.weightAutomorphism.apply(u);
            for (const auto& d : {u, image})
                if (std::find(needed.begin(), needed.end(), d) == needed.end())
                    needed.push_back(d);
        }
    out.components.resize(needed.size());
    parallelFor(needed.size(), options.jobs, [&](std::size_t i) { out.components[i] = gradedComponent(ideal, needed[i]); });

    out.triples.resize(out.presentation.triples.size());
    parallelFor(out.triples.size(), options.jobs, [&](std::size_t t) {
        const AutTriple& triple = out.presentation.triples[t];
        out.triples[t] = StabilizerTriple{
            triple, stabilizerIdealForTriple(triple, out.presentation.basis, out.generatorDegrees, out.components)};
    });
    return out;
}

} // namespace gaut
