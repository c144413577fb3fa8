#include "gaut/git_geometry.hpp"

#include "gaut/errors.hpp"
#include "gaut/parallel.hpp"

#include <algorithm>
#include <map>

namespace gaut {

std::string toString(FaceMode mode)
{
    return mode == FaceMode::AllSubsets ? "all-subsets" : "user-faces";
}

FaceMode parseFaceMode(const std::string& text)
{
    if (text == "all-subsets")
        return FaceMode::AllSubsets;
    if (text == "user-faces")
        return FaceMode::UserFaces;
    throw StructuralError("unknown face mode '" + text + "' (expected all-subsets or user-faces)");
}

std::vector<OrbitCone> orbitCones(const DegreeMatrix& q, const OrbitConeOptions& options)
{
    const std::size_t r = q.size();
    const std::size_t k = q.group().freeRank();
    const auto weights = q.freeParts();

    std::vector<std::vector<std::size_t>> faces;
    if (options.mode == FaceMode::AllSubsets) {
        if (r > options.maxSubsetVariables || r >= 63)
            throw ResourceGuardError("orbitCones: " + std::to_string(r) + " variables exceed the subset bound " +
                                     std::to_string(options.maxSubsetVariables) +
                                     "; raise the bound or supply faces in user-faces mode");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < r; ++i)
                if (mask >> i & 1)
                    f.push_back(i);
            faces.push_back(std::move(f));
        }
    } else {
        for (auto f : options.faces) {
            if (f.empty())
                throw StructuralError("orbitCones: empty face");
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            if (f.back() >= r)
                throw StructuralError("orbitCones: face index " + std::to_string(f.back() + 1) + " exceeds r = " +
                                      std::to_string(r));
            faces.push_back(std::move(f));
        }
    }

    std::vector<std::optional<OrbitCone>> computed(faces.size());
    parallelFor(faces.size(), options.jobs, [&](std::size_t t) {
        std::vector<IntVec> rays;
        for (std::size_t i : faces[t])
            rays.push_back(weights[i]);
        RationalCone cone = RationalCone::fromRays(k, rays);
        std::vector<std::size_t> closure;
        for (std::size_t i = 0; i < r; ++i)
            if (cone.contains(weights[i]))
                closure.push_back(i);
        computed[t] = OrbitCone{faces[t], std::move(closure), std::move(cone)};
    });

    std::vector<OrbitCone> out;
    std::map<std::vector<std::size_t>, bool> seen;
    for (auto& c : computed)
        if (seen.emplace(c->closure, true).second)
            out.push_back(std::move(*c));
    return out;
}

RationalCone gitConeFromOrbitCones(const DegreeMatrix& q, const std::vector<OrbitCone>& cones, const GroupElement& w)
{
    const std::size_t k = q.group().freeRank();
    if (!(w.group() == q.group()))
        throw StructuralError("gitCone: w belongs to a different grading group");
    const IntVec w0 = w.freeVector();
    if (!RationalCone::fromRays(k, q.freeParts()).contains(w0))
        throw ValidationError("gitCone: w is not an effective class");
    std::vector<RationalCone> containing;
    for (const auto& c : cones)
        if (c.cone.contains(w0))
            containing.push_back(c.cone);
    if (containing.empty())
        throw ValidationError("gitCone: no orbit cone in the face family contains w");
    return intersectAll(k, containing);
}

RationalCone gitCone(const DegreeMatrix& q, const GroupElement& w, const OrbitConeOptions& options)
{
    return gitConeFromOrbitCones(q, orbitCones(q, options), w);
}

bool fixesCone(const GroupAutomorphism& b, const RationalCone& cone)
{
    return equalCones(cone.transformed(b.freeMatrix()), cone);
}

XhatResult autXhat(const StabilizerData& stab, const GroupElement& w, const OrbitConeOptions& options)
{
    const DegreeMatrix& q = stab.presentation.degrees;
    XhatResult out{gitCone(q, w, options), {}, stab};
    out.filtered.triples.clear();
    out.filtered.presentation.triples.clear();
    for (std::size_t t = 0; t < stab.triples.size(); ++t)
        if (fixesCone(stab.triples[t].triple.weightAutomorphism, out.gitCone)) {
            out.retained.push_back(t);
            out.filtered.triples.push_back(stab.triples[t]);
            out.filtered.presentation.triples.push_back(stab.presentation.triples[t]);
        }
    return out;
}

} // namespace gaut
