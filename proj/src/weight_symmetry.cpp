#include "gaut/weight_symmetry.hpp"

#include "gaut/errors.hpp"
#include "gaut/parallel.hpp"
#include "gaut/validation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gaut {

WeightSet WeightSet::fromDegrees(const DegreeMatrix& q)
{
    WeightSet out;
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto idx = out.indexOf(q.column(i));
        if (idx) {
            out.variables[*idx].push_back(i);
        } else {
            out.weights.push_back(q.column(i));
            out.variables.push_back({i});
        }
    }
    return out;
}

std::optional<std::size_t> WeightSet::indexOf(const GroupElement& w) const
{
    auto it = std::find(weights.begin(), weights.end(), w);
    if (it == weights.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - weights.begin());
}

std::optional<std::vector<std::size_t>> weightPermutation(const GroupAutomorphism& b, const WeightSet& weights)
{
    std::vector<std::size_t> perm;
    std::vector<bool> used(weights.size(), false);
    for (const auto& w : weights.weights) {
        auto j = weights.indexOf(b.apply(w));
        if (!j || used[*j])
            return std::nullopt;
        used[*j] = true;
        perm.push_back(*j);
    }
    return perm;
}

bool canonicalAutomorphismLess(const GroupAutomorphism& a, const GroupAutomorphism& b)
{
    const bool aId = a.isIdentity();
    const bool bId = b.isIdentity();
    if (aId != bId)
        return aId;
    return a.displayMatrix() > b.displayMatrix();
}

namespace {

// First k-subset of weights (lexicographic in weight order) whose free parts
// form a lattice basis.
std::optional<std::vector<std::size_t>> findLatticeBasis(const WeightSet& ws, std::size_t k)
{
    const std::size_t s = ws.size();
    if (s < k)
        return std::nullopt;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        IntMatrix m(k, k);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t row = 0; row < k; ++row)
                m(row, c) = static_cast<long>(ws.weights[pick[c]].freePart()[row]);
        if (abs(determinant(m)) == 1)
            return pick;
        // next combination
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == s - k + i - 1)
            --i;
        if (i == 0)
            return std::nullopt;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
}

// All ordered k-tuples of distinct indices below s.
std::vector<std::vector<std::size_t>> injectiveTuples(std::size_t s, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    std::vector<bool> used(s, false);
    auto rec = [&](auto&& self) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < s; ++i) {
            if (used[i])
                continue;
            used[i] = true;
            current.push_back(i);
            self(self);
            current.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return out;
}

// Candidate torsion columns D e_j: elements t of T with a_j t = 0.
std::vector<std::vector<std::int64_t>> torsionColumnCandidates(const GradingGroup& g, std::size_t j)
{
    const std::size_t l = g.torsionRank();
    std::vector<std::int64_t> step(l);
    for (std::size_t i = 0; i < l; ++i)
        step[i] = g.torsionOrder(i) / std::gcd(g.torsionOrder(i), g.torsionOrder(j));
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> t(l, 0);
    for (;;) {
        out.push_back(t);
        std::size_t i = l;
        while (i-- > 0) {
            t[i] += step[i];
            if (t[i] < g.torsionOrder(i))
                break;
            t[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            return out;
    }
}

struct CandidateContext {
    const GradingGroup& group;
    const WeightSet& weights;
    std::vector<std::size_t> basis;
    IntMatrix basisFreeInverse;
    std::vector<std::vector<std::vector<std::int64_t>>> torsionColumns;
    std::uint64_t torsionCandidateCount = 1;
};

void collectForImage(const CandidateContext& ctx, const std::vector<std::size_t>& image,
                     std::vector<GroupAutomorphism>& out)
{
    const GradingGroup& g = ctx.group;
    const std::size_t k = g.freeRank();
    const std::size_t l = g.torsionRank();

    IntMatrix imageFree(k, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t row = 0; row < k; ++row)
            imageFree(row, c) = static_cast<long>(ctx.weights.weights[image[c]].freePart()[row]);
    if (abs(determinant(imageFree)) != 1)
        return;
    const IntMatrix aInt = imageFree * ctx.basisFreeInverse;
    SmallMatrix a(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = toInt64(aInt(i, j));

    // the free parts alone must already be permuted
    std::set<std::vector<std::int64_t>> freeParts;
    for (const auto& w : ctx.weights.weights)
        freeParts.insert(w.freePart());
    for (const auto& w : ctx.weights.weights) {
        std::vector<std::int64_t> img(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                img[i] += a[i][j] * w.freePart()[j];
        if (!freeParts.count(img))
            return;
    }

    if (l == 0) {
        auto b = GroupAutomorphism::fromBlocks(g, a, {}, {});
        if (weightPermutation(b, ctx.weights))
            out.push_back(std::move(b));
        return;
    }

    std::vector<std::size_t> choice(l, 0);
    for (;;) {
        SmallMatrix d(l, std::vector<std::int64_t>(l));
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = 0; i < l; ++i)
                d[i][j] = ctx.torsionColumns[j][choice[j]][i];

        // C * basisFree = imageTors - D * basisTors, so C = (imageTors - D basisTors) basisFree^{-1}
        IntMatrix rhs(l, k);
        for (std::size_t c = 0; c < k; ++c) {
            const GroupElement& src = ctx.weights.weights[ctx.basis[c]];
            const GroupElement& dst = ctx.weights.weights[image[c]];
            for (std::size_t i = 0; i < l; ++i) {
                std::int64_t v = dst.torsionPart()[i];
                for (std::size_t j = 0; j < l; ++j)
                    v -= d[i][j] * src.torsionPart()[j];
                rhs(i, c) = static_cast<long>(v);
            }
        }
        const IntMatrix cInt = rhs * ctx.basisFreeInverse;
        SmallMatrix c(l, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                mpz_class x = cInt(i, j) % static_cast<long>(g.torsionOrder(i));
                c[i][j] = reduceMod(toInt64(x), g.torsionOrder(i));
            }

        if (torsionBlockIsBijective(g, d)) {
            auto b = GroupAutomorphism::fromBlocks(g, a, c, d);
            if (weightPermutation(b, ctx.weights))
                out.push_back(std::move(b));
        }

        std::size_t j = l;
        while (j-- > 0) {
            if (++choice[j] < ctx.torsionColumns[j].size())
                break;
            choice[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            return;
    }
}

} // namespace

std::vector<GroupAutomorphism> autGenWeights(const DegreeMatrix& q, const SymmetrySearchOptions& options)
{
    const GradingGroup& g = q.group();
    const std::size_t k = g.freeRank();
    const WeightSet weights = WeightSet::fromDegrees(q);
    auto basis = findLatticeBasis(weights, k);
    if (!basis)
        throw ValidationError("autGenWeights: the free parts of the weights contain no lattice basis of Z^" +
                              std::to_string(k) + "; run validatePresentation for details");

    IntMatrix basisFree(k, k);
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t row = 0; row < k; ++row)
            basisFree(row, c) = static_cast<long>(weights.weights[(*basis)[c]].freePart()[row]);
    auto inverse = unimodularInverse(basisFree);
    if (!inverse)
        throw InternalError("autGenWeights: lattice basis is not unimodular");

    CandidateContext ctx{g, weights, *basis, *inverse, {}, 1};
    for (std::size_t j = 0; j < g.torsionRank(); ++j) {
        ctx.torsionColumns.push_back(torsionColumnCandidates(g, j));
        ctx.torsionCandidateCount *= ctx.torsionColumns.back().size();
        if (ctx.torsionCandidateCount > options.maxTorsionCandidates)
            throw ResourceGuardError("autGenWeights: more than " + std::to_string(options.maxTorsionCandidates) +
                                     " torsion-block candidates; raise the cap to continue");
    }

    const auto images = injectiveTuples(weights.size(), k);
    std::vector<std::vector<GroupAutomorphism>> found(images.size());
    parallelFor(images.size(), options.jobs, [&](std::size_t i) { collectForImage(ctx, images[i], found[i]); });

    std::vector<GroupAutomorphism> all;
    for (auto& batch : found)
        for (auto& b : batch)
            if (std::find(all.begin(), all.end(), b) == all.end())
                all.push_back(std::move(b));
    std::sort(all.begin(), all.end(), canonicalAutomorphismLess);
    return all;
}

std::vector<AdmissibleAutomorphism> admissibleAutomorphisms(const std::vector<GroupAutomorphism>& automorphisms,
                                                            const WeightSet& weights,
                                                            const std::vector<std::size_t>& componentDimensions)
{
    if (componentDimensions.size() != weights.size())
        throw StructuralError("admissibleAutomorphisms: one dimension per weight required");
    std::vector<AdmissibleAutomorphism> out;
    for (const auto& b : automorphisms) {
        auto perm = weightPermutation(b, weights);
        if (!perm)
            continue;
        bool ok = true;
        for (std::size_t i = 0; i < weights.size() && ok; ++i)
            ok = componentDimensions[i] == componentDimensions[(*perm)[i]];
        if (ok)
            out.push_back(AdmissibleAutomorphism{b, std::move(*perm)});
    }
    return out;
}

std::vector<AdmissibleAutomorphism> admissibleAutomorphisms(const std::vector<GroupAutomorphism>& automorphisms,
                                                            const GradedPolyRing& ring)
{
    const WeightSet weights = WeightSet::fromDegrees(ring.degrees());
    std::vector<std::size_t> dims;
    for (const auto& w : weights.weights)
        dims.push_back(monomialBasis(ring, w).size());
    return admissibleAutomorphisms(automorphisms, weights, dims);
}

} // namespace gaut
