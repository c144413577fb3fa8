#include "gaut/aut_polyring.hpp"

#include "gaut/errors.hpp"
#include "gaut/parallel.hpp"
#include "gaut/validation.hpp"

#include <algorithm>
#include <map>

namespace gaut {

std::vector<std::size_t> ActionBasis::blockSizes() const
{
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        out.push_back(b.size());
    return out;
}

ActionBasis buildActionBasis(const GradedPolyRing& ring, std::size_t maxSize)
{
    ActionBasis basis;
    basis.weights = WeightSet::fromDegrees(ring.degrees());
    for (std::size_t b = 0; b < basis.weights.size(); ++b) {
        auto monomials = monomialBasis(ring, basis.weights.weights[b]);
        basis.blockStart.push_back(basis.flat.size());
        if (basis.flat.size() + monomials.size() > maxSize)
            throw ResourceGuardError("buildActionBasis: the action basis exceeds n = " + std::to_string(maxSize) +
                                     "; raise the cap to continue");
        for (const auto& m : monomials) {
            basis.flat.push_back(m);
            basis.blockOf.push_back(b);
        }
        basis.blocks.push_back(std::move(monomials));
    }
    basis.variableSlot.resize(ring.variableCount());
    for (std::size_t i = 0; i < ring.variableCount(); ++i) {
        auto it = std::find(basis.flat.begin(), basis.flat.end(), Monomial::variable(static_cast<std::uint32_t>(i)));
        if (it == basis.flat.end())
            throw InternalError("buildActionBasis: variable missing from its own component");
        basis.variableSlot[i] = static_cast<std::size_t>(it - basis.flat.begin());
    }
    return basis;
}

VariableNaming actionRingNaming(std::size_t n)
{
    return VariableNaming("Y", n * n, {"Z"});
}

std::vector<std::size_t> SymbolicMatrix::nonzeroSlots() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nonzero_.size(); ++k)
        if (nonzero_[k])
            out.push_back(k + 1);
    return out;
}

Polynomial SymbolicMatrix::entry(std::size_t row, std::size_t col) const
{
    if (!isNonzero(row, col))
        return {};
    return Polynomial::variable(yVariable(n_, row, col));
}

std::vector<std::vector<std::string>> SymbolicMatrix::display() const
{
    std::vector<std::vector<std::string>> out(n_, std::vector<std::string>(n_, "0"));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (isNonzero(i, j))
                out[i][j] = "Y(" + std::to_string(i * n_ + j + 1) + ")";
    return out;
}

SymbolicMatrix structuredMatrix(const ActionBasis& basis, const GroupAutomorphism& b)
{
    auto perm = weightPermutation(b, basis.weights);
    if (!perm)
        throw ValidationError("structuredMatrix: B does not permute the generator weights");
    for (std::size_t i = 0; i < basis.blocks.size(); ++i)
        if (basis.blocks[i].size() != basis.blocks[(*perm)[i]].size())
            throw ValidationError("structuredMatrix: B maps a component of dimension " +
                                  std::to_string(basis.blocks[i].size()) + " to one of dimension " +
                                  std::to_string(basis.blocks[(*perm)[i]].size()));
    const std::size_t n = basis.size();
    SymbolicMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t target = (*perm)[basis.blockOf[i]];
        for (std::size_t j = basis.blockStart[target]; j < basis.blockStart[target] + basis.blocks[target].size(); ++j)
            a.setNonzero(i, j);
    }
    return a;
}

Polynomial symbolicDeterminant(const SymbolicMatrix& a, std::uint64_t maxTerms)
{
    const std::size_t n = a.size();
    Polynomial det;
    std::vector<bool> used(n, false);
    std::vector<std::size_t> column(n);
    std::uint64_t terms = 0;

    auto rec = [&](auto&& self, std::size_t row, std::size_t inversions) -> void {
        if (row == n) {
            if (++terms > maxTerms)
                throw ResourceGuardError("symbolicDeterminant: more than " + std::to_string(maxTerms) +
                                         " terms; raise the determinant term cap to continue");
            Monomial m;
            for (std::size_t i = 0; i < n; ++i)
                m = m * Monomial::variable(yVariable(n, i, column[i]));
            det.addTerm(m, inversions % 2 == 0 ? 1 : -1);
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || !a.isNonzero(row, j))
                continue;
            std::size_t greater = 0;
            for (std::size_t c = j + 1; c < n; ++c)
                greater += used[c] ? 1 : 0;
            used[j] = true;
            column[row] = j;
            self(self, row + 1, inversions + greater);
            used[j] = false;
        }
    };
    rec(rec, 0, 0);
    if (det.isZero())
        throw ValidationError("symbolicDeterminant: B admits no invertible matrix (structurally singular pattern)");
    return det;
}

std::vector<Polynomial> zeroPatternIdeal(const SymbolicMatrix& a, std::uint64_t maxTerms)
{
    const std::size_t n = a.size();
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a.isNonzero(i, j))
                out.push_back(Polynomial::variable(yVariable(n, i, j)));
    Polynomial det = symbolicDeterminant(a, maxTerms);
    out.push_back(det * Polynomial::variable(zVariable(n)) - Polynomial::constant(1));
    return out;
}

std::vector<Polynomial> multiplicativityIdeal(const ActionBasis& basis, std::uint64_t maxTerms)
{
    const std::size_t n = basis.size();
    const std::size_t r = basis.variableSlot.size();
    const auto offset = static_cast<std::uint32_t>(r);

    // phi_A(flat_p) with T in [0, r) and Y shifted to [r, r + n^2)
    auto image = [&](std::size_t p) {
        Polynomial out;
        for (std::size_t j = 0; j < n; ++j)
            out += Polynomial::term(basis.flat[j] * Monomial::variable(offset + yVariable(n, p, j)));
        return out;
    };
    std::vector<Polynomial> variableImages;
    for (std::size_t i = 0; i < r; ++i)
        variableImages.push_back(image(basis.variableSlot[i]));

    std::vector<Polynomial> out;
    for (std::size_t p = 0; p < n; ++p) {
        if (basis.flat[p].degree() < 2)
            continue;
        // prod_i phi_A(T_i)^{e_i} has prod_i binom(n + e_i - 1, e_i) terms
        mpz_class terms = 1;
        for (const auto& [var, e] : basis.flat[p].factors()) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), n + e - 1, e);
            terms *= b;
        }
        if (terms > mpz_class(std::to_string(maxTerms)))
            throw ResourceGuardError("multiplicativityIdeal: expanding the image of basis monomial " +
                                     std::to_string(p + 1) + " needs " + terms.get_str() + " terms (cap " +
                                     std::to_string(maxTerms) + ")");
        Polynomial difference = image(p) - Polynomial::term(basis.flat[p]).substitute(variableImages);
        for (auto& [tMonomial, coefficient] : difference.splitAt(offset)) {
            Polynomial g = coefficient;
            if (g.terms().begin()->second < 0)
                g = -g;
            if (std::find(out.begin(), out.end(), g) == out.end())
                out.push_back(std::move(g));
        }
    }
    return out;
}

bool ProductIdeal::vanishesAt(std::span<const mpq_class> point) const
{
    for (const auto& factor : factors_) {
        bool all = true;
        for (const auto& g : factor)
            if (g.evaluate(point) != 0) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

std::vector<Polynomial> ProductIdeal::expand(std::uint64_t maxGenerators) const
{
    std::uint64_t count = factors_.empty() ? 0 : 1;
    for (const auto& f : factors_) {
        if (f.empty())
            return {};
        if (count > maxGenerators / f.size())
            throw ResourceGuardError("ProductIdeal::expand: more than " + std::to_string(maxGenerators) +
                                     " product generators");
        count *= f.size();
    }
    if (count == 0)
        return {};
    std::vector<Polynomial> out{Polynomial::constant(1)};
    for (const auto& f : factors_) {
        std::vector<Polynomial> next;
        next.reserve(out.size() * f.size());
        for (const auto& p : out)
            for (const auto& g : f)
                next.push_back(p * g);
        out = std::move(next);
    }
    return out;
}

ProductIdeal AutPresentation::combinedIdeal() const
{
    std::vector<std::vector<Polynomial>> factors;
    for (const auto& t : triples)
        factors.push_back(t.ideal);
    return ProductIdeal(std::move(factors));
}

std::vector<GroupElement> actionRingWeights(const ActionBasis& basis)
{
    const std::size_t n = basis.size();
    std::vector<GroupElement> out;
    out.reserve(n * n + 1);
    if (n == 0)
        return out;
    GroupElement total = GroupElement::zero(basis.degreeOf(0).group());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            out.push_back(basis.degreeOf(i));
        total = total + basis.degreeOf(i);
    }
    out.push_back(-total);
    return out;
}

AutPresentation autKS(const GradedPolyRing& ring, const AutOptions& options)
{
    if (!checkEffective(ring.degrees()))
        throw ValidationError("autKS: the grading is not effective");
    if (!ring.isPointed())
        throw ValidationError("autKS: the grading is not pointed");

    AutPresentation out;
    out.degrees = ring.degrees();
    out.basis = buildActionBasis(ring, options.maxBasisSize);
    SymmetrySearchOptions symmetry = options.symmetry;
    symmetry.jobs = options.jobs;
    out.weightAutomorphisms = autGenWeights(ring.degrees(), symmetry);
    auto admissible = admissibleAutomorphisms(out.weightAutomorphisms, out.basis.weights, out.basis.blockSizes());
    if (admissible.empty() || !admissible.front().automorphism.isIdentity())
        throw InternalError("autKS: the identity must be admissible");
    out.multiplicativity = multiplicativityIdeal(out.basis, options.maxMultiplicativityTerms);
    out.variableWeights = actionRingWeights(out.basis);
    for (const auto& block : out.basis.blocks)
        out.multiMonomialBlocks = out.multiMonomialBlocks || block.size() > 1;

    out.triples.resize(admissible.size());
    parallelFor(admissible.size(), options.jobs, [&](std::size_t t) {
        AutTriple triple;
        triple.weightAutomorphism = admissible[t].automorphism;
        triple.weightPermutation = admissible[t].weightPermutation;
        triple.matrix = structuredMatrix(out.basis, triple.weightAutomorphism);
        triple.ideal = zeroPatternIdeal(triple.matrix, options.maxDeterminantTerms);
        triple.ideal.insert(triple.ideal.end(), out.multiplicativity.begin(), out.multiplicativity.end());
        out.triples[t] = std::move(triple);
    });
    return out;
}

} // namespace gaut
