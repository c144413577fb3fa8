#pragma once

#include "gaut/graded_ring.hpp"
#include "gaut/weight_symmetry.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gaut {

/// Concatenated monomial bases B = (B_1, ..., B_s) of the components S_{w_i}, w_i in Omega_S.
struct ActionBasis {
    WeightSet weights;
    std::vector<std::vector<Monomial>> blocks;
    std::vector<Monomial> flat;
    std::vector<std::size_t> blockOf;      // flat index -> block
    std::vector<std::size_t> blockStart;   // block -> first flat index
    std::vector<std::size_t> variableSlot; // variable T_i -> flat index of T_i

    std::size_t size() const { return flat.size(); }
    const GroupElement& degreeOf(std::size_t flatIndex) const { return weights.weights[blockOf[flatIndex]]; }
    std::vector<std::size_t> blockSizes() const;
};

/// Throws ResourceGuardError when n would exceed maxSize.
ActionBasis buildActionBasis(const GradedPolyRing& ring, std::size_t maxSize = 128);

/// Variables of S' = Q[Y_1..Y_{n^2}, Z]: Y(i*n + j + 1) has index i*n + j, Z has index n^2.
VariableNaming actionRingNaming(std::size_t n);
inline std::uint32_t yVariable(std::size_t n, std::size_t row, std::size_t col)
{
    return static_cast<std::uint32_t>(row * n + col);
}
inline std::uint32_t zVariable(std::size_t n) { return static_cast<std::uint32_t>(n * n); }

/// n x n matrix whose entries are either 0 or the variable Y(i*n + j + 1).
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    explicit SymbolicMatrix(std::size_t n) : n_(n), nonzero_(n * n, false) {}

    std::size_t size() const { return n_; }
    bool isNonzero(std::size_t row, std::size_t col) const { return nonzero_[row * n_ + col]; }
    void setNonzero(std::size_t row, std::size_t col, bool value = true) { nonzero_[row * n_ + col] = value; }
    /// 1-based Y indices of the nonzero entries, increasing.
    std::vector<std::size_t> nonzeroSlots() const;
    /// Entry as a polynomial in the action ring variables.
    Polynomial entry(std::size_t row, std::size_t col) const;

    /// Rows of "Y(k)" / "0" strings, as printed in session listings.
    std::vector<std::vector<std::string>> display() const;

    bool operator==(const SymbolicMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> nonzero_;
};

/// Entry (i, j) is Y(i*n+j+1) iff deg(flat_j) = B deg(flat_i). Throws
/// ValidationError if B does not match block dimensions (B outside Gamma_0).
SymbolicMatrix structuredMatrix(const ActionBasis& basis, const GroupAutomorphism& b);

/// det over the nonzero pattern; throws ResourceGuardError past maxTerms and
/// ValidationError when no generalized diagonal is nonzero.
Polynomial symbolicDeterminant(const SymbolicMatrix& a, std::uint64_t maxTerms = 1'000'000);

/// One generator Y(k) per zero entry (increasing k), then det(A) * Z - 1.
std::vector<Polynomial> zeroPatternIdeal(const SymbolicMatrix& a, std::uint64_t maxTerms = 1'000'000);

/// For every basis monomial m = T^e of total degree >= 2, the coefficients of
/// phi_A(m) - prod_i phi_A(T_i)^{e_i} with phi_A(flat_p) = sum_j Y(p*n+j+1) flat_j.
/// Throws ResourceGuardError when one expanded product would exceed maxTerms terms.
std::vector<Polynomial> multiplicativityIdeal(const ActionBasis& basis, std::uint64_t maxTerms = 1'000'000);

/// (A_B, B, J_B).
struct AutTriple {
    SymbolicMatrix matrix;
    GroupAutomorphism weightAutomorphism;
    std::vector<std::size_t> weightPermutation;
    std::vector<Polynomial> ideal;
};

/// Ideal given as a product of factors; stored factored.
class ProductIdeal {
public:
    ProductIdeal() = default;
    explicit ProductIdeal(std::vector<std::vector<Polynomial>> factors) : factors_(std::move(factors)) {}

    const std::vector<std::vector<Polynomial>>& factors() const { return factors_; }
    /// Every product generator vanishes at the point iff some factor vanishes entirely there.
    bool vanishesAt(std::span<const mpq_class> point) const;
    /// Products g_1 * ... * g_t over all choices; throws ResourceGuardError past maxGenerators.
    std::vector<Polynomial> expand(std::uint64_t maxGenerators = 100'000) const;

private:
    std::vector<std::vector<Polynomial>> factors_;
};

struct AutOptions {
    unsigned jobs = 1;
    std::size_t maxBasisSize = 128;
    std::uint64_t maxDeterminantTerms = 1'000'000;
    std::uint64_t maxMultiplicativityTerms = 1'000'000;
    SymmetrySearchOptions symmetry;
};

/// Presentation of Aut_K(S) inside GL(n).
struct AutPresentation {
    DegreeMatrix degrees;
    ActionBasis basis;
    std::vector<GroupAutomorphism> weightAutomorphisms; // Aut(Omega_S)
    std::vector<AutTriple> triples;                     // one per B in Gamma_0
    std::vector<Polynomial> multiplicativity;
    std::vector<GroupElement> variableWeights;          // Y(1)..Y(n^2), Z
    bool multiMonomialBlocks = false;                   // some B_i has more than one monomial

    std::size_t n() const { return basis.size(); }
    VariableNaming naming() const { return actionRingNaming(n()); }
    ProductIdeal combinedIdeal() const;
};

AutPresentation autKS(const GradedPolyRing& ring, const AutOptions& options = {});

/// deg Y(i*n+j+1) = deg flat_i; deg Z = -sum_i deg flat_i.
std::vector<GroupElement> actionRingWeights(const ActionBasis& basis);

} // namespace gaut
