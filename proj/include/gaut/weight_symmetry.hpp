#pragma once

#include "gaut/graded_ring.hpp"
#include "gaut/grading.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gaut {

/// Omega_S = {w_1, ..., w_s} with the variables of each weight.
struct WeightSet {
    std::vector<GroupElement> weights;               // order of first appearance in Q
    std::vector<std::vector<std::size_t>> variables; // 0-based variable indices per weight

    static WeightSet fromDegrees(const DegreeMatrix& q);
    std::optional<std::size_t> indexOf(const GroupElement& w) const;
    std::size_t size() const { return weights.size(); }
};

struct SymmetrySearchOptions {
    unsigned jobs = 1;
    /// cap on torsion-block candidates per lattice-basis image
    std::uint64_t maxTorsionCandidates = 1'000'000;
};

/// Aut(Omega_S): all automorphisms of K permuting the generator weights.
/// Identity first, the rest in descending lexicographic order of the display matrix.
std::vector<GroupAutomorphism> autGenWeights(const DegreeMatrix& q, const SymmetrySearchOptions& options = {});

/// Index map i -> j with B(w_i) = w_j; std::nullopt if B does not permute Omega_S.
std::optional<std::vector<std::size_t>> weightPermutation(const GroupAutomorphism& b, const WeightSet& weights);

struct AdmissibleAutomorphism {
    GroupAutomorphism automorphism;
    std::vector<std::size_t> weightPermutation; // witness i -> j(i)
};

/// Gamma_0: the B with dim S_{w_i} = dim S_{B w_i} for every weight.
std::vector<AdmissibleAutomorphism> admissibleAutomorphisms(const std::vector<GroupAutomorphism>& automorphisms,
                                                            const GradedPolyRing& ring);
/// Same, with the component dimensions dim S_{w_i} already known.
std::vector<AdmissibleAutomorphism> admissibleAutomorphisms(const std::vector<GroupAutomorphism>& automorphisms,
                                                            const WeightSet& weights,
                                                            const std::vector<std::size_t>& componentDimensions);

/// Canonical order used for automorphism lists.
bool canonicalAutomorphismLess(const GroupAutomorphism& a, const GroupAutomorphism& b);

} // namespace gaut
