#pragma once

#include "gaut/aut_algebra.hpp"
#include "gaut/cone.hpp"
#include "gaut/grading.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gaut {

enum class FaceMode {
    AllSubsets, ///< every nonempty F in {1..r}
    UserFaces   ///< faces listed by the caller
};

std::string toString(FaceMode mode);
/// "all-subsets" or "user-faces"; throws StructuralError otherwise.
FaceMode parseFaceMode(const std::string& text);

struct OrbitConeOptions {
    FaceMode mode = FaceMode::AllSubsets;
    std::vector<std::vector<std::size_t>> faces; // 0-based variable indices, UserFaces only
    std::size_t maxSubsetVariables = 20;
    unsigned jobs = 1;
};

/// An orbit cone with the face that produced it first.
struct OrbitCone {
    std::vector<std::size_t> face;    // 0-based
    std::vector<std::size_t> closure; // every i with q_i^0 in the cone
    RationalCone cone;
};

/// cone(q_i^0 : i in F) over the selected faces, deduplicated. Two such cones
/// agree iff they contain the same weights, so the closure is the key.
std::vector<OrbitCone> orbitCones(const DegreeMatrix& q, const OrbitConeOptions& options = {});

/// lambda(w): intersection of the orbit cones containing w^0. Throws
/// ValidationError when w^0 is outside the weight cone.
RationalCone gitCone(const DegreeMatrix& q, const GroupElement& w, const OrbitConeOptions& options = {});
RationalCone gitConeFromOrbitCones(const DegreeMatrix& q, const std::vector<OrbitCone>& cones, const GroupElement& w);

/// A x lambda = lambda for the free block A of B.
bool fixesCone(const GroupAutomorphism& b, const RationalCone& cone);

struct XhatResult {
    RationalCone gitCone;
    std::vector<std::size_t> retained; // indices into the input triples
    StabilizerData filtered;
};

/// Keeps the triples whose B fixes lambda(w).
XhatResult autXhat(const StabilizerData& stab, const GroupElement& w, const OrbitConeOptions& options = {});

} // namespace gaut
