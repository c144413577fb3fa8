#pragma once

#include "gaut/graded_ring.hpp"

#include <string>
#include <vector>

namespace gaut {

/// Standing assumptions on a presentation R = S/I.
struct ValidationReport {
    bool effective = false;
    bool pointed = false;
    bool homogeneous = false;
    bool inMaximalIdealSquared = false;    ///< every term of every generator has degree >= 2
    bool trivialAtGeneratorWeights = false; ///< I_{q_i} = 0 for all i
    bool latticeBasis = false;             ///< free parts contain a basis of Z^k
    std::vector<std::string> diagnostics;

    /// Checks that do not involve the ideal.
    bool ringChecksPass() const { return effective && pointed && latticeBasis; }
    bool allPass() const
    {
        return ringChecksPass() && homogeneous && inMaximalIdealSquared && trivialAtGeneratorWeights;
    }
};

ValidationReport validatePresentation(const Ideal& ideal);

/// Distinct generator weights in order of first appearance among the columns.
std::vector<GroupElement> distinctWeights(const DegreeMatrix& q);

} // namespace gaut
