#include "gaut/validation.hpp"

#include <algorithm>

namespace gaut {

std::vector<GroupElement> distinctWeights(const DegreeMatrix& q)
{
    std::vector<GroupElement> out;
    for (const auto& c : q.columns())
        if (std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    return out;
}

ValidationReport validatePresentation(const Ideal& ideal)
{
    const GradedPolyRing& ring = ideal.ring();
    const VariableNaming names = ring.naming();
    ValidationReport report;

    report.effective = checkEffective(ring.degrees());
    if (!report.effective)
        report.diagnostics.push_back("the columns of Q do not generate the grading group");
    report.pointed = ring.isPointed();
    if (!report.pointed)
        report.diagnostics.push_back("the grading is not pointed: the weight cone contains a line or a zero weight");
    report.latticeBasis = containsLatticeBasis(ring.degrees());
    if (!report.latticeBasis)
        report.diagnostics.push_back("no k of the free parts q_i^0 form a lattice basis of Z^k");

    report.homogeneous = true;
    report.inMaximalIdealSquared = true;
    for (std::size_t j = 0; j < ideal.generators().size(); ++j) {
        const Polynomial& g = ideal.generators()[j];
        HomogeneityReport h = degreeOf(ring, g);
        if (!h.homogeneous) {
            report.homogeneous = false;
            std::string degrees;
            for (const auto& d : h.termDegrees)
                degrees += (degrees.empty() ? "" : ", ") + d.toString();
            report.diagnostics.push_back("generator " + std::to_string(j + 1) + " (" + toString(g, names) +
                                         ") is not homogeneous; term degrees: " + degrees);
        }
        for (const auto& [m, c] : g.terms())
            if (m.degree() < 2) {
                report.inMaximalIdealSquared = false;
                report.diagnostics.push_back("generator " + std::to_string(j + 1) + " has the term " +
                                             toString(m, names) + " of total degree < 2");
                break;
            }
    }

    if (report.homogeneous && report.pointed) {
        report.trivialAtGeneratorWeights = true;
        for (const auto& w : distinctWeights(ring.degrees())) {
            if (!idealComponentBasis(ideal, w).rows.empty()) {
                report.trivialAtGeneratorWeights = false;
                report.diagnostics.push_back("the component I_w is nonzero for the generator weight w = " +
                                             w.toString());
            }
        }
    } else {
        report.diagnostics.push_back("skipped the I_{q_i} = 0 check (needs a homogeneous ideal and a pointed grading)");
    }
    return report;
}

} // namespace gaut
