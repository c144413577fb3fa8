#pragma once

#include "gaut/grading.hpp"
#include "gaut/polynomial.hpp"
#include "gaut/rational_linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gaut {

/// S = Q[T_1..T_r] with deg(T_i) = q_i.
class GradedPolyRing {
public:
    explicit GradedPolyRing(DegreeMatrix degrees);

    std::size_t variableCount() const { return degrees_.size(); }
    const DegreeMatrix& degrees() const { return degrees_; }
    const GradingGroup& group() const { return degrees_.group(); }
    VariableNaming naming() const { return VariableNaming("T", variableCount()); }

    GroupElement degreeOf(const Monomial& m) const;
    /// phi with phi(q_i^0) > 0 for all i, when the grading is pointed.
    const std::optional<IntVec>& positiveFunctional() const { return functional_; }
    bool isPointed() const { return functional_.has_value(); }

private:
    DegreeMatrix degrees_;
    std::optional<IntVec> functional_;
};

struct HomogeneityReport {
    bool homogeneous = false;
    std::optional<GroupElement> degree;      // set when homogeneous
    std::vector<GroupElement> termDegrees;   // distinct term degrees, in term order
};

/// Degree of a nonzero polynomial, or the list of its distinct term degrees.
/// Throws StructuralError on the zero polynomial.
HomogeneityReport degreeOf(const GradedPolyRing& ring, const Polynomial& f);

/// I = <g_1, ..., g_s>; zero generators are dropped.
class Ideal {
public:
    Ideal(const GradedPolyRing& ring, std::vector<Polynomial> generators);

    const GradedPolyRing& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

private:
    GradedPolyRing ring_;
    std::vector<Polynomial> generators_;
};

/// All monomials of degree w, grlex descending. Throws ValidationError when the
/// grading is not pointed and ResourceGuardError beyond maxCount monomials.
std::vector<Monomial> monomialBasis(const GradedPolyRing& ring, const GroupElement& w,
                                    std::size_t maxCount = 5'000'000);

/// Echelon basis of I_u as coefficient rows over monomialBasis(ring, u).
struct ComponentBasis {
    GroupElement degree;
    std::vector<Monomial> monomials;
    RatRows rows;
};

ComponentBasis idealComponentBasis(const Ideal& ideal, const GroupElement& u);

/// Kernel rows l_1..l_m with l_i . h_j == 0, so that span(h) = V(l_1..l_m).
RatRows annihilatorForms(const RatRows& componentBasis, std::size_t dimension);

/// Coordinates of a polynomial with respect to a list of monomials; throws
/// StructuralError if a term lies outside.
RatVec coordinatesIn(const std::vector<Monomial>& monomials, const Polynomial& p);

/// Everything the stabilizer computation needs about I_u.
struct GradedComponent {
    GroupElement degree;
    std::vector<Monomial> monomials;
    RatRows basis; // h_1..h_l
    RatRows forms; // l_1..l_m

    std::size_t dimension() const { return monomials.size(); }
    Polynomial basisElement(std::size_t j) const;
};

GradedComponent gradedComponent(const Ideal& ideal, const GroupElement& u);

} // namespace gaut
