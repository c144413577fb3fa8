#pragma once

#include "gaut/integer_matrix.hpp"
#include "gaut/rational_linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gaut {

/// Cone {x : a.x >= 0 for every inequality, e.x == 0 for every equation}.
struct HRepresentation {
    std::vector<IntVec> inequalities;
    std::vector<IntVec> equations;
};

/// Cone lineality + cone(rays).
struct VRepresentation {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
};

/// Double description: minimal generators (extreme rays modulo the lineality
/// space, plus a lineality basis) of an H-described cone in Q^dim.
VRepresentation generatorsFromInequalities(std::size_t dim, const HRepresentation& h);

/// Irredundant facet description of a V-described cone (dual double description).
HRepresentation inequalitiesFromGenerators(std::size_t dim, const VRepresentation& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(IntVec v);
IntVec primitiveFromRational(const RatVec& v);
mpz_class dot(const IntVec& a, const IntVec& b);

/// Some integer phi with phi.v > 0 for every v, or std::nullopt when no such
/// functional exists (the vectors span a cone with a line, or one is zero).
std::optional<IntVec> strictlyPositiveFunctional(std::size_t dim, const std::vector<IntVec>& vectors);

/// Convex polyhedral cone in Q^k with exact arithmetic.
///
/// Both representations are kept: the minimal generators (sorted primitive
/// extreme rays plus a lineality basis) and the irredundant facet list.
class RationalCone {
public:
    static RationalCone fromRays(std::size_t dim, const std::vector<IntVec>& rays);
    static RationalCone fromRationalRays(std::size_t dim, const std::vector<RatVec>& rays);
    static RationalCone fromInequalities(std::size_t dim, const HRepresentation& h);

    std::size_t ambientDim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return generators_.rays; }
    const std::vector<IntVec>& lineality() const { return generators_.lineality; }
    const HRepresentation& facets() const { return facets_; }

    bool contains(const IntVec& v) const;
    bool contains(const RatVec& v) const;
    bool containsCone(const RationalCone& other) const;
    bool isPointed() const { return generators_.lineality.empty(); }
    /// Dimension of the linear span.
    std::size_t dimension() const;
    /// Sum of the extreme rays; lies in the relative interior.
    IntVec relativeInteriorPoint() const;

    /// Image under x -> m * x.
    RationalCone transformed(const IntMatrix& m) const;

private:
    RationalCone(std::size_t dim, VRepresentation generators, HRepresentation facets);

    std::size_t dim_ = 0;
    VRepresentation generators_;
    HRepresentation facets_;
};

RationalCone intersect(const RationalCone& a, const RationalCone& b);
RationalCone intersectAll(std::size_t dim, const std::vector<RationalCone>& cones);
bool equalCones(const RationalCone& a, const RationalCone& b);

} // namespace gaut
