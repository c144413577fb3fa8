#pragma once

#include "gaut/aut_polyring.hpp"
#include "gaut/graded_ring.hpp"

#include <vector>

namespace gaut {

/// An AutTriple whose ideal is extended by the stabilizer equations J'_B.
struct StabilizerTriple {
    AutTriple triple;
    std::vector<Polynomial> stabilizer; // J'_B, polynomials in the Y variables only

    /// J_B followed by J'_B.
    std::vector<Polynomial> ideal() const;
};

/// Presentation of Aut_K(R) = Stab_I(Aut_K(S)).
struct StabilizerData {
    AutPresentation presentation;
    std::vector<GroupElement> generatorDegrees;  // Omega_I
    std::vector<GradedComponent> components;     // I_u for u in Omega_I and every image B u
    std::vector<StabilizerTriple> triples;

    const GradedComponent& component(const GroupElement& u) const;
    ProductIdeal combinedIdeal() const;
};

/// Distinct generator degrees in generator order. Throws ValidationError on a
/// non-homogeneous generator.
std::vector<GroupElement> idealGeneratorDegrees(const Ideal& ideal);

/// J'_B: for every u in Omega_I and basis vector h_j of I_u, the forms of the
/// target component I_{B u} applied to A_B h_j.
std::vector<Polynomial> stabilizerIdealForTriple(const AutTriple& triple, const ActionBasis& basis,
                                                 const std::vector<GroupElement>& generatorDegrees,
                                                 const std::vector<GradedComponent>& components);

/// Runs autKS and extends every triple by its stabilizer equations. Refuses
/// (ValidationError) when some I_{q_i} is nonzero.
StabilizerData autGradAlg(const Ideal& ideal, const AutOptions& options = {});

/// Substitution T_i -> sum_j A_B[slot(i), j] flat_j applied to f; the result is
/// returned split by T-monomial with coefficients in the Y variables.
std::map<Monomial, Polynomial, GrlexDescending> applyStructuredMatrix(const SymbolicMatrix& a,
                                                                      const ActionBasis& basis,
                                                                      const Polynomial& f);

} // namespace gaut
