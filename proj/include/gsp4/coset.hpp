#ifndef GSP4_COSET_HPP
#define GSP4_COSET_HPP

#include <optional>

#include "gsp4/group.hpp"

namespace gsp4 {

/// Newton-based recovery of the eleven coset parameters of g for the chosen
/// double-coset decomposition. Requires mu2(g) > 0 and g within the Newton
/// basin of the chart (near the identity, or near the supplied seed).
/// Non-split seeds are closed-form: mu2 = gamma^2 lambda, |det J(g,iI)| = gamma^2,
/// Im tr g<iI> = lambda (zeta^2 + zeta^{-2}).
CosetCoords coset_decompose(const GroupElement& g, Flavor flavor,
                            const std::optional<CosetCoords>& seed = std::nullopt,
                            const Tolerances& tol = default_tol());

/// Split coordinates of the identity element (the split chart sits far from
/// the parameter origin: a=b=2^{-1/2}, lambda=-1, zeta=0, phi1=3pi/4, phi4=pi).
CosetCoords split_identity_coords();

} // namespace gsp4

#endif
