#ifndef GSP4_SPECIAL_HPP
#define GSP4_SPECIAL_HPP

#include "gsp4/mat.hpp"

namespace gsp4 {

/// Gamma(z) via a 15-term Lanczos approximation (g = 607/128) with the
/// reflection formula for Re z < 1/2. Throws PoleOfGamma at the poles.
cplx gamma_complex(cplx z);

/// Whittaker W_{kappa,mu}(y), y > 0, to ~1e-9 relative. Strategy:
///  - terminating asymptotic sum when kappa -+ mu - 1/2 is a nonnegative
///    integer (exact closed form, covers the holomorphic degenerations),
///  - the divergent asymptotic series when it reaches the tolerance first,
///  - otherwise the Gamma-integral representation at down-shifted kappa0
///    (Re(mu - kappa0 + 1/2) >= 1/2) and the three-term recurrence in kappa.
cplx whittaker_w(cplx kappa, cplx mu, double y, double tol = 1e-11);

} // namespace gsp4

#endif
