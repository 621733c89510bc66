#ifndef GSP4_ZETA_HPP
#define GSP4_ZETA_HPP

#include <map>
#include <vector>

#include "gsp4/bessel.hpp"
#include "gsp4/config.hpp"
#include "gsp4/mat.hpp"
#include "gsp4/parallel.hpp"

namespace gsp4 {

/// Inputs of the archimedean integral Z_infty(s).
struct ZetaParams {
  int l = 10;      // even, >= n
  int n = 3;       // odd, 3..9
  int D = 4;       // positive, D = 0 or 3 mod 4
  cplx s{1.0};
  cplx r{2.0};     // spectral parameter; holomorphic case r = -i(l2-1)
  cplx c1{1.0};    // first Fourier coefficient, free input
};

/// Coefficients c_{k,j}, 0 <= j <= floor((n-1)/4), 2j <= k <= (n-1)/2.
struct CkjTable {
  int n = 3;
  std::map<std::pair<int, int>, double> c;  // (k,j) -> coefficient
  double at(int k, int j) const { return c.at({k, j}); }
};

/// Index pairs in the fixed (j ascending, k ascending) order.
std::vector<std::pair<int, int>> ckj_indices(int n);

/// Convergence of int_0^inf int_1^inf z^a (z^2-z^-2)^b (z^2+z^-2)^g l^d
/// e^{-4 pi l (z^2+z^-2)} dz dl: d > -1 and a + 2(b+g) < 2d + 1.
bool convergence_predicate(double alpha, int beta, int gamma, double delta);

/// Q_{k,j}(s) rational factor.
cplx q_kj(cplx s, int k, int j, int l, cplx r);

/// Closed form of Z_infty^{k,j}(s).
cplx z_kj_closed(cplx s, int k, int j, const ZetaParams& params);

/// The double integral for Z_infty^{k,j}(s) by panel quadrature (the oracle
/// side of the closed form). Throws DivergentRegion outside the convergent
/// region, QuadratureNotConverged when refinement stalls.
cplx z_kj_quadrature(cplx s, int k, int j, const ZetaParams& params, double tol = 1e-8,
                     Exec mode = Exec::parallel);

/// Reference coefficient tables for n = 3,5,7,9 (expansions of
/// the closed B_{l,l} forms).
CkjTable closed_ckj_table(int l, int n);

/// Least-squares fit of ladder output B_{l,l}(h(lambda,zeta,0,0)) e^{+4 pi
/// lambda x} against the monomials lambda^{l-k} x^{k-2j}. Throws ShapeMismatch
/// if the fit residual exceeds tol.fit_residual. ratio_to_closed reports the
/// single proportionality constant against closed_ckj_table.
struct ExtractResult {
  CkjTable fitted;
  CkjTable closed;
  double fit_residual = 0;   // relative, over the sample grid
  double ratio_to_closed = 1; // median of fitted/closed entries
};
ExtractResult extract_ckj(int l, int n, const Tolerances& tol = default_tol());

/// Z_infty(s) assembled from a coefficient table.
cplx z_infinity(cplx s, const ZetaParams& params, const CkjTable& table);

/// L^p classification of B0 along the coset measure. The numeric evidence is
/// the sequence of partial integrals at geometric zeta-cutoffs: convergent
/// integrals have geometrically shrinking per-cutoff contributions (and, away
/// from the boundary, a plateau within 1e-6), divergent ones keep growing.
struct LpReport {
  bool convergent = false;          // analytic classification
  std::vector<double> partials;     // partial integrals at growing cutoffs
  bool plateau = false;             // last two partials agree to 1e-6 relative
  bool numeric_consistent = false;  // contribution-ratio classification agrees
};
LpReport lp_norm_check(int l, int lp, int m, double p);

/// Ladder-word specification of a Bessel vector for scalar products.
struct BesselSpec {
  int l = 4, lp = 3, m = 1;
  cplx s{0.0};
  std::vector<OpTag> word;  // applied right-to-left to B0
};

struct ScalarProductResult {
  bool divergent = false;
  cplx value{0.0};
};
/// Numeric int B1 conj(B2) against the coset measure when l1'+l2' > 4;
/// classified Divergent otherwise.
ScalarProductResult scalar_product(const BesselSpec& b1, const BesselSpec& b2);

} // namespace gsp4

#endif
