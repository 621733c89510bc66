#ifndef GSP4_QUADRATURE_HPP
#define GSP4_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "gsp4/mat.hpp"
#include "gsp4/parallel.hpp"

namespace gsp4 {

/// tanh-sinh (double exponential) rule on (a,b); level doubles node density
/// until successive estimates agree to tol (abs+rel). Integrand may be complex.
cplx tanh_sinh(const std::function<cplx(double)>& f, double a, double b, double tol = 1e-10,
               int max_level = 12);

struct GaussRule {
  std::vector<double> x;  // nodes on (-1,1)
  std::vector<double> w;
};
/// Gauss-Legendre nodes computed once by Newton on the Legendre recurrence.
const GaussRule& gauss_rule(int n);

cplx gauss_panel(const std::function<cplx(double)>& f, double a, double b, int n = 16);

/// Composite rule on geometrically spaced panels [a*r^i, a*r^{i+1}] up to b.
/// Deterministic partition; panels evaluate in parallel and sum in order.
cplx log_panels(const std::function<cplx(double)>& f, double a, double b, int panels, int order,
                Exec mode = Exec::parallel);

} // namespace gsp4

#endif
