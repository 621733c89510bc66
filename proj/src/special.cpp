#include "gsp4/special.hpp"

#include <cmath>

#include "gsp4/errors.hpp"
#include "gsp4/quadrature.hpp"

namespace gsp4 {

cplx gamma_complex(cplx z) {
  // Godfrey's coefficients for g = 607/128, n = 15
  static const double g = 607.0 / 128.0;
  static const double c[15] = {
      0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
      14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
      -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};
  if (z.real() < 0.5) {
    // reflection; poles at non-positive integers
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
      throw PoleOfGamma("Gamma pole at non-positive integer");
    cplx s = std::sin(M_PI * z);
    if (std::abs(s) == 0.0) throw PoleOfGamma("Gamma pole");
    return M_PI / (s * gamma_complex(1.0 - z));
  }
  cplx zz = z - 1.0;
  cplx sum = c[0];
  for (int i = 1; i < 15; ++i) sum += c[i] / (zz + double(i));
  cplx t = zz + g + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, zz + 0.5) * std::exp(-t) * sum;
}

namespace {

bool nearly_nonneg_int(cplx v, long& n) {
  if (std::abs(v.imag()) > 1e-12) return false;
  double r = v.real();
  long k = std::lround(r);
  if (k < 0 || std::abs(r - double(k)) > 1e-10) return false;
  n = k;
  return true;
}

/// e^{-y/2} y^kappa sum_{k<=n} a_k y^{-k}; exact when the series terminates.
cplx w_asymptotic_terminating(cplx kappa, cplx mu, double y, long nterms) {
  cplx sum = 1.0, term = 1.0;
  for (long k = 1; k <= nterms; ++k) {
    cplx factor = (mu * mu - (kappa - double(k) + 0.5) * (kappa - double(k) + 0.5)) /
                  (double(k) * y);
    term *= factor;
    sum += term;
  }
  return std::exp(-0.5 * y) * std::pow(cplx(y), kappa) * sum;
}

bool w_asymptotic(cplx kappa, cplx mu, double y, double tol, cplx& out) {
  cplx sum = 1.0, term = 1.0;
  double prev = 1.0;
  for (int k = 1; k <= 200; ++k) {
    cplx factor = (mu * mu - (kappa - double(k) + 0.5) * (kappa - double(k) + 0.5)) /
                  (double(k) * y);
    term *= factor;
    double mag = std::abs(term);
    if (mag > prev) return false;  // series started diverging before tol
    sum += term;
    if (mag <= tol * std::abs(sum)) {
      out = std::exp(-0.5 * y) * std::pow(cplx(y), kappa) * sum;
      return true;
    }
    prev = mag;
  }
  return false;
}

/// Integral representation at a kappa with Re(mu - kappa + 1/2) >= 1/2:
/// W = e^{-y/2} y^kappa / Gamma(mu-kappa+1/2) * 2 int_0^inf u^{2(mu-kappa)}
///     (1+u^2/y)^{mu+kappa-1/2} e^{-u^2} du (t = u^2 substituted).
cplx w_integral(cplx kappa, cplx mu, double y) {
  cplx a = mu - kappa;
  cplx b = mu + kappa - 0.5;
  auto f = [&](double u) -> cplx {
    if (u <= 0.0) return 0.0;
    cplx up = std::pow(cplx(u), 2.0 * a);
    cplx geo = std::pow(cplx(1.0 + u * u / y), b);
    return up * geo * std::exp(-u * u);
  };
  cplx integral = tanh_sinh(f, 0.0, 8.5, 1e-13, 12);
  return std::exp(-0.5 * y) * std::pow(cplx(y), kappa) * 2.0 * integral /
         gamma_complex(a + 0.5);
}

} // namespace

cplx whittaker_w(cplx kappa, cplx mu, double y, double tol) {
  if (!(y > 0.0)) throw ParameterRegionUnsupported("whittaker_w needs y > 0");
  long n = 0;
  if (nearly_nonneg_int(kappa - mu - 0.5, n)) return w_asymptotic_terminating(kappa, mu, y, n);
  if (nearly_nonneg_int(kappa + mu - 0.5, n)) return w_asymptotic_terminating(kappa, mu, y, n);
  if (y >= 40.0) {
    cplx out;
    if (w_asymptotic(kappa, mu, y, std::min(tol, 1e-13), out)) return out;
  }
  // shift kappa down until the integral representation applies comfortably
  int shift = std::max(0, int(std::ceil(kappa.real() - mu.real())));
  cplx k0 = kappa - double(shift);
  if (shift == 0) return w_integral(kappa, mu, y);
  cplx wlo = w_integral(k0 - 1.0, mu, y);
  cplx whi = w_integral(k0, mu, y);
  for (int i = 0; i < shift; ++i) {
    cplx k = k0 + double(i);
    cplx wnext = (y - 2.0 * k) * whi - (k - mu - 0.5) * (k + mu - 0.5) * wlo;
    wlo = whi;
    whi = wnext;
  }
  return whi;
}

} // namespace gsp4
