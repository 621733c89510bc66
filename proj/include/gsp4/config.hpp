#ifndef GSP4_CONFIG_HPP
#define GSP4_CONFIG_HPP

namespace gsp4 {

/// Central tolerance record. Defaults match the per-operation contracts;
/// callers may tighten or relax individual fields.
struct Tolerances {
  double similitude = 1e-12;      // ||tgJg - mu J|| <= similitude * ||g||^2
  double coset_residual = 1e-9;   // relative Frobenius error of reassembly
  double newton_stop = 1e-13;     // Newton termination on relative residual
  int newton_max_iter = 50;
  double newton_damping = 0.5;    // step shrink factor on residual increase
  double chart_guard = 0.05;      // keep-out band around zeta=1, cos(2 phi2)=0
  double quadrature = 1e-8;       // abs+rel target for zeta quadrature
  double fit_residual = 1e-7;     // shape-fit certification threshold
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

} // namespace gsp4

#endif
