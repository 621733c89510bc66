#ifndef GSP4_SPLIT_HPP
#define GSP4_SPLIT_HPP

#include <array>
#include <vector>

#include "gsp4/bessel.hpp"
#include "gsp4/chart_jet.hpp"
#include "gsp4/group.hpp"

namespace gsp4 {

/// Character of the split torus: Lambda(t0 diag(a,b) t0^{-1}) = a^{s1} b^{s2}.
struct SplitCharacter {
  cplx s1{0.0}, s2{0.0};
};

/// Formal solution of the split system on the lambda>0 branch:
///   base1^{(l-l'+s1-s2)/2} base2^{(l-l'-s1+s2)/2} lambda^{(l+l'+s1+s2)/2} e^{4 pi lambda zeta},
/// base1 = cos(phi2)(cos(phi1)-zeta sin(phi1)) + i (zeta cos(phi1)+sin(phi1)) sin(phi2),
/// base2 = sin(phi1)cos(phi2) - i cos(phi1) sin(phi2).
cplx f_split(const ChartPoint& p, int l, int lp, cplx s1, cplx s2);

/// (log|f|, arg f); survives lambda*zeta >> 1. lambda<0 evaluates the
/// (-lambda)^... branch with the same angular part.
struct LogValue {
  double log_abs;
  double arg;
};
LogValue f_split_log(const ChartPoint& p, int l, int lp, cplx s1, cplx s2);

ChartJet f_split_chart_jet(const ChartPoint& p, int order, int l, int lp, cplx s1, cplx s2);

/// Residuals of the four split PDEs for a caller-supplied order>=1 jet.
std::array<cplx, 4> pde_residuals_split_f(const ChartJet& f, const ChartPoint& p, int l, int lp,
                                          cplx s1, cplx s2);
std::array<cplx, 4> pde_residuals_split(const ChartPoint& p, int l, int lp, cplx s1, cplx s2);

cplx operator_rhs_split(OpTag op, const ChartPoint& p, const FJet1& fj, int l, int lp, cplx s1,
                        cplx s2);

/// Split analogue of ChartJetContext/apply_op.
class SplitJetContext {
public:
  SplitJetContext(const ChartPoint& p, int order);
  const ChartPoint& point() const { return p_; }
  int order() const { return order_; }
  ChartJet lambda, zeta, s2f1, c2f1, s2f2, c2f2, tan2f2, inv_c2f2;

private:
  ChartPoint p_;
  int order_;
};

ChartJet apply_op_split(OpTag op, const SplitJetContext& ctx, const ChartJet& f, int l, int lp,
                        cplx s1, cplx s2);

/// Moderate-growth violation witness along the ray (lambda,zeta) = (t,t).
struct GrowthRow {
  double beta;
  double final_gap;        // log|f| - beta log||h(t,t)|| at the last t
  bool eventually_increasing;
  bool exceeds_threshold;  // final_gap > 1e3
};
struct GrowthReport {
  std::vector<GrowthRow> rows;
  std::vector<double> ts;
  std::vector<double> log_f;
  std::vector<double> log_norm;
  bool all_diverge = false;
};
GrowthReport growth_violation(int l, int lp, cplx s1, cplx s2, double beta_max,
                              double phi1_star = M_PI / 4, double phi2_star = M_PI / 8,
                              bool negative_branch = false);

} // namespace gsp4

#endif
