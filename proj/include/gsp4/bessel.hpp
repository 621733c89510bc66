#ifndef GSP4_BESSEL_HPP
#define GSP4_BESSEL_HPP

#include <array>
#include <functional>
#include <vector>

#include "gsp4/chart_jet.hpp"
#include "gsp4/config.hpp"
#include "gsp4/group.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/multidual.hpp"

namespace gsp4 {

/// Character Lambda of C^x: gamma^s e^{i m delta}.
struct BesselCharacter {
  cplx s{0.0};
  int m = 0;
};

/// theta(u) = e^{2 pi i (a x + b y + c z)}, S = [[a, b/2],[b/2, c]].
struct ThetaChar {
  double a = 1, b = 0, c = 1;
};

struct WeightPair {
  int l = 1, lp = 1;
};

/// dim S(Lambda,theta,l,l'): 1 iff l+l'+m even and |m| <= l-l'.
int exists_dimension(int l, int lp, int m);

namespace detail {
template <class T>
T pow_i(const T& x, long n) {
  using gsp4::pow_int;
  return pow_int(x, n);
}
inline cplx pow_int(cplx x, long n) {
  if (n < 0) return 1.0 / pow_int(x, -n);
  cplx r = 1.0, b = x;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}
} // namespace detail

/// Angular factor c1 of B0, in its two equivalent closed forms.
/// Generic over scalar so the same expression feeds jets.
template <class T>
T c1_function(const T& zeta, const T& p1, const T& p2, int l, int lp, int m, int form) {
  using std::cos;
  using std::sin;
  using detail::pow_int;
  using gsp4::pow_int;
  const cplx i(0, 1);
  T zi = 1.0 / zeta;
  T cp1 = cos(p1), sp1 = sin(p1), cp2 = cos(p2), sp2 = sin(p2);
  T c2f1 = cos(2.0 * p1), s2f1 = sin(2.0 * p1), c2f2 = cos(2.0 * p2), s2f2 = sin(2.0 * p2);
  T base = (zeta * zeta - zi * zi) * (c2f1 + i * (s2f1 * s2f2)) + (zeta * zeta + zi * zi) * c2f2;
  if (form == 1) {
    T lin = zeta * (cp1 * cp2 + i * (sp1 * sp2)) + zi * (cp1 * sp2 + i * (sp1 * cp2));
    return pow_int(lin, m) * pow_int(base, (l - lp - m) / 2);
  }
  T lin = zeta * (cp1 * cp2 + i * (sp1 * sp2)) - zi * (cp1 * sp2 + i * (sp1 * cp2));
  return std::pow(2.0, double(-m)) * pow_int(lin, -m) * pow_int(base, (l - lp + m) / 2);
}

cplx c1(double zeta, double phi1, double phi2, int l, int lp, int m, int form = 1);

/// B0 on the chart: c1 * lambda^{(l+l'+s)/2} e^{-2 pi lambda (z^2+z^-2)} for
/// lambda > 0, identically 0 for lambda < 0.
cplx B0_coords(const ChartPoint& p, int l, int lp, int m, cplx s);

namespace detail {
inline double constant_real(double x) { return x; }
inline double constant_real(const cplx& x) { return x.real(); }
inline double constant_real(const MultiDual& x) { return x.value().real(); }
} // namespace detail

/// B0 on the whole group in the coordinate-free form of the existence proof,
/// normalized so it equals B0_coords on chart elements (for m < 0 this uses
/// the partner entry combination h44+h32+ih42-ih34 and a 2^{-m} factor).
template <class T>
T B0_global_m(const Mat4<T>& h, int l, int lp, int m, cplx s) {
  using std::exp;
  using std::pow;
  using detail::pow_int;
  using gsp4::pow_int;
  const cplx i(0, 1);
  T mu = multiplier_poly(h);
  if (detail::constant_real(mu) < 0.0) return mu * cplx(0.0);
  Mat2<T> ziI;
  ziI(0, 0) = T(i);
  ziI(1, 1) = T(i);
  T detj = det2(j_factor_m(h, ziI));
  T w = w_poly_m(h);
  T tr = siegel_trace(h, ziI);
  T expfac = exp((2.0 * M_PI * i) * tr);
  if (m >= 0) {
    T entry = h(3, 3) - h(2, 1) + i * h(3, 1) + i * h(2, 3);
    return pow(mu, cplx(lp) + 0.5 * s + cplx(0.5 * m)) * pow_int(detj, -l) *
           pow_int(w, (l - lp - m) / 2) * pow_int(entry, m) * expfac;
  }
  T entry = h(3, 3) + h(2, 1) + i * h(3, 1) - i * h(2, 3);
  return std::pow(2.0, double(-m)) * pow(mu, cplx(lp) + 0.5 * s - cplx(0.5 * m)) *
         pow_int(detj, -l) * pow_int(w, (l - lp + m) / 2) * pow_int(entry, -m) * expfac;
}

struct B0Global {
  int l = 2, lp = 2, m = 0;
  cplx s{0.0};
  template <class T>
  T operator()(const Mat4<T>& h) const {
    return B0_global_m<T>(h, l, lp, m, s);
  }
};

cplx B0_global(const GroupElement& g, int l, int lp, int m, cplx s);

/// The eight first-order operators of the non-split chart formulas.
enum class OpTag { Nplus, Nminus, Xplus, Xminus, P1plus, P1minus, P0plus, P0minus };
const char* op_name(OpTag t);
CplxTag op_to_cplx_tag(OpTag t);
/// Root of the operator: weight shift (dl, dlp) it applies.
std::pair<int, int> op_root(OpTag t);

/// Value and first partials of a chart function at a point.
struct FJet1 {
  cplx f{}, dl{}, dz{}, d1{}, d2{};
};

FJet1 b0_fjet1(const ChartPoint& p, int l, int lp, int m, cplx s);

/// Chart-coordinate operator action: the linear combination of f and its
/// partials. (l,lp) is the weight of the function being acted on.
cplx operator_rhs(OpTag op, const ChartPoint& p, const FJet1& fj, int l, int lp, cplx s, int m,
                  const Tolerances& tol = default_tol());

/// Residuals (LHS - RHS) of the four first-order PDEs satisfied by B0.
std::array<cplx, 4> pde_residuals(const ChartPoint& p, int l, int lp, int m, cplx s);
/// Same system applied to a caller-supplied order>=1 jet at p (detector tests).
std::array<cplx, 4> pde_residuals_f(const ChartJet& f, const ChartPoint& p, int l, int lp, int m,
                                    cplx s);
/// The lambda-free c1 subsystem; f is the c1 jet (or any candidate).
std::array<cplx, 3> c1_pde_residuals(const ChartJet& f, const ChartPoint& p, int l, int lp, int m);

/// Chart jet of B0 at p, to the requested total order.
ChartJet b0_chart_jet(const ChartPoint& p, int order, int l, int lp, int m, cplx s);

/// Cached elementary jets at a chart point; all operator applications and the
/// ladder share one of these.
class ChartJetContext {
public:
  ChartJetContext(const ChartPoint& p, int order, const Tolerances& tol = default_tol());
  const ChartPoint& point() const { return p_; }
  int order() const { return order_; }

  ChartJet lambda, zeta, s2f1, c2f1, s2f2, c2f2, tan2f2, inv_c2f2, zp, zm, inv_zm;

private:
  ChartPoint p_;
  int order_;
};

/// coefficient-of-partials view of one operator at the context point
struct OpCoeffsJet {
  ChartJet cf, cdl, cdz, cd1, cd2;
};
OpCoeffsJet op_coeffs_jet(OpTag op, const ChartJetContext& ctx, int l, int lp, cplx s, int m);

ChartJet apply_op(OpTag op, const ChartJetContext& ctx, const ChartJet& f, int l, int lp, cplx s,
                  int m);

/// One row of the Newton-vs-closed-form derivative table.
struct CoeffCheck {
  const char* name;
  double numeric;
  double closed_form;
  double deviation;
};
/// Central finite differences of coset_decompose(h(p) exp(tL)) against the
/// closed-form derivative lists (one list per real basis element).
std::vector<CoeffCheck> verify_coefficients(RealTag L, const ChartPoint& p, double h,
                                            const Tolerances& tol = default_tol());
/// The closed-form derivative values (gamma',delta',lambda',zeta',x',y',z',phi1'..phi4').
std::array<double, 11> coefficient_closed_forms(RealTag L, const ChartPoint& p);

using GroupFunction = std::function<cplx(const GroupElement&)>;

/// B'(g) = B(block(A, alpha^{-1} tA^{-1}) g); transports (Lambda,theta;S) to
/// (Lambda',theta'; S' = alpha tA S A).
GroupFunction change_of_model(GroupFunction B, const Mat2<double>& A, double alpha);
Mat2<double> transported_S(const Mat2<double>& S, const Mat2<double>& A, double alpha);

/// Btilde(g) = chi(mu2(g)) B(g), chi(x) = |x|^{e} sign(x)^{(1-sign)/2}.
GroupFunction twist(GroupFunction B, cplx chi_exponent, int chi_sign);

/// K-type ladder B_{l,l'} -> B_{l,l'+2k} via the recursive operator word
/// (P0+ + a^{-1} N- N+ P0+ + (2a(a+1))^{-1} N-^2 N+^2 P0+), a = l-l'-2k+2,
/// realized on chart jets.
struct LadderValue {
  cplx value;
  cplx nplus;            // N+ applied to the final vector at the point
  double scale;          // max |value| proxy used for relative residuals
};

class Ladder {
public:
  Ladder(int l, int lp, int m, cplx s, int target_k, const Tolerances& tol = default_tol());
  LadderValue eval(double lambda, double zeta, double phi1 = 0.0, double phi2 = 0.0) const;
  /// Per-step N+ residuals at the point (every intermediate is a highest
  /// weight vector).
  std::vector<double> nplus_residuals(double lambda, double zeta, double phi1 = 0.0,
                                      double phi2 = 0.0) const;
  WeightPair weight() const { return {l_, lp_ + 2 * k_}; }
  int order_budget() const { return 5 * k_ + 2; }
  int l() const { return l_; }
  int lp() const { return lp_; }
  int m() const { return m_; }
  cplx s() const { return s_; }
  int k() const { return k_; }

private:
  int l_, lp_, m_, k_;
  cplx s_;
  Tolerances tol_;
};

/// k=1 ladder vector evaluated on the group through AD words (for the
/// operator-formula oracle; word length stays within the multidual cap).
cplx ladder1_global(const GroupElement& g, int l, int lp, int m, cplx s);
/// L.(ladder1) through AD.
cplx ladder1_global_derivative(const GroupElement& g, CplxTag L, int l, int lp, int m, cplx s);

/// Closed forms for B_{l,l}(h(lambda,zeta,0,0)), n = 3,5,7,9
/// (l' = l-2, l-4, l-6, l-8), x = (zeta^2+zeta^{-2})/2. The n=3 case uses the
/// recursion-consistent sign/scale (the recursion reproduces n=5,7,9 exactly).
cplx closed_Bll(int l, int n, double lambda, double zeta);

/// Gram-based linear independence over a fixed 40-point chart sample.
struct GramReport {
  std::vector<double> singular_values;  // descending
  double smin = 0, smax = 0;
  bool independent = false;
};
GramReport linear_independence_check(int l, int lp, int m, cplx s,
                                     const std::vector<std::vector<OpTag>>& words);

/// Moderate-growth witness along diag(l z, l/z, 1/z, z): log-log fit of |B0|
/// against lambda*zeta over [1,10^3]^2.
struct GrowthWitness {
  double alpha = 0, beta = 0;      // fitted bound |B0| <= alpha (lambda zeta)^beta
  double max_log_violation = 0;    // max of log|B0| - (log alpha + beta log(lz))
};
GrowthWitness growth_witness(int l, int lp, int m, cplx s);

} // namespace gsp4

#endif
