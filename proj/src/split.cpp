#include "gsp4/split.hpp"

#include <cmath>

namespace gsp4 {

namespace {

template <class T>
T split_base1(const T& zeta, const T& p1, const T& p2) {
  using std::cos;
  using std::sin;
  const cplx i(0, 1);
  return cos(p2) * (cos(p1) - zeta * sin(p1)) + i * ((zeta * cos(p1) + sin(p1)) * sin(p2));
}
template <class T>
T split_base2(const T& p1, const T& p2) {
  using std::cos;
  using std::sin;
  const cplx i(0, 1);
  return sin(p1) * cos(p2) - i * (cos(p1) * sin(p2));
}

// a vanishing base is a zero of f when its exponent has positive real part,
// a genuine singularity otherwise
void check_bases(const ChartPoint& p, int l, int lp, cplx s1, cplx s2) {
  cplx b1 = split_base1<cplx>(p.zeta, p.phi1, p.phi2);
  cplx b2 = split_base2<cplx>(cplx(p.phi1), cplx(p.phi2));
  cplx e1 = 0.5 * (cplx(l - lp) + s1 - s2), e2 = 0.5 * (cplx(l - lp) - s1 + s2);
  if (std::abs(b1) < 1e-14 && e1 != 0.0 && e1.real() <= 0.0)
    throw SingularBase("split base1 vanishes");
  if (std::abs(b2) < 1e-14 && e2 != 0.0 && e2.real() <= 0.0)
    throw SingularBase("split base2 vanishes");
}

} // namespace

cplx f_split(const ChartPoint& p, int l, int lp, cplx s1, cplx s2) {
  check_bases(p, l, lp, s1, s2);
  if (p.lambda <= 0) throw SingularBase("f_split closed form is the lambda>0 branch");
  cplx b1 = split_base1<cplx>(p.zeta, p.phi1, p.phi2);
  cplx b2 = split_base2<cplx>(cplx(p.phi1), cplx(p.phi2));
  cplx e1 = 0.5 * (cplx(l - lp) + s1 - s2), e2 = 0.5 * (cplx(l - lp) - s1 + s2);
  cplx e3 = 0.5 * (cplx(l + lp) + s1 + s2);
  if ((std::abs(b1) < 1e-14 && e1 != 0.0) || (std::abs(b2) < 1e-14 && e2 != 0.0))
    return 0.0;  // positive-exponent zero (check_bases rejected the rest)
  cplx v = std::pow(b1, e1) * std::pow(b2, e2);
  return v * std::pow(cplx(p.lambda), e3) * std::exp(4.0 * M_PI * p.lambda * p.zeta);
}

LogValue f_split_log(const ChartPoint& p, int l, int lp, cplx s1, cplx s2) {
  check_bases(p, l, lp, s1, s2);
  cplx b1 = split_base1<cplx>(p.zeta, p.phi1, p.phi2);
  cplx b2 = split_base2<cplx>(cplx(p.phi1), cplx(p.phi2));
  cplx e1 = 0.5 * (cplx(l - lp) + s1 - s2), e2 = 0.5 * (cplx(l - lp) - s1 + s2);
  cplx e3 = 0.5 * (cplx(l + lp) + s1 + s2);
  double lam = std::abs(p.lambda);
  cplx lg = e1 * std::log(b1) + e2 * std::log(b2) + e3 * std::log(cplx(lam)) +
            4.0 * M_PI * p.lambda * p.zeta;
  return {lg.real(), lg.imag()};
}

ChartJet f_split_chart_jet(const ChartPoint& p, int order, int l, int lp, cplx s1, cplx s2) {
  check_bases(p, l, lp, s1, s2);
  if (p.lambda <= 0) throw SingularBase("f_split jet is the lambda>0 branch");
  ChartJet lam = ChartJet::variable(order, 0, p.lambda);
  ChartJet zet = ChartJet::variable(order, 1, p.zeta);
  ChartJet f1 = ChartJet::variable(order, 2, p.phi1);
  ChartJet f2 = ChartJet::variable(order, 3, p.phi2);
  ChartJet b1 = split_base1<ChartJet>(zet, f1, f2);
  ChartJet b2 = split_base2<ChartJet>(f1, f2);
  cplx e1 = 0.5 * (cplx(l - lp) + s1 - s2), e2 = 0.5 * (cplx(l - lp) - s1 + s2);
  cplx e3 = 0.5 * (cplx(l + lp) + s1 + s2);
  return pow(b1, e1) * pow(b2, e2) * pow(lam, e3) * exp(cplx(4.0 * M_PI) * (lam * zet));
}

std::array<cplx, 4> pde_residuals_split_f(const ChartJet& f, const ChartPoint& p, int l, int lp,
                                          cplx s1, cplx s2) {
  const cplx i(0, 1);
  double z = p.zeta;
  double sp1 = std::sin(p.phi1), cp1 = std::cos(p.phi1);
  double sp2 = std::sin(p.phi2), cp2 = std::cos(p.phi2);
  double s1f = std::sin(2 * p.phi1), c1f = std::cos(2 * p.phi1);
  double s2f = std::sin(2 * p.phi2), c2f = std::cos(2 * p.phi2);
  cplx den2 = 2.0 * cplx(cp2 * (cp1 - z * sp1), (z * cp1 + sp1) * sp2);
  cplx dphi = z * c2f + c1f * cplx(-z, s2f) - s1f * cplx(1.0, z * s2f);
  if (std::abs(den2) < 1e-12 || std::abs(dphi) < 1e-12)
    throw ChartSingularity("split pde denominator ~ 0");
  cplx f0 = f.value();
  cplx dl = f.partial(0).value(), dz = f.partial(1).value();
  cplx d1 = f.partial(2).value(), d2 = f.partial(3).value();
  std::array<cplx, 4> r;
  r[0] = dl - ((cplx(l + lp) + s1 + s2) / (2.0 * p.lambda) + 4.0 * M_PI * z) * f0;
  r[1] = dz - (4.0 * M_PI * p.lambda -
               (cplx(l - lp) + s1 - s2) * cplx(cp2 * sp1, -cp1 * sp2) / den2) *
                  f0;
  r[2] = d1 - (((s1 - s2) * c2f +
                double(l - lp) * cplx(z * s1f - c1f, -s2f * (s1f + z * c1f))) /
               dphi) *
                  f0;
  r[3] = d2 - ((-i * (s1 - s2) +
                double(l - lp) * cplx(-z * s2f, c2f * (c1f - z * s1f))) /
               dphi) *
                  f0;
  return r;
}

std::array<cplx, 4> pde_residuals_split(const ChartPoint& p, int l, int lp, cplx s1, cplx s2) {
  return pde_residuals_split_f(f_split_chart_jet(p, 1, l, lp, s1, s2), p, l, lp, s1, s2);
}

namespace {

template <class T>
struct SplitElems {
  T lambda, zeta, s1, c1, s2, c2, t2, inv_c2;
};

template <class T>
struct SplitCoeffs {
  T cf, cdl, cdz, cd1, cd2;
};

template <class T>
SplitCoeffs<T> split_coeffs_impl(OpTag op, const SplitElems<T>& e, int l, int lp, cplx sa,
                                 cplx sb) {
  const cplx i(0, 1);
  const double pi = M_PI;
  SplitCoeffs<T> r{e.c2 * cplx(0.0), e.c2 * cplx(0.0), e.c2 * cplx(0.0), e.c2 * cplx(0.0),
                   e.c2 * cplx(0.0)};
  switch (op) {
    case OpTag::Nplus:
    case OpTag::Nminus: {
      double sg = (op == OpTag::Nplus) ? 1.0 : -1.0;
      r.cf = (0.5 * i * double(lp - l)) * e.t2;
      r.cd1 = 0.5 * e.inv_c2;
      r.cd2 = (-sg * 0.5 * i) * (e.c2 * e.inv_c2);
      return r;
    }
    case OpTag::Xplus:
    case OpTag::Xminus: {
      double sg = (op == OpTag::Xplus) ? 1.0 : -1.0;
      T quart = 1.0 - 0.5 * (e.s2 * e.s2);
      r.cf = (0.25 * (sa - sb)) * (e.c1 + (sg * i) * (e.s1 * e.s2)) - (0.25 * (sa + sb)) * e.c2 +
             (sg * 0.5 * l) * (quart * e.inv_c2) - (sg * 0.25 * lp) * (e.s2 * e.t2) +
             (2.0 * pi * i) *
                 (e.lambda * ((e.c1 - e.zeta * e.s1) * e.s2 +
                              (sg * i) * (e.zeta * e.c1 - e.zeta * e.c2 + e.s1)));
      r.cdl = 0.5 * (e.c2 * e.lambda);
      r.cdz = 0.5 * (-(e.zeta * e.c1) - e.s1 + (sg * i) * (e.s2 * (e.c1 - e.zeta * e.s1)));
      r.cd1 = 0.25 * e.s1 - (sg * 0.25 * i) * ((e.c1 * e.c2 - 1.0) * e.t2);
      r.cd2 = 0.25 * e.s2;
      return r;
    }
    case OpTag::P1plus:
    case OpTag::P1minus: {
      double sg = (op == OpTag::P1plus) ? 1.0 : -1.0;
      r.cf = (0.5 * (sa - sb)) * (e.s1 * e.c2) - (sg * 0.5 * i * (sa + sb)) * e.s2 +
             (0.5 * i * double(l + lp)) * e.s2 -
             (4.0 * pi * i) *
                 (e.lambda * ((sg * i) * (e.c2 * (e.c1 - e.zeta * e.s1)) - e.zeta * e.s2));
      r.cdl = (sg * i) * (e.s2 * e.lambda);
      r.cdz = e.c2 * (e.c1 - e.zeta * e.s1);
      r.cd1 = -0.5 * (e.c1 * e.c2);
      r.cd2 = (-sg * 0.5 * i) * e.c2;
      return r;
    }
    case OpTag::P0plus:
    case OpTag::P0minus: {
      double sg = (op == OpTag::P0plus) ? 1.0 : -1.0;
      T quart = 1.0 - 0.5 * (e.s2 * e.s2);
      r.cf = (0.25 * (sa - sb)) * (-e.c1 + (sg * i) * (e.s1 * e.s2)) - (0.25 * (sa + sb)) * e.c2 -
             (sg * 0.25 * l) * (e.s2 * e.t2) + (sg * 0.5 * lp) * (quart * e.inv_c2) +
             (2.0 * pi * i) *
                 (e.lambda * ((e.c1 - e.zeta * e.s1) * e.s2 -
                              (sg * i) * (e.zeta * e.c1 + e.zeta * e.c2 + e.s1)));
      r.cdl = 0.5 * (e.c2 * e.lambda);
      r.cdz = 0.5 * ((e.zeta * e.c1) + e.s1 + (sg * i) * ((e.c1 - e.zeta * e.s1) * e.s2));
      r.cd1 = -(0.25 * e.s1 + (sg * 0.25 * i) * ((1.0 + e.c1 * e.c2) * e.t2));
      r.cd2 = 0.25 * e.s2;
      return r;
    }
  }
  return r;
}

SplitElems<cplx> split_scalar_elems(const ChartPoint& p) {
  SplitElems<cplx> e;
  e.lambda = p.lambda;
  e.zeta = p.zeta;
  e.s1 = std::sin(2 * p.phi1);
  e.c1 = std::cos(2 * p.phi1);
  e.s2 = std::sin(2 * p.phi2);
  e.c2 = std::cos(2 * p.phi2);
  e.t2 = e.s2 / e.c2;
  e.inv_c2 = 1.0 / e.c2;
  return e;
}

} // namespace

cplx operator_rhs_split(OpTag op, const ChartPoint& p, const FJet1& fj, int l, int lp, cplx s1,
                        cplx s2) {
  if (std::abs(std::cos(2 * p.phi2)) < 1e-9) throw ChartSingularity("cos(2 phi2) ~ 0");
  SplitCoeffs<cplx> c = split_coeffs_impl<cplx>(op, split_scalar_elems(p), l, lp, s1, s2);
  return c.cf * fj.f + c.cdl * fj.dl + c.cdz * fj.dz + c.cd1 * fj.d1 + c.cd2 * fj.d2;
}

SplitJetContext::SplitJetContext(const ChartPoint& p, int order) : p_(p), order_(order) {
  if (order > ChartJet::kMaxOrder) throw JetOrderExhausted("chart-jet order budget exceeds cap");
  if (std::abs(std::cos(2 * p.phi2)) < 1e-9) throw ChartSingularity("cos(2 phi2) ~ 0");
  lambda = ChartJet::variable(order, 0, p.lambda);
  zeta = ChartJet::variable(order, 1, p.zeta);
  ChartJet f1 = ChartJet::variable(order, 2, p.phi1);
  ChartJet f2 = ChartJet::variable(order, 3, p.phi2);
  s2f1 = sin(2.0 * f1);
  c2f1 = cos(2.0 * f1);
  s2f2 = sin(2.0 * f2);
  c2f2 = cos(2.0 * f2);
  inv_c2f2 = inv(c2f2);
  tan2f2 = s2f2 * inv_c2f2;
}

ChartJet apply_op_split(OpTag op, const SplitJetContext& ctx, const ChartJet& f, int l, int lp,
                        cplx s1, cplx s2) {
  SplitElems<ChartJet> e{ctx.lambda, ctx.zeta, ctx.s2f1, ctx.c2f1, ctx.s2f2, ctx.c2f2,
                         ctx.tan2f2, ctx.inv_c2f2};
  SplitCoeffs<ChartJet> c = split_coeffs_impl<ChartJet>(op, e, l, lp, s1, s2);
  return c.cf * f + c.cdl * f.partial(0) + c.cdz * f.partial(1) + c.cd1 * f.partial(2) +
         c.cd2 * f.partial(3);
}

GrowthReport growth_violation(int l, int lp, cplx s1, cplx s2, double beta_max, double phi1_star,
                              double phi2_star, bool negative_branch) {
  GrowthReport rep;
  const int npts = 25;
  for (int ib = 0; ib < npts; ++ib)
    rep.ts.push_back(std::pow(10.0, 3.0 * ib / (npts - 1)));
  for (double t : rep.ts) {
    ChartPoint p{Flavor::split, negative_branch ? -t : t, negative_branch ? -t : t, phi1_star,
                 phi2_star};
    rep.log_f.push_back(f_split_log(p, l, lp, s1, s2).log_abs);
    rep.log_norm.push_back(std::log(group_norm(chart_element(p))));
  }
  std::vector<double> betas = {1, 5, 10, 20, beta_max};
  rep.all_diverge = true;
  for (double b : betas) {
    GrowthRow row;
    row.beta = b;
    std::vector<double> gap(rep.ts.size());
    for (std::size_t i = 0; i < rep.ts.size(); ++i) gap[i] = rep.log_f[i] - b * rep.log_norm[i];
    row.final_gap = gap.back();
    row.eventually_increasing = true;
    for (std::size_t i = gap.size() - 5; i + 1 < gap.size(); ++i)
      row.eventually_increasing = row.eventually_increasing && gap[i + 1] > gap[i];
    row.exceeds_threshold = row.final_gap > 1e3;
    rep.all_diverge = rep.all_diverge && row.eventually_increasing && row.exceeds_threshold;
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace gsp4
