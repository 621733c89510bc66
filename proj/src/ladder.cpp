#include <cmath>

#include "gsp4/bessel.hpp"
#include "gsp4/lie_derivative.hpp"

namespace gsp4 {

namespace {

struct StepResult {
  ChartJet f;
  std::vector<double> step_nplus;  // |N+ . B_{l,lp+2k}| per step
};

StepResult run_ladder(const ChartJetContext& ctx, int l, int lp, int m, cplx s, int k,
                      bool collect_residuals) {
  StepResult out{b0_chart_jet(ctx.point(), ctx.order(), l, lp, m, s), {}};
  for (int step = 1; step <= k; ++step) {
    int lpc = lp + 2 * (step - 1);
    double alpha = double(l - lp - 2 * step + 2);
    ChartJet u1 = apply_op(OpTag::P0plus, ctx, out.f, l, lpc, s, m);
    ChartJet v1 = apply_op(OpTag::Nplus, ctx, u1, l, lpc + 2, s, m);
    ChartJet w1 = apply_op(OpTag::Nminus, ctx, v1, l + 1, lpc + 1, s, m);
    ChartJet v2 = apply_op(OpTag::Nplus, ctx, v1, l + 1, lpc + 1, s, m);
    ChartJet w2 = apply_op(OpTag::Nminus, ctx, v2, l + 2, lpc, s, m);
    ChartJet w3 = apply_op(OpTag::Nminus, ctx, w2, l + 1, lpc + 1, s, m);
    out.f = u1 + (1.0 / alpha) * w1 + (1.0 / (2.0 * alpha * (alpha + 1.0))) * w3;
    if (collect_residuals) {
      ChartJet chk = apply_op(OpTag::Nplus, ctx, out.f, l, lpc + 2, s, m);
      out.step_nplus.push_back(std::abs(chk.value()));
    }
  }
  return out;
}

} // namespace

Ladder::Ladder(int l, int lp, int m, cplx s, int target_k, const Tolerances& tol)
    : l_(l), lp_(lp), m_(m), k_(target_k), s_(s), tol_(tol) {
  if (!exists_dimension(l, lp, m)) throw NotRepresentable("ladder needs an existing B0");
  if (target_k < 0 || 2 * target_k > l - lp)
    throw InvalidWeights("ladder target beyond (l-lp)/2");
  if (order_budget() > ChartJet::kMaxOrder)
    throw JetOrderExhausted("ladder order budget exceeds the jet cap");
}

LadderValue Ladder::eval(double lambda, double zeta, double phi1, double phi2) const {
  ChartPoint p{Flavor::nonsplit, lambda, zeta, phi1, phi2};
  ChartJetContext ctx(p, order_budget(), tol_);
  StepResult r = run_ladder(ctx, l_, lp_, m_, s_, k_, false);
  LadderValue v;
  v.value = r.f.value();
  v.nplus = apply_op(OpTag::Nplus, ctx, r.f, l_, lp_ + 2 * k_, s_, m_).value();
  v.scale = std::abs(v.value);
  return v;
}

std::vector<double> Ladder::nplus_residuals(double lambda, double zeta, double phi1,
                                            double phi2) const {
  ChartPoint p{Flavor::nonsplit, lambda, zeta, phi1, phi2};
  ChartJetContext ctx(p, order_budget(), tol_);
  return run_ladder(ctx, l_, lp_, m_, s_, k_, true).step_nplus;
}

cplx ladder1_global(const GroupElement& g, int l, int lp, int m, cplx s) {
  B0Global b0{l, lp, m, s};
  double alpha = double(l - lp);
  using T = CplxTag;
  cplx t1 = lie_derivative(b0, g.m, std::vector<T>{T::P0plus});
  cplx t2 = lie_derivative(b0, g.m, std::vector<T>{T::Nminus, T::Nplus, T::P0plus});
  cplx t3 = lie_derivative(
      b0, g.m, std::vector<T>{T::Nminus, T::Nminus, T::Nplus, T::Nplus, T::P0plus});
  return t1 + t2 / alpha + t3 / (2.0 * alpha * (alpha + 1.0));
}

cplx ladder1_global_derivative(const GroupElement& g, CplxTag L, int l, int lp, int m, cplx s) {
  B0Global b0{l, lp, m, s};
  double alpha = double(l - lp);
  using T = CplxTag;
  cplx t1 = lie_derivative(b0, g.m, std::vector<T>{L, T::P0plus});
  cplx t2 = lie_derivative(b0, g.m, std::vector<T>{L, T::Nminus, T::Nplus, T::P0plus});
  cplx t3 = lie_derivative(
      b0, g.m, std::vector<T>{L, T::Nminus, T::Nminus, T::Nplus, T::Nplus, T::P0plus});
  return t1 + t2 / alpha + t3 / (2.0 * alpha * (alpha + 1.0));
}

namespace {

// real symmetric Jacobi eigenvalues, for the small Gram systems
std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = int(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double cth = 1.0 / std::sqrt(t * t + 1), sth = t * cth;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = cth * akp - sth * akq;
          a[k][q] = sth * akp + cth * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = cth * apk - sth * aqk;
          a[q][k] = sth * apk + cth * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

} // namespace

GramReport linear_independence_check(int l, int lp, int m, cplx s,
                                     const std::vector<std::vector<OpTag>>& words) {
  // fixed 40-point chart sample away from the formula poles
  std::vector<ChartPoint> pts;
  const double lams[4] = {0.6, 0.85, 1.1, 1.35};
  const double zets[3] = {1.2, 1.45, 1.7};
  const double phis[3][2] = {{0.12, 0.08}, {-0.21, 0.17}, {0.3, -0.12}};
  for (double lam : lams)
    for (double zet : zets)
      for (auto& ph : phis) pts.push_back({Flavor::nonsplit, lam, zet, ph[0], ph[1]});
  pts.push_back({Flavor::nonsplit, 0.7, 1.3, -0.05, 0.22});
  pts.push_back({Flavor::nonsplit, 1.2, 1.55, 0.18, -0.2});
  pts.push_back({Flavor::nonsplit, 0.95, 1.25, -0.3, -0.09});
  pts.push_back({Flavor::nonsplit, 1.05, 1.65, 0.07, 0.13});

  const int nw = int(words.size());
  std::vector<std::vector<cplx>> V(nw, std::vector<cplx>(pts.size()));
  int maxlen = 0;
  for (auto& w : words) maxlen = std::max(maxlen, int(w.size()));
  if (maxlen > ChartJet::kMaxOrder) throw JetOrderExhausted("word longer than the jet cap");

  for (std::size_t ip = 0; ip < pts.size(); ++ip) {
    ChartJetContext ctx(pts[ip], maxlen);
    ChartJet b0 = b0_chart_jet(pts[ip], maxlen, l, lp, m, s);
    for (int iw = 0; iw < nw; ++iw) {
      ChartJet f = b0;
      int lc = l, lpc = lp;
      for (auto it = words[iw].rbegin(); it != words[iw].rend(); ++it) {
        f = apply_op(*it, ctx, f, lc, lpc, s, m);
        auto rt = op_root(*it);
        lc += rt.first;
        lpc += rt.second;
      }
      V[iw][ip] = f.value();
    }
  }
  // row-normalize, then Gram
  for (int iw = 0; iw < nw; ++iw) {
    double n2 = 0;
    for (auto& v : V[iw]) n2 += std::norm(v);
    double inv = n2 > 0 ? 1.0 / std::sqrt(n2) : 1.0;
    for (auto& v : V[iw]) v *= inv;
  }
  std::vector<std::vector<cplx>> G(nw, std::vector<cplx>(nw));
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) {
      cplx sgm = 0;
      for (std::size_t ip = 0; ip < pts.size(); ++ip) sgm += V[i][ip] * std::conj(V[j][ip]);
      G[i][j] = sgm;
    }
  // Hermitian G -> real embedding [[Re, -Im],[Im, Re]]; eigenvalues doubled
  std::vector<std::vector<double>> E(2 * nw, std::vector<double>(2 * nw));
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) {
      E[i][j] = G[i][j].real();
      E[i][j + nw] = -G[i][j].imag();
      E[i + nw][j] = G[i][j].imag();
      E[i + nw][j + nw] = G[i][j].real();
    }
  std::vector<double> ev = sym_eigenvalues(E);
  GramReport rep;
  for (int i = 0; i < nw; ++i) rep.singular_values.push_back(std::abs(ev[std::size_t(2 * i)]));
  rep.smax = rep.singular_values.front();
  rep.smin = rep.singular_values.back();
  rep.independent = rep.smin > 1e-6 * rep.smax;
  return rep;
}

} // namespace gsp4
