#include "gsp4/zeta.hpp"

#include <cmath>

#include "gsp4/quadrature.hpp"
#include "gsp4/special.hpp"

namespace gsp4 {

std::vector<std::pair<int, int>> ckj_indices(int n) {
  std::vector<std::pair<int, int>> idx;
  for (int j = 0; j <= (n - 1) / 4; ++j)
    for (int k = 2 * j; k <= (n - 1) / 2; ++k) idx.push_back({k, j});
  return idx;
}

bool convergence_predicate(double alpha, int beta, int gamma, double delta) {
  return delta > -1.0 && alpha + 2.0 * (beta + gamma) < 2.0 * delta + 1.0;
}

cplx q_kj(cplx s, int k, int j, int l, cplx r) {
  cplx den = 6.0 * s + double(l - 2 * k - 1 + 2 * j);
  if (std::abs(den) < 1e-12) throw PoleOfQ("Q_{k,j} pole: 6s+l-2k-1+2j = 0");
  cplx prod = 1.0;
  const cplx ir2 = cplx(0, 0.5) * r;
  for (int t = 1; t <= k; ++t) {
    cplx d1 = 3.0 * s + double(l - t - 1) + ir2;
    cplx d2 = 3.0 * s + double(l - t - 1) - ir2;
    if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12) throw PoleOfQ("Q_{k,j} product pole");
    prod *= (3.0 * s + 0.5 * double(l) - 0.5 - double(t)) / (d1 * d2);
  }
  return std::pow(2.0, 3.0 * k) * std::pow(M_PI, double(k)) / den * prod;
}

cplx z_kj_closed(cplx s, int k, int j, const ZetaParams& p) {
  const cplx ir2 = cplx(0, 0.5) * p.r;
  cplx den = 6.0 * s + double(p.l - 2 * k - 1 + 2 * j);
  if (std::abs(den) < 1e-12) throw PoleOfQ("Z^{k,j} pole: 6s+l-2k-1+2j = 0");
  cplx gnum = gamma_complex(3.0 * s + double(p.l - k - 1) + ir2) *
              gamma_complex(3.0 * s + double(p.l - k - 1) - ir2);
  cplx gden = gamma_complex(3.0 * s + 0.5 * double(p.l) - double(k) - 0.5);
  return p.c1 * std::pow(cplx(2.0), -6.0 * s + double(3 - 3 * p.l + 3 * k)) *
         std::pow(cplx(double(p.D)), -3.0 * s) *
         std::pow(cplx(M_PI), -3.0 * s - double(p.l) + double(k) + 2.5) / den * gnum / gden;
}

cplx z_kj_quadrature(cplx s, int k, int j, const ZetaParams& p, double tol, Exec mode) {
  // Convergence after the W large-argument reduction W ~ e^{-y/2} y^{l/2}:
  // in the (zeta, lambda) variables the integrand maps onto the
  // convergence_predicate exponents alpha = -1, beta = 1,
  // gamma = -3(Re s+1/2)+k-2j+l/2, delta = 3(Re s+1/2)+3l/2-k-4, whose two
  // clauses become delta > -1 and gamma < delta (= Re(6s+l-2k-1+2j) > 0).
  double gam = -3.0 * (s.real() + 0.5) + k - 2 * j + 0.5 * p.l;
  double del = 3.0 * (s.real() + 0.5) + p.l - k - 4 + 0.5 * p.l;
  if (!(del > -1.0) || !(gam < del))
    throw DivergentRegion("z_kj integral outside its convergence region");

  const double sqD = std::sqrt(double(p.D));
  const cplx kap = 0.5 * double(p.l);
  const cplx mu = cplx(0, 0.5) * p.r;
  const cplx lam_pow = 3.0 * (s + 0.5) + double(p.l - k) - 4.0;
  const cplx x_pow = -3.0 * (s + 0.5) + double(k - 2 * j);
  const cplx dfac = std::pow(cplx(double(p.D)), -1.5 * (s + 0.5));

  // inner integral over x in (1, inf): substitute x = 1 + u/(lambda sqD),
  // the joint decay e^{-4 pi lambda sqD x} becomes e^{-4 pi u} up to the
  // x = 1 boundary factor
  auto inner = [&](double lam, int order, int panels) -> cplx {
    double scale = lam * sqD;
    auto g = [&](double u) -> cplx {
      double x = 1.0 + u / scale;
      double y = 4.0 * M_PI * lam * sqD * x;
      cplx W = whittaker_w(kap, mu, y);
      return std::pow(cplx(x), x_pow) * W * std::exp(-2.0 * M_PI * lam * sqD * x) / scale;
    };
    // e^{-4 pi u} overall decay: u <= 8 is ~1e-44
    cplx acc = 0;
    double edges[5] = {0.0, 0.5, 1.5, 4.0, 8.0};
    for (int i = 0; i < 4; ++i) acc += gauss_panel(g, edges[i], edges[i + 1], order);
    (void)panels;
    return acc;
  };

  auto whole = [&](int order, int lam_panels) -> cplx {
    auto f = [&](double lam) -> cplx {
      return std::pow(cplx(lam), lam_pow) * inner(lam, order, 0);
    };
    return log_panels(f, 1e-3, 30.0, lam_panels, order, mode);
  };

  cplx prefac = M_PI * std::pow(cplx(0.5 * sqD), double(p.l - k)) * p.c1 * dfac;
  cplx prev = prefac * whole(12, 24);
  for (int refine = 1; refine <= 3; ++refine) {
    cplx cur = prefac * whole(12 + 6 * refine, 24 + 12 * refine);
    if (std::abs(cur - prev) <= tol * (std::abs(cur) + 1e-300)) return cur;
    prev = cur;
  }
  throw QuadratureNotConverged("z_kj quadrature refinement stalled");
}

CkjTable closed_ckj_table(int l, int n) {
  CkjTable t;
  t.n = n;
  const double pi = M_PI;
  double ld = l;
  switch (n) {
    case 3:
      // expansion of the recursion-consistent l' = l-2 form
      t.c[{0, 0}] = -16.0 * pi / 3.0;
      t.c[{1, 0}] = (4.0 / 3.0) * (ld - 3);
      break;
    case 5: {
      double pre = 4.0 / 15.0, q = 8 * pi;
      t.c[{0, 0}] = pre * 2 * q * q;
      t.c[{1, 0}] = -pre * 8 * (ld - 4) * q;
      t.c[{2, 0}] = pre * 12 * (ld - 4) * (ld - 5);
      t.c[{2, 1}] = -pre * 4 * (ld - 4) * (ld - 5);
      break;
    }
    case 7: {
      double pre = 8.0 / 35.0, q = 8 * pi;
      t.c[{0, 0}] = -pre * 2 * q * q * q;
      t.c[{1, 0}] = pre * 12 * (ld - 5) * q * q;
      t.c[{2, 0}] = -pre * 36 * (ld - 5) * (ld - 6) * q;
      t.c[{3, 0}] = pre * 40 * (ld - 5) * (ld - 6) * (ld - 7);
      t.c[{2, 1}] = pre * 12 * (ld - 5) * (ld - 6) * q;
      t.c[{3, 1}] = -pre * 24 * (ld - 5) * (ld - 6) * (ld - 7);
      break;
    }
    case 9: {
      double pre = 16.0 / 315.0, q = 8 * pi;
      double p2 = (ld - 6) * (ld - 7), p3 = p2 * (ld - 8), p4 = p3 * (ld - 9);
      t.c[{0, 0}] = pre * 8 * q * q * q * q;
      t.c[{1, 0}] = -pre * 64 * (ld - 6) * q * q * q;
      t.c[{2, 0}] = pre * 288 * p2 * q * q;
      t.c[{3, 0}] = -pre * 640 * p3 * q;
      t.c[{4, 0}] = pre * 560 * p4;
      t.c[{2, 1}] = -pre * 96 * p2 * q * q;
      t.c[{3, 1}] = pre * 384 * p3 * q;
      t.c[{4, 1}] = -pre * 480 * p4;
      t.c[{4, 2}] = pre * 48 * p4;
      break;
    }
    default:
      throw std::invalid_argument("closed_ckj_table: n must be 3,5,7,9");
  }
  return t;
}

ExtractResult extract_ckj(int l, int n, const Tolerances& tol) {
  if (n != 3 && n != 5 && n != 7 && n != 9)
    throw std::invalid_argument("extract_ckj: n must be 3,5,7,9");
  const int lp = l - (n - 1);
  const int kk = (n - 1) / 2;
  Ladder ladder(l, lp, 0, 0.0, kk, tol);

  auto idx = ckj_indices(n);
  const int nb = int(idx.size());

  std::vector<double> lams, zets;
  for (int i = 0; i < 6; ++i) lams.push_back(0.55 + 0.18 * i);
  for (int i = 0; i < 5; ++i) zets.push_back(1.12 + 0.17 * i);
  const int np = int(lams.size() * zets.size());

  // rows: B(lam,zeta) e^{+4 pi lam x}; columns: lam^{l-k} x^{k-2j}
  std::vector<cplx> rhs(np);
  std::vector<std::vector<double>> A(np, std::vector<double>(nb));
  std::vector<std::pair<double, double>> grid;
  for (double la : lams)
    for (double ze : zets) grid.push_back({la, ze});
  for_each_index(std::size_t(np), [&](std::size_t ip) {
    double la = grid[ip].first, ze = grid[ip].second;
    double x = 0.5 * (ze * ze + 1.0 / (ze * ze));
    LadderValue v = ladder.eval(la, ze);
    rhs[ip] = v.value * std::exp(4.0 * M_PI * la * x);
    for (int ib = 0; ib < nb; ++ib)
      A[ip][std::size_t(ib)] = std::pow(la, double(l - idx[ib].first)) *
                               std::pow(x, double(idx[ib].first - 2 * idx[ib].second));
  });

  // column-equilibrated normal equations
  std::vector<double> colscale(nb, 0.0);
  for (int ib = 0; ib < nb; ++ib) {
    for (int ip = 0; ip < np; ++ip) colscale[ib] = std::max(colscale[ib], std::abs(A[ip][ib]));
    for (int ip = 0; ip < np; ++ip) A[ip][ib] /= colscale[ib];
  }
  std::vector<std::vector<double>> G(nb, std::vector<double>(nb));
  std::vector<cplx> b(nb);
  for (int i = 0; i < nb; ++i) {
    for (int jb = 0; jb < nb; ++jb) {
      double sgm = 0;
      for (int ip = 0; ip < np; ++ip) sgm += A[ip][i] * A[ip][jb];
      G[i][jb] = sgm;
    }
    cplx sb = 0;
    for (int ip = 0; ip < np; ++ip) sb += A[ip][i] * rhs[ip];
    b[i] = sb;
  }
  // Gaussian elimination
  std::vector<int> order(nb);
  for (int col = 0; col < nb; ++col) {
    int piv = col;
    for (int row = col + 1; row < nb; ++row)
      if (std::abs(G[row][col]) > std::abs(G[piv][col])) piv = row;
    std::swap(G[col], G[piv]);
    std::swap(b[col], b[piv]);
    for (int row = col + 1; row < nb; ++row) {
      double f = G[row][col] / G[col][col];
      for (int jb = col; jb < nb; ++jb) G[row][jb] -= f * G[col][jb];
      b[row] -= f * b[col];
    }
  }
  std::vector<cplx> coef(nb);
  for (int i = nb - 1; i >= 0; --i) {
    cplx sgm = b[i];
    for (int jb = i + 1; jb < nb; ++jb) sgm -= G[i][jb] * coef[jb];
    coef[i] = sgm / G[i][i];
  }
  double res2 = 0, rhs2 = 0;
  for (int ip = 0; ip < np; ++ip) {
    cplx fit = 0;
    for (int ib = 0; ib < nb; ++ib) fit += A[ip][ib] * coef[ib];
    res2 += std::norm(rhs[ip] - fit);
    rhs2 += std::norm(rhs[ip]);
  }
  ExtractResult out;
  out.fit_residual = std::sqrt(res2 / rhs2);
  if (out.fit_residual > tol.fit_residual)
    throw ShapeMismatch("ladder output does not match the c_{k,j} shape");
  out.fitted.n = n;
  for (int ib = 0; ib < nb; ++ib) out.fitted.c[idx[ib]] = coef[ib].real() / colscale[ib];
  out.closed = closed_ckj_table(l, n);
  std::vector<double> ratios;
  for (auto& kv : out.closed.c)
    if (std::abs(kv.second) > 1e-12) ratios.push_back(out.fitted.c[kv.first] / kv.second);
  std::sort(ratios.begin(), ratios.end());
  out.ratio_to_closed = ratios[ratios.size() / 2];
  return out;
}

cplx z_infinity(cplx s, const ZetaParams& p, const CkjTable& table) {
  const cplx ir2 = cplx(0, 0.5) * p.r;
  cplx qsum = 0;
  for (auto& kv : table.c) qsum += kv.second * q_kj(s, kv.first.first, kv.first.second, p.l, p.r);
  cplx gnum = gamma_complex(3.0 * s + double(p.l - 1) + ir2) *
              gamma_complex(3.0 * s + double(p.l - 1) - ir2);
  cplx gden = gamma_complex(3.0 * s + 0.5 * double(p.l) - 0.5);
  return qsum * p.c1 * std::pow(cplx(2.0), -6.0 * s + double(3 - 3 * p.l)) *
         std::pow(cplx(double(p.D)), -3.0 * s) * std::pow(cplx(M_PI), -3.0 * s - double(p.l) + 2.5) *
         gnum / gden;
}

LpReport lp_norm_check(int l, int lp, int m, double p) {
  if (!exists_dimension(l, lp, m)) throw NotRepresentable("lp_norm_check needs an existing B0");
  LpReport rep;
  // |B0|^p (zeta - zeta^-3) / lambda^4 maps onto the predicate's exponents
  double alpha = p * (l - lp) - 1.0;
  double delta = p * 0.5 * (l + lp) - 4.0;
  rep.convergent = convergence_predicate(alpha, 1, 0, delta);

  auto integrand = [&](double lam, double z) {
    double z2 = z * z;
    double logc = p * (m * std::log(z) + 0.5 * (l - lp - m) * std::log(2 * z2));
    double lg = logc + p * 0.5 * (l + lp) * std::log(lam) -
                2.0 * M_PI * p * lam * (z2 + 1.0 / z2) - 4.0 * std::log(lam);
    return std::exp(lg) * (z - 1.0 / (z2 * z));
  };
  // per-zeta lambda window: the integrand is lambda^delta e^{-a lambda} with
  // a = 2 pi p (z^2 + z^-2); mass sits near lambda = delta / a
  auto inner = [&](double z) -> cplx {
    double a = 2.0 * M_PI * p * (z * z + 1.0 / (z * z));
    double lo = 1e-4 * std::max(delta, 0.5) / a;
    double hi = 80.0 * (delta + 2.0) / a;
    auto fl = [&](double lam) -> cplx { return integrand(lam, z); };
    return log_panels(fl, lo, hi, 24, 12, Exec::serial);
  };
  const double zmaxs[5] = {1e2, 1e4, 1e6, 1e8, 1e10};
  for (double zmax : zmaxs) {
    int panels = int(10 * std::log10(zmax)) + 8;
    cplx val = log_panels([&](double z) { return inner(z); }, 1.0 + 1e-9, zmax, panels, 12,
                          Exec::parallel);
    rep.partials.push_back(val.real());
  }
  double last = rep.partials.back();
  double prev = rep.partials[rep.partials.size() - 2];
  rep.plateau = std::abs(last - prev) <= 1e-6 * std::abs(last);
  // per-cutoff contributions D_k; shrinking ratios mean a finite tail, ratios
  // >= ~1 mean (at least logarithmic) divergence
  std::vector<double> contrib;
  for (std::size_t i = 0; i + 1 < rep.partials.size(); ++i)
    contrib.push_back(rep.partials[i + 1] - rep.partials[i]);
  bool numeric_convergent;
  if (std::abs(contrib.back()) <= 1e-9 * std::abs(last)) {
    numeric_convergent = true;
  } else {
    std::vector<double> ratios;
    for (std::size_t i = 0; i + 1 < contrib.size(); ++i)
      if (contrib[i] != 0.0) ratios.push_back(contrib[i + 1] / contrib[i]);
    std::sort(ratios.begin(), ratios.end());
    double rmed = ratios[ratios.size() / 2];
    numeric_convergent = rmed < 0.85;
  }
  rep.numeric_consistent = numeric_convergent == rep.convergent;
  return rep;
}

ScalarProductResult scalar_product(const BesselSpec& b1, const BesselSpec& b2) {
  ScalarProductResult out;
  if (b1.lp + b2.lp <= 4) {
    out.divergent = true;
    return out;
  }
  auto value_at = [](const BesselSpec& bs, double lam, double zet) -> cplx {
    int ord = int(bs.word.size());
    ChartPoint p{Flavor::nonsplit, lam, zet, 0.0, 0.0};
    ChartJet f = b0_chart_jet(p, ord, bs.l, bs.lp, bs.m, bs.s);
    if (bs.word.empty()) return f.value();
    ChartJetContext ctx(p, ord);
    int lc = bs.l, lpc = bs.lp;
    for (auto it = bs.word.rbegin(); it != bs.word.rend(); ++it) {
      f = apply_op(*it, ctx, f, lc, lpc, bs.s, bs.m);
      auto rt = op_root(*it);
      lc += rt.first;
      lpc += rt.second;
    }
    return f.value();
  };
  auto fz = [&](double lam) -> cplx {
    double zmax = std::sqrt(45.0 / (4.0 * M_PI * lam)) + 3.0;
    auto g = [&](double z) -> cplx {
      return value_at(b1, lam, z) * std::conj(value_at(b2, lam, z)) *
             (z - 1.0 / (z * z * z));
    };
    return log_panels(g, 1.0 + 1e-9, zmax, 16, 12, Exec::serial);
  };
  auto f = [&](double lam) -> cplx { return fz(lam) / std::pow(lam, 4.0); };
  out.value = log_panels(f, 2e-3, 12.0, 28, 12, Exec::parallel);
  return out;
}

} // namespace gsp4
