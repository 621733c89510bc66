#include <doctest.h>

#include <random>

#include "gsp4/coset.hpp"
#include "gsp4/split.hpp"

using namespace gsp4;

namespace {

ChartPoint random_split_point(std::mt19937_64& rng, double lam_sign = 1.0) {
  auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  ChartPoint p;
  p.flavor = Flavor::split;
  p.lambda = lam_sign * uni(0.5, 1.5);
  p.zeta = uni(0.15, 0.8);
  p.phi1 = uni(0.1, 0.6);   // keeps both bases away from zero
  p.phi2 = uni(-0.3, -0.05);
  return p;
}

} // namespace

TEST_CASE("split torus isomorphism: conjugation by t0 diagonalizes") {
  Mat2<double> t0;
  t0(0, 0) = 1; t0(0, 1) = 1; t0(1, 0) = 1; t0(1, 1) = -1;
  Mat2<double> t0inv = adjugate2(t0) * (1.0 / det2(t0));
  for (auto [x, y] : std::vector<std::pair<double, double>>{{1.2, 0.4}, {0.9, -0.5}, {2.0, 1.1}}) {
    Mat2<double> T;
    T(0, 0) = x; T(0, 1) = y; T(1, 0) = y; T(1, 1) = x;
    Mat2<double> d = t0inv * T * t0;
    CHECK(d(0, 0) == doctest::Approx(x + y).epsilon(1e-14));
    CHECK(d(1, 1) == doctest::Approx(x - y).epsilon(1e-14));
    CHECK(std::abs(d(0, 1)) < 1e-14);
    CHECK(std::abs(d(1, 0)) < 1e-14);
  }
  Mat4<double> t = torus_split_m<double>(1.3, 0.7);
  CHECK(t(0, 0) == doctest::Approx(1.0));
  CHECK(t(0, 1) == doctest::Approx(0.3));
  CHECK(multiplier(t) == doctest::Approx(1.3 * 0.7));
}

TEST_CASE("f_split substitutions") {
  int l = 6, lp = 4;
  for (double ze : {0.3, 0.7}) {
    ChartPoint p{Flavor::split, 0.9, ze, M_PI / 2, 0.0};
    cplx v = f_split(p, l, lp, 0.0, 0.0);
    cplx expect = std::pow(cplx(-ze), (l - lp) / 2.0) * std::pow(0.9, (l + lp) / 2.0) *
                  std::exp(4 * M_PI * 0.9 * ze);
    CHECK(std::abs(v - expect) < 1e-10 * std::abs(expect));
  }
  ChartPoint p0{Flavor::split, 1.1, 0.4, 0.0, 0.0};
  CHECK(f_split(p0, 6, 4, 0.0, 0.0) == cplx(0.0));
}

TEST_CASE("split PDE residuals vanish on f_split and flag perturbations") {
  std::mt19937_64 rng(61);
  int l = 6, lp = 4;
  cplx s1(0.2, 0.1), s2(-0.3, 0.4);
  for (int i = 0; i < 100; ++i) {
    ChartPoint p = random_split_point(rng);
    auto r = pde_residuals_split(p, l, lp, s1, s2);
    double scale = std::abs(f_split(p, l, lp, s1, s2));
    for (auto& ri : r) CHECK(std::abs(ri) < 1e-9 * scale);
  }
  ChartPoint p = random_split_point(rng);
  ChartJet f = f_split_chart_jet(p, 1, l, lp, s1, s2);
  ChartJet pert = f * (1.0 + 0.01 * ChartJet::variable(1, 0, p.lambda));
  auto r = pde_residuals_split_f(pert, p, l, lp, s1, s2);
  CHECK(std::abs(r[0]) > 1e-4 * std::abs(pert.value()));
}

TEST_CASE("split operators: trivial zero at phi2 = 0 with f constant, l = lp") {
  ChartPoint p{Flavor::split, 0.9, 0.4, 0.3, 0.0};
  FJet1 one{1.0, 0.0, 0.0, 0.0, 0.0};
  cplx v = operator_rhs_split(OpTag::Nplus, p, one, 5, 5, 0.0, 0.0);
  CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("split annihilation: N+, X-, P1-, P0- kill f_split through the formulas") {
  std::mt19937_64 rng(62);
  int l = 7, lp = 3;
  cplx s1(0.15, -0.2), s2(0.05, 0.3);
  for (int i = 0; i < 40; ++i) {
    ChartPoint p = random_split_point(rng);
    SplitJetContext ctx(p, 1);
    ChartJet f = f_split_chart_jet(p, 1, l, lp, s1, s2);
    double scale = std::abs(f.value());
    for (OpTag op : {OpTag::Nplus, OpTag::Xminus, OpTag::P1minus, OpTag::P0minus}) {
      ChartJet d = apply_op_split(op, ctx, f, l, lp, s1, s2);
      CHECK(std::abs(d.value()) < 1e-8 * scale);
    }
  }
}

TEST_CASE("split operator formulas match finite differences through the decomposition") {
  // B(u t hhat(p) r3 r4) := theta(u) Lambda(t) e^{i(l phi3 + lp phi4)} F(p) for a
  // smooth test function F; the operator formulas must reproduce d/dt B(h e^{tL}).
  int l = 5, lp = 3;
  cplx s1(0.3, 0.0), s2(-0.2, 0.0);

  auto F = [](const ChartJet& lam, const ChartJet& zet, const ChartJet& f1, const ChartJet& f2) {
    return exp(0.3 * lam) * (2.0 + sin(zet)) * cos(f1) * exp(0.2 * f2);
  };

  ChartPoint p{Flavor::split, -1.05, 0.25, 0.2, -0.12};
  int ord = 1;
  ChartJet fj = F(ChartJet::variable(ord, 0, p.lambda), ChartJet::variable(ord, 1, p.zeta),
                  ChartJet::variable(ord, 2, p.phi1), ChartJet::variable(ord, 3, p.phi2));
  FJet1 f1{fj.value(), fj.partial(0).value(), fj.partial(1).value(), fj.partial(2).value(),
           fj.partial(3).value()};

  CosetCoords seed;
  seed.flavor = Flavor::split;
  seed.chart = p;
  auto Bval = [&](const Mat4<double>& g) {
    CosetCoords c = coset_decompose(GroupElement(g), Flavor::split, seed);
    cplx lam_char = std::pow(cplx(c.gamma), s1) * std::pow(cplx(c.delta), s2);
    cplx theta = std::exp(cplx(0, 2 * M_PI * (c.x - c.z)));
    cplx weight = std::exp(cplx(0, l * c.phi3 + lp * c.phi4));
    ChartJet v = F(ChartJet::constant(0, c.chart.lambda), ChartJet::constant(0, c.chart.zeta),
                   ChartJet::constant(0, c.chart.phi1), ChartJet::constant(0, c.chart.phi2));
    return lam_char * theta * weight * v.value();
  };
  const Mat4<double> h0 = chart_element(p).m;
  auto fd_direction = [&](const Mat4<double>& L) {
    auto central = [&](double h) {
      return (Bval(h0 * mat_exp(L * h)) - Bval(h0 * mat_exp(L * (-h)))) / (2 * h);
    };
    cplx ch = central(1e-3), ch2 = central(5e-4);
    return (4.0 * ch2 - ch) / 3.0;
  };

  for (OpTag op : {OpTag::Nplus, OpTag::Nminus, OpTag::Xplus, OpTag::Xminus, OpTag::P1plus,
                   OpTag::P1minus, OpTag::P0plus, OpTag::P0minus}) {
    Mat4<cplx> L = basis_matrix(op_to_cplx_tag(op));
    Mat4<double> Lre, Lim;
    for (int e = 0; e < 16; ++e) {
      Lre.a[e] = L.a[e].real();
      Lim.a[e] = L.a[e].imag();
    }
    cplx fd = fd_direction(Lre) + cplx(0, 1) * fd_direction(Lim);
    cplx formula = operator_rhs_split(op, p, f1, l, lp, s1, s2);
    INFO(op_name(op));
    CHECK(std::abs(formula - fd) < 1e-5 * (std::abs(formula) + std::abs(fd) + 1e-12));
  }
}

TEST_CASE("growth violation: every tested beta diverges on the ray") {
  GrowthReport rep = growth_violation(10, 10, 0.0, 0.0, 50.0);
  CHECK(rep.all_diverge);
  for (auto& row : rep.rows) {
    CHECK(row.eventually_increasing);
    CHECK(row.exceeds_threshold);
  }
  // beta = 20 divergence is already witnessed by t <= 100
  std::size_t i100 = 0;
  while (i100 < rep.ts.size() && rep.ts[i100] <= 100.0) ++i100;
  double gap100 = rep.log_f[i100 - 1] - 20.0 * rep.log_norm[i100 - 1];
  CHECK(gap100 > 1e3);

  // the lambda < 0 branch behaves identically
  GrowthReport neg = growth_violation(10, 10, 0.0, 0.0, 50.0, M_PI / 4, M_PI / 8, true);
  CHECK(neg.all_diverge);

  // beta = 0 is trivially divergent: log|f| itself blows past the threshold
  CHECK(rep.log_f.back() > 1e3);
}

TEST_CASE("log-domain values track the direct evaluation where both exist") {
  int l = 6, lp = 2;
  cplx s1(0.1, 0.2), s2(0.4, -0.1);
  ChartPoint p{Flavor::split, 0.8, 0.5, 0.35, -0.2};
  cplx direct = f_split(p, l, lp, s1, s2);
  LogValue lv = f_split_log(p, l, lp, s1, s2);
  CHECK(std::log(std::abs(direct)) == doctest::Approx(lv.log_abs).epsilon(1e-10));
  cplx recon = std::exp(cplx(lv.log_abs, lv.arg));
  CHECK(std::abs(recon - direct) < 1e-9 * std::abs(direct));
}
