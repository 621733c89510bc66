#include <doctest.h>

#include <random>

#include "gsp4/bessel.hpp"
#include "gsp4/chart_jet.hpp"
#include "gsp4/group.hpp"
#include "gsp4/lie_derivative.hpp"
#include "gsp4/multidual.hpp"

using namespace gsp4;

TEST_CASE("chart jet exp matches the Taylor series of exp") {
  ChartJet t = ChartJet::variable(3, 0, 0.0);
  ChartJet e = exp(t);
  // coefficients of 1, t, t^2, t^3
  CHECK(std::abs(e.value() - 1.0) < 1e-15);
  const auto& tb = ChartJet::tables();
  CHECK(std::abs(e.c[tb.offset4[1]] - 1.0) < 1e-15);              // t coefficient
  CHECK(std::abs(e.c[tb.offset4[2]] - 0.5) < 1e-15);              // 1/2
  CHECK(std::abs(e.c[tb.offset4[3]] - 1.0 / 6.0) < 1e-15);        // 1/6
}

TEST_CASE("binomial jet: (1+t)^{1/2} to order 2") {
  ChartJet t = ChartJet::variable(2, 0, 0.0);
  ChartJet r = pow(1.0 + t, cplx(0.5));
  const auto& tb = ChartJet::tables();
  CHECK(std::abs(r.value() - 1.0) < 1e-15);
  CHECK(std::abs(r.c[tb.offset4[1]] - 0.5) < 1e-15);
  CHECK(std::abs(r.c[tb.offset4[2]] + 0.125) < 1e-15);
}

TEST_CASE("Jacobi formula cross-check: d/dt log det(I + t A) = tr A at t=0") {
  Mat2<MultiDual> m;
  MultiDual t = MultiDual::variable(1, 0, 0.0);
  // A = upper-left block of H1 = diag(1, 0)
  m(0, 0) = 1.0 + t;
  m(0, 1) = MultiDual::constant(1, 0.0);
  m(1, 0) = MultiDual::constant(1, 0.0);
  m(1, 1) = MultiDual::constant(1, 1.0);
  MultiDual d = log(det2(m));
  CHECK(std::abs(d.c[1] - cplx(1.0)) < 1e-15);
}

TEST_CASE("chart jet partials: lambda derivative and the exponential factor") {
  ChartPoint p{Flavor::nonsplit, 0.9, 1.3, 0.0, 0.0};
  ChartJet lam = ChartJet::variable(2, 0, p.lambda);
  CHECK(std::abs(lam.partial(0).value() - 1.0) < 1e-15);

  ChartJet zet = ChartJet::variable(3, 1, p.zeta);
  ChartJet f = exp(cplx(-2 * M_PI) * (lam * (zet * zet + inv(zet * zet))));
  cplx ratio = f.partial(1).value() / f.value();
  double z = p.zeta;
  CHECK(std::abs(ratio - cplx(-2 * M_PI * p.lambda * (2 * z - 2 / (z * z * z)))) < 1e-10);
}

TEST_CASE("B0 chart jet coefficients match central finite differences") {
  int l = 4, lp = 2, m = 0;
  cplx s = 0.0;
  ChartPoint p{Flavor::nonsplit, 1.0, 1.2, 0.15, 0.1};
  ChartJet j = b0_chart_jet(p, 6, l, lp, m, s);

  auto B = [&](double dl, double dz, double d1, double d2) {
    ChartPoint q{Flavor::nonsplit, p.lambda + dl, p.zeta + dz, p.phi1 + d1, p.phi2 + d2};
    return B0_coords(q, l, lp, m, s);
  };
  double h = 1e-4;
  // d/d lambda
  cplx fd_l = (B(h, 0, 0, 0) - B(-h, 0, 0, 0)) / (2 * h);
  CHECK(std::abs(j.partial(0).value() - fd_l) < 1e-6 * std::abs(fd_l));
  // d2/(d zeta d phi2) mixed
  cplx fd_mix = (B(0, h, 0, h) - B(0, h, 0, -h) - B(0, -h, 0, h) + B(0, -h, 0, -h)) / (4 * h * h);
  cplx jet_mix = j.partial(1).partial(3).value();
  CHECK(std::abs(jet_mix - fd_mix) < 1e-5 * std::abs(fd_mix));
  // d2/d phi1^2
  cplx fd_11 = (B(0, 0, h, 0) - 2.0 * B(0, 0, 0, 0) + B(0, 0, -h, 0)) / (h * h);
  cplx jet_11 = j.partial(2).partial(2).value();
  CHECK(std::abs(jet_11 - fd_11) < 1e-5 * (std::abs(fd_11) + 1.0));
}

TEST_CASE("jets of different order agree on shared coefficients exactly") {
  ChartPoint p{Flavor::nonsplit, 1.1, 1.25, 0.1, 0.07};
  ChartJet a = b0_chart_jet(p, 4, 5, 3, 0, cplx(0.3, 0.1));
  ChartJet b = b0_chart_jet(p, 7, 5, 3, 0, cplx(0.3, 0.1));
  for (std::size_t i = 0; i < a.c.size(); ++i) CHECK(a.c[i] == b.c[i]);
}

TEST_CASE("multidual lie derivative: product rule on random primitives") {
  std::mt19937_64 rng(31);
  auto F = [](const auto& h) { return multiplier_poly(h); };
  auto G = [](const auto& h) { return w_poly_m(h); };
  auto FG = [&](const auto& h) { return multiplier_poly(h) * w_poly_m(h); };
  for (int i = 0; i < 20; ++i) {
    CosetSample smp = sample_nonsplit(rng);
    std::uniform_int_distribution<int> pick(0, kNumTags - 1);
    Mat4<cplx> L = complexify(basis_matrix(RealTag(pick(rng))));
    std::vector<Mat4<cplx>> word{L};
    cplx lhs = lie_derivative(FG, smp.g.m, word);
    cplx rhs = lie_derivative(F, smp.g.m, word) * w_poly(smp.g) +
               smp.g.mu2 * lie_derivative(G, smp.g.m, word);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (std::abs(lhs) + 1.0));
  }
}

TEST_CASE("mixed second derivative matches the finite-difference stencil with h-refinement") {
  std::mt19937_64 rng(41);
  CosetSample smp = sample_nonsplit(rng);
  auto F = [](const auto& h) { return w_poly_m(h); };
  Mat4<double> L1 = basis_matrix(RealTag::Q);
  Mat4<double> L2 = basis_matrix(RealTag::F);
  cplx exact =
      lie_derivative(F, smp.g.m, std::vector<Mat4<cplx>>{complexify(L1), complexify(L2)});
  auto stencil = [&](double h) {
    auto val = [&](double t1, double t2) {
      return w_poly(GroupElement(smp.g.m * mat_exp(L1 * t1) * mat_exp(L2 * t2)));
    };
    return (val(h, h) - val(h, -h) - val(-h, h) + val(-h, -h)) / (4 * h * h);
  };
  double e1 = std::abs(stencil(1e-2) - exact);
  double e2 = std::abs(stencil(5e-3) - exact);
  CHECK(e2 < 0.4 * e1);  // O(h^2) refinement
  CHECK(e2 < 1e-4 * (std::abs(exact) + 1.0));
}

TEST_CASE("singular constant terms throw") {
  ChartJet z = ChartJet::variable(3, 0, 0.0);
  CHECK_THROWS_AS(log(z), SingularConstantTerm);
  CHECK_THROWS_AS(inv(z), SingularConstantTerm);
  ChartJet atpole = ChartJet::variable(3, 3, M_PI_2);
  CHECK_THROWS_AS(tan(atpole), SingularConstantTerm);
  MultiDual zero = MultiDual::variable(2, 0, 0.0);
  CHECK_THROWS_AS(log(zero), SingularConstantTerm);
}

TEST_CASE("multidual matches chart jet on a shared scalar function") {
  // f(x) = exp(x) sin(x) / (2 + x) at x = 0.3, first derivative both ways
  double x0 = 0.3;
  MultiDual xd = MultiDual::variable(1, 0, x0);
  MultiDual fd = exp(xd) * sin(xd) / (2.0 + xd);
  ChartJet xj = ChartJet::variable(1, 0, x0);
  ChartJet fj = exp(xj) * sin(xj) / (2.0 + xj);
  CHECK(std::abs(fd.value() - fj.value()) < 1e-15);
  CHECK(std::abs(fd.c[1] - fj.partial(0).value()) < 1e-14);
}
