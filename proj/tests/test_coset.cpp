#include <doctest.h>

#include <random>

#include "gsp4/bessel.hpp"
#include "gsp4/coset.hpp"

using namespace gsp4;

TEST_CASE("round trip through a plain chart element") {
  ChartPoint p{Flavor::nonsplit, 2.0, 1.5, 0.1, 0.2};
  CosetCoords c = coset_decompose(chart_element(p), Flavor::nonsplit);
  CHECK(c.chart.lambda == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(c.chart.zeta == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(c.chart.phi1 == doctest::Approx(0.1).epsilon(1e-7));
  CHECK(c.chart.phi2 == doctest::Approx(0.2).epsilon(1e-7));
  CHECK(c.gamma == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(c.delta) < 1e-8);
  CHECK(std::abs(c.x) < 1e-8);
  CHECK(std::abs(c.phi3) < 1e-8);
}

TEST_CASE("round trip through a fully factored element") {
  CosetCoords c;
  c.gamma = 1.1;
  c.delta = 0.3;
  c.x = 0.2;
  c.y = -0.1;
  c.z = 0.4;
  c.chart = {Flavor::nonsplit, 1.2, 1.3, 0.05, -0.07};
  c.phi3 = 0.02;
  c.phi4 = -0.03;
  GroupElement g(assemble(c));
  CosetCoords r = coset_decompose(g, Flavor::nonsplit);
  CHECK(r.gamma == doctest::Approx(c.gamma).epsilon(1e-8));
  CHECK(r.delta == doctest::Approx(c.delta).epsilon(1e-8));
  CHECK(r.x == doctest::Approx(c.x).epsilon(1e-7));
  CHECK(r.y == doctest::Approx(c.y).epsilon(1e-7));
  CHECK(r.z == doctest::Approx(c.z).epsilon(1e-7));
  CHECK(r.chart.lambda == doctest::Approx(1.2).epsilon(1e-8));
  CHECK(r.chart.zeta == doctest::Approx(1.3).epsilon(1e-8));
  CHECK(r.chart.phi1 == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(r.chart.phi2 == doctest::Approx(-0.07).epsilon(1e-6));
  CHECK(r.phi3 == doctest::Approx(0.02).epsilon(1e-6));
  CHECK(r.phi4 == doctest::Approx(-0.03).epsilon(1e-6));
}

TEST_CASE("1000 random draws: parameters recovered within 1e-8") {
  std::mt19937_64 rng(2024);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    CosetSample s = sample_nonsplit(rng);
    CosetCoords r = coset_decompose(s.g, Flavor::nonsplit);
    auto dev = [&](double a, double b) { return std::abs(a - b); };
    double worst = 0;
    worst = std::max(worst, dev(r.gamma, s.coords.gamma));
    worst = std::max(worst, dev(r.delta, s.coords.delta));
    worst = std::max(worst, dev(r.x, s.coords.x));
    worst = std::max(worst, dev(r.y, s.coords.y));
    worst = std::max(worst, dev(r.z, s.coords.z));
    worst = std::max(worst, dev(r.chart.lambda, s.coords.chart.lambda));
    worst = std::max(worst, dev(r.chart.zeta, s.coords.chart.zeta));
    worst = std::max(worst, dev(r.chart.phi1, s.coords.chart.phi1));
    worst = std::max(worst, dev(r.chart.phi2, s.coords.chart.phi2));
    worst = std::max(worst, dev(r.phi3, s.coords.phi3));
    worst = std::max(worst, dev(r.phi4, s.coords.phi4));
    if (worst > 1e-8) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("wrong component is rejected") {
  // diag(1,1,-1,-1) has multiplier -1
  Mat4<double> eps;
  eps(0, 0) = 1;
  eps(1, 1) = 1;
  eps(2, 2) = -1;
  eps(3, 3) = -1;
  CHECK_THROWS_AS(coset_decompose(GroupElement(eps), Flavor::nonsplit), WrongComponent);
}

TEST_CASE("central difference of recovered lambda along exp(t H1) at the flat point") {
  // h(1,1,0,0) exp(t H1): lambda'(0) = lambda cos(2 phi2) = 1
  Mat4<double> H1 = basis_matrix(RealTag::H1);
  double t = 0.01;
  auto lam = [&](double tt) {
    GroupElement g(mat_exp(H1 * tt));
    return coset_decompose(g, Flavor::nonsplit).chart.lambda;
  };
  double deriv = (lam(t) - lam(-t)) / (2 * t);
  CHECK(std::abs(deriv - 1.0) < 1e-4);
}

TEST_CASE("split decomposition: identity and chart round trips") {
  GroupElement id(Mat4<double>::identity());
  CosetCoords c = coset_decompose(id, Flavor::split);
  CHECK(frob_dist(assemble(c), id.m) < 1e-9);

  // split chart element with lambda < 0 has positive multiplier
  ChartPoint p{Flavor::split, -1.1, 0.3, 0.2, -0.1};
  GroupElement g = chart_element(p);
  CHECK(g.mu2 > 0);
  CosetCoords seed;
  seed.flavor = Flavor::split;
  seed.chart = p;
  CosetCoords r = coset_decompose(g, Flavor::split, seed);
  CHECK(r.chart.lambda == doctest::Approx(-1.1).epsilon(1e-8));
  CHECK(r.chart.zeta == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(r.chart.phi1 == doctest::Approx(0.2).epsilon(1e-7));
  CHECK(r.chart.phi2 == doctest::Approx(-0.1).epsilon(1e-7));
  CHECK(r.gamma == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(r.delta == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("split round trip with torus and unipotent factors") {
  CosetCoords c;
  c.flavor = Flavor::split;
  c.gamma = 1.15;  // a
  c.delta = 0.9;   // b
  c.x = 0.12;
  c.y = -0.07;
  c.z = 0.2;
  c.chart = {Flavor::split, -1.2, 0.25, 0.15, -0.08};
  c.phi3 = 0.04;
  c.phi4 = -0.06;
  GroupElement g(assemble(c));
  CHECK(g.mu2 > 0);
  CosetCoords seed;
  seed.flavor = Flavor::split;
  seed.chart = {Flavor::split, -1.0, 0.2, 0.1, 0.0};
  CosetCoords r = coset_decompose(g, Flavor::split, seed);
  CHECK(frob_dist(assemble(r), g.m) < 1e-9 * frob_norm(g.m));
  CHECK(r.gamma == doctest::Approx(c.gamma).epsilon(1e-7));
  CHECK(r.delta == doctest::Approx(c.delta).epsilon(1e-7));
  CHECK(r.chart.lambda == doctest::Approx(c.chart.lambda).epsilon(1e-7));
}

TEST_CASE("coefficient lists: spot checks at one chart point") {
  ChartPoint p{Flavor::nonsplit, 1.1, 1.4, 0.2, 0.3};
  {
    auto rows = verify_coefficients(RealTag::Q, p, 1e-2);
    // lambda'(0) = lambda sin(2 phi2), phi2'(0) = sin^2(phi2), phi3'(0) = 0
    CHECK(rows[2].closed_form == doctest::Approx(1.1 * std::sin(0.6)));
    CHECK(rows[8].closed_form == doctest::Approx(std::sin(0.3) * std::sin(0.3)));
    CHECK(rows[9].closed_form == doctest::Approx(0.0));
    for (auto& r : rows) CHECK(r.deviation < 1e-6);
  }
  {
    auto rows = verify_coefficients(RealTag::H1, p, 1e-2);
    CHECK(rows[3].closed_form == doctest::Approx(0.5 * 1.4 * std::cos(0.4)));
    for (auto& r : rows) CHECK(r.deviation < 1e-6);
  }
  {
    auto rows = verify_coefficients(RealTag::P, p, 1e-2);
    CHECK(rows[4].closed_form == doctest::Approx(-1.4 * 1.4 * 1.1 * std::sin(0.6)));
    for (auto& r : rows) CHECK(r.deviation < 1e-6);
  }
}

TEST_CASE("all ten coefficient lists verify at a generic point") {
  ChartPoint p{Flavor::nonsplit, 0.95, 1.35, -0.17, 0.23};
  for (int i = 0; i < kNumTags; ++i) {
    auto rows = verify_coefficients(RealTag(i), p, 1e-2);
    for (auto& r : rows) {
      INFO(tag_name(RealTag(i)) << " " << r.name);
      CHECK(r.deviation < 1e-6);
    }
  }
}
