#include "gsp4/coset.hpp"

#include <array>
#include <cmath>

#include "gsp4/dual.hpp"

namespace gsp4 {

Mat4<double> mat_exp(const Mat4<double>& x) {
  double nrm = frob_norm(x);
  int s = 0;
  while (nrm > 0.5) {
    nrm *= 0.5;
    ++s;
  }
  Mat4<double> a = x * std::pow(0.5, s);
  // Pade(6,6)
  static const double c[7] = {1.0, 1.0 / 2, 5.0 / 44, 1.0 / 66, 1.0 / 792, 1.0 / 15840, 1.0 / 665280};
  Mat4<double> a2 = a * a;
  Mat4<double> even = Mat4<double>::identity() * c[0] + a2 * c[2] + a2 * a2 * c[4] + a2 * a2 * a2 * c[6];
  Mat4<double> odd = a * c[1] + a2 * a * c[3] + a2 * a2 * a * c[5];
  Mat4<double> num = even + odd, den = even - odd;
  // solve den * r = num by Gaussian elimination
  Mat4<double> r = num;
  Mat4<double> d = den;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int row = col + 1; row < 4; ++row)
      if (std::abs(d(row, col)) > std::abs(d(piv, col))) piv = row;
    for (int j = 0; j < 4; ++j) {
      std::swap(d(col, j), d(piv, j));
      std::swap(r(col, j), r(piv, j));
    }
    double inv = 1.0 / d(col, col);
    for (int j = 0; j < 4; ++j) {
      d(col, j) *= inv;
      r(col, j) *= inv;
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col) continue;
      double f = d(row, col);
      if (f == 0.0) continue;
      for (int j = 0; j < 4; ++j) {
        d(row, j) -= f * d(col, j);
        r(row, j) -= f * r(col, j);
      }
    }
  }
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

CosetCoords split_identity_coords() {
  CosetCoords c;
  c.flavor = Flavor::split;
  c.gamma = 1.0 / std::sqrt(2.0);
  c.delta = 1.0 / std::sqrt(2.0);
  c.chart.flavor = Flavor::split;
  c.chart.lambda = -1.0;
  c.chart.zeta = 0.0;
  c.chart.phi1 = 3.0 * M_PI / 4.0;
  c.chart.phi2 = 0.0;
  c.phi3 = 0.0;
  c.phi4 = M_PI;
  return c;
}

namespace {

constexpr int kNP = 11;

std::array<double, kNP> to_vec(const CosetCoords& c) {
  return {c.gamma, c.delta, c.x, c.y, c.z,
          c.chart.lambda, c.chart.zeta, c.chart.phi1, c.chart.phi2, c.phi3, c.phi4};
}

CosetCoords from_vec(Flavor f, const std::array<double, kNP>& v) {
  CosetCoords c;
  c.flavor = f;
  c.chart.flavor = f;
  c.gamma = v[0]; c.delta = v[1]; c.x = v[2]; c.y = v[3]; c.z = v[4];
  c.chart.lambda = v[5]; c.chart.zeta = v[6]; c.chart.phi1 = v[7]; c.chart.phi2 = v[8];
  c.phi3 = v[9]; c.phi4 = v[10];
  return c;
}

Mat4<double> assemble_vec(Flavor f, const std::array<double, kNP>& v) {
  return assemble_m<double>(f, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9], v[10]);
}

Mat4<Dual> assemble_dual(Flavor f, const std::array<double, kNP>& v, int seeded) {
  std::array<Dual, kNP> d;
  for (int i = 0; i < kNP; ++i) d[i] = Dual(v[i], i == seeded ? 1.0 : 0.0);
  return assemble_m<Dual>(f, d[0], d[1], d[2], d[3], d[4], d[5], d[6], d[7], d[8], d[9], d[10]);
}

// solve (A + mu I) x = b for symmetric A, 11x11
bool solve_spd(double A[kNP][kNP], const double b[kNP], double mu, double x[kNP]) {
  double m[kNP][kNP];
  double r[kNP];
  for (int i = 0; i < kNP; ++i) {
    for (int j = 0; j < kNP; ++j) m[i][j] = A[i][j];
    m[i][i] += mu;
    r[i] = b[i];
  }
  for (int col = 0; col < kNP; ++col) {
    int piv = col;
    for (int row = col + 1; row < kNP; ++row)
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    if (std::abs(m[piv][col]) < 1e-300) return false;
    for (int j = 0; j < kNP; ++j) std::swap(m[col][j], m[piv][j]);
    std::swap(r[col], r[piv]);
    for (int row = col + 1; row < kNP; ++row) {
      double fct = m[row][col] / m[col][col];
      for (int j = col; j < kNP; ++j) m[row][j] -= fct * m[col][j];
      r[row] -= fct * r[col];
    }
  }
  for (int i = kNP - 1; i >= 0; --i) {
    double s = r[i];
    for (int j = i + 1; j < kNP; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return true;
}

} // namespace

CosetCoords coset_decompose(const GroupElement& g, Flavor flavor,
                            const std::optional<CosetCoords>& seed, const Tolerances& tol) {
  if (g.mu2 <= 0.0) throw WrongComponent("coset_decompose requires mu2(g) > 0");

  std::array<double, kNP> v;
  if (seed) {
    v = to_vec(*seed);
  } else if (flavor == Flavor::nonsplit) {
    Mat2<cplx> jf = j_factor(g, SiegelPoint::I());
    double gamma = std::sqrt(std::abs(det2(jf)));
    double lambda = g.mu2 / (gamma * gamma);
    double vtr = siegel_trace(complexify(g.m), SiegelPoint::I().z).imag() / lambda;
    double z2 = (vtr >= 2.0) ? 0.5 * (vtr + std::sqrt(vtr * vtr - 4.0)) : 1.0;
    CosetCoords c;
    c.gamma = gamma;
    c.chart.lambda = lambda;
    c.chart.zeta = std::sqrt(z2);
    v = to_vec(c);
  } else {
    v = to_vec(split_identity_coords());
  }

  const double gn = std::max(frob_norm(g.m), 1e-30);
  auto rel_res = [&](const std::array<double, kNP>& p) {
    return frob_dist(assemble_vec(flavor, p), g.m) / gn;
  };

  double res = rel_res(v);
  for (int it = 0; it < tol.newton_max_iter && res > tol.newton_stop; ++it) {
    // residual and Jacobian columns
    Mat4<double> f = assemble_vec(flavor, v) - g.m;
    double Jc[kNP][16];
    for (int p = 0; p < kNP; ++p) {
      Mat4<Dual> fd = assemble_dual(flavor, v, p);
      for (int e = 0; e < 16; ++e) Jc[p][e] = fd.a[e].d;
    }
    double JtJ[kNP][kNP], Jtr[kNP];
    double trace = 0;
    for (int i = 0; i < kNP; ++i) {
      for (int j = i; j < kNP; ++j) {
        double s = 0;
        for (int e = 0; e < 16; ++e) s += Jc[i][e] * Jc[j][e];
        JtJ[i][j] = JtJ[j][i] = s;
      }
      trace += JtJ[i][i];
      double s = 0;
      for (int e = 0; e < 16; ++e) s += Jc[i][e] * f.a[e];
      Jtr[i] = -s;
    }
    double step[kNP];
    if (!solve_spd(JtJ, Jtr, 1e-12 * trace, step))
      throw NoConvergence("singular normal equations in coset Newton");

    // damped update: halve the step while the residual increases
    double scale = 1.0;
    std::array<double, kNP> cand;
    double newres = res;
    for (int halvings = 0; halvings < 30; ++halvings) {
      for (int i = 0; i < kNP; ++i) cand[i] = v[i] + scale * step[i];
      newres = rel_res(cand);
      if (newres < res || newres < tol.newton_stop) break;
      scale *= tol.newton_damping;
    }
    if (newres >= res && res < tol.coset_residual) break;  // stalled but converged
    v = cand;
    res = newres;
  }

  if (res > tol.coset_residual)
    throw NoConvergence("coset Newton did not reach the residual target");
  return from_vec(flavor, v);
}

CosetSample sample_nonsplit(std::mt19937_64& rng, double guard) {
  auto uni = [&](double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  };
  CosetCoords c;
  c.gamma = uni(0.85, 1.2);
  c.delta = uni(-0.5, 0.5);
  c.x = uni(-0.3, 0.3);
  c.y = uni(-0.3, 0.3);
  c.z = uni(-0.3, 0.3);
  c.chart.lambda = uni(0.75, 1.4);
  c.chart.zeta = uni(1.0 + guard + 0.02, 1.7);
  c.chart.phi1 = uni(-0.38, 0.38);
  c.chart.phi2 = uni(-0.38, 0.38);
  c.phi3 = uni(-0.3, 0.3);
  c.phi4 = uni(-0.3, 0.3);
  CosetSample s;
  s.coords = c;
  s.g = GroupElement(assemble(c));
  return s;
}

} // namespace gsp4
