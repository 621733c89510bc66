#ifndef GSP4_GROUP_HPP
#define GSP4_GROUP_HPP

#include <cmath>
#include <random>

#include "gsp4/config.hpp"
#include "gsp4/errors.hpp"
#include "gsp4/mat.hpp"

namespace gsp4 {

/// J = [[0, I2], [-I2, 0]]; tg J g = mu2(g) J defines GSp(4,R).
inline const Mat4<double>& Jmat() {
  static const Mat4<double> J = [] {
    Mat4<double> j;
    j(0, 2) = 1; j(1, 3) = 1; j(2, 0) = -1; j(3, 1) = -1;
    return j;
  }();
  return J;
}

/// (tg J g)_{0,2}; on the similitude group this is mu2(g), and the expression
/// is a quadratic polynomial in the entries, so it extends to jet scalars.
template <class T>
T multiplier_poly(const Mat4<T>& g) {
  // col0(g) . J . col2(g) = g(0,i) J(i,j) g(j,2) with rows of tg = cols of g
  T s{};
  s = s + g(0, 0) * g(2, 2) + g(1, 0) * g(3, 2) - g(2, 0) * g(0, 2) - g(3, 0) * g(1, 2);
  return s;
}

inline double multiplier(const Mat4<double>& g, const Tolerances& tol = default_tol()) {
  double mu = multiplier_poly(g);
  Mat4<double> r = g.transpose() * Jmat() * g - Jmat() * mu;
  double n2 = 0;
  for (double v : g.a) n2 += v * v;
  if (frob_norm(r) > tol.similitude * std::max(n2, 1.0))
    throw NotSimilitude("residual of tgJg - mu J too large");
  if (mu == 0.0) throw NotSimilitude("zero multiplier");
  return mu;
}

/// Element of GSp(4,R) with its cached multiplier.
struct GroupElement {
  Mat4<double> m = Mat4<double>::identity();
  double mu2 = 1.0;

  GroupElement() = default;
  explicit GroupElement(const Mat4<double>& g, const Tolerances& tol = default_tol())
      : m(g), mu2(multiplier(g, tol)) {}

  GroupElement operator*(const GroupElement& o) const {
    GroupElement r;
    r.m = m * o.m;
    r.mu2 = mu2 * o.mu2;
    return r;
  }
  GroupElement inverse() const {
    // g^{-1} = -mu^{-1} J tg J
    GroupElement r;
    r.m = (Jmat() * m.transpose() * Jmat()) * (-1.0 / mu2);
    r.mu2 = 1.0 / mu2;
    return r;
  }
};

/// Point of the degree-2 Siegel upper half space.
struct SiegelPoint {
  Mat2<cplx> z;
  static SiegelPoint I() {
    SiegelPoint p;
    p.z(0, 0) = cplx(0, 1);
    p.z(1, 1) = cplx(0, 1);
    return p;
  }
};

template <class T>
Mat2<T> j_factor_m(const Mat4<T>& g, const Mat2<T>& z) {
  return blockC(g) * z + blockD(g);
}

inline Mat2<cplx> j_factor(const GroupElement& g, const SiegelPoint& z) {
  return j_factor_m(complexify(g.m), z.z);
}

inline SiegelPoint siegel_action(const GroupElement& g, const SiegelPoint& z,
                                 const Tolerances& = default_tol()) {
  Mat4<cplx> gc = complexify(g.m);
  Mat2<cplx> num = blockA(gc) * z.z + blockB(gc);
  Mat2<cplx> den = j_factor_m(gc, z.z);
  cplx det = det2(den);
  if (std::abs(det) < 1e-12 * (frob_norm(complexify(g.m)) + 1.0))
    throw SingularAutomorphyFactor("det(CZ+D) ~ 0");
  SiegelPoint r;
  r.z = (num * adjugate2(den)) * (cplx(1.0) / det);
  // symmetrize away roundoff
  cplx off = 0.5 * (r.z(0, 1) + r.z(1, 0));
  r.z(0, 1) = off;
  r.z(1, 0) = off;
  return r;
}

/// tr(g<Z>) as adjugate/det quotient; jet-capable.
template <class T>
T siegel_trace(const Mat4<T>& g, const Mat2<T>& z) {
  Mat2<T> num = blockA(g) * z + blockB(g);
  Mat2<T> den = j_factor_m(g, z);
  return (num * adjugate2(den)).trace() / det2(den);
}

/// K^1 coordinate rotations r1..r4.
template <class T>
Mat4<T> rotation_m(int i, const T& phi) {
  using std::cos;
  using std::sin;
  T c = cos(phi), s = sin(phi);
  Mat4<T> r = Mat4<T>::identity();
  switch (i) {
    case 1:
      r(0, 0) = c; r(0, 1) = s; r(1, 0) = -s; r(1, 1) = c;
      r(2, 2) = c; r(2, 3) = s; r(3, 2) = -s; r(3, 3) = c;
      break;
    case 2:
      r(0, 0) = c; r(0, 3) = s; r(1, 1) = c; r(1, 2) = s;
      r(2, 1) = -s; r(2, 2) = c; r(3, 0) = -s; r(3, 3) = c;
      break;
    case 3:
      r(0, 0) = c; r(0, 2) = s; r(2, 0) = -s; r(2, 2) = c;
      break;
    case 4:
      r(1, 1) = c; r(1, 3) = s; r(3, 1) = -s; r(3, 3) = c;
      break;
    default:
      throw std::invalid_argument("rotation index must be 1..4");
  }
  return r;
}

inline GroupElement rotation(int i, double phi) {
  GroupElement g;
  g.m = rotation_m(i, phi);
  g.mu2 = 1.0;
  return g;
}

enum class Flavor { nonsplit, split };

/// Coset chart coordinates (lambda, zeta, phi1, phi2).
struct ChartPoint {
  Flavor flavor = Flavor::nonsplit;
  double lambda = 1.0;
  double zeta = 1.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// h(lambda,zeta,phi1,phi2) = diag(l z, l/z, 1/z, z) r1(phi1) r2(phi2).
template <class T>
Mat4<T> chart_nonsplit_m(const T& lambda, const T& zeta, const T& p1, const T& p2) {
  Mat4<T> d;
  T zi = T(1.0) / zeta;
  d(0, 0) = lambda * zeta;
  d(1, 1) = lambda * zi;
  d(2, 2) = zi;
  d(3, 3) = zeta;
  return d * rotation_m(1, p1) * rotation_m(2, p2);
}

/// Split chart: block(lambda t0 [[1,z],[0,1]], det(t0) t(t0)^{-1} [[1,0],[-z,1]]) r1 r2,
/// t0 = [[1,1],[1,-1]]. Multiplier is -2 lambda.
template <class T>
Mat4<T> chart_split_m(const T& lambda, const T& zeta, const T& p1, const T& p2) {
  Mat4<T> d;
  d(0, 0) = lambda; d(0, 1) = lambda * (zeta + T(1.0));
  d(1, 0) = lambda; d(1, 1) = lambda * (zeta - T(1.0));
  d(2, 2) = zeta - T(1.0); d(2, 3) = T(-1.0);
  d(3, 2) = -zeta - T(1.0); d(3, 3) = T(1.0);
  return d * rotation_m(1, p1) * rotation_m(2, p2);
}

inline GroupElement chart_element(const ChartPoint& p) {
  Mat4<double> m = (p.flavor == Flavor::nonsplit)
                       ? chart_nonsplit_m<double>(p.lambda, p.zeta, p.phi1, p.phi2)
                       : chart_split_m<double>(p.lambda, p.zeta, p.phi1, p.phi2);
  return GroupElement(m);
}

/// Unipotent [[I,X],[0,I]], X = [[x,y],[y,z]].
template <class T>
Mat4<T> unipotent_m(const T& x, const T& y, const T& z) {
  Mat4<T> u = Mat4<T>::identity();
  u(0, 2) = x; u(0, 3) = y; u(1, 2) = y; u(1, 3) = z;
  return u;
}

/// Non-split torus element gamma * r1(delta), the GL(2) embedding of
/// gamma*rot(delta) into the Levi.
template <class T>
Mat4<T> torus_nonsplit_m(const T& gamma, const T& delta) {
  return rotation_m(1, delta) * gamma;
}

/// Split torus element: embedding of t0 diag(a,b) t0^{-1}.
template <class T>
Mat4<T> torus_split_m(const T& a, const T& b) {
  T c = (a + b) * T(0.5), d = (a - b) * T(0.5);
  Mat4<T> t;
  t(0, 0) = c; t(0, 1) = d; t(1, 0) = d; t(1, 1) = c;
  t(2, 2) = c; t(2, 3) = -d; t(3, 2) = -d; t(3, 3) = c;
  return t;
}

/// The polynomial w(h), in the denominator-free (adjugate) form
///   i [ det J(h,I) tr((A Z' + B) adj(C Z' + D)) - det J(h,Z') tr((A I + B) adj(C I + D)) ]
/// with I = diag(i,i), Z' = diag(-i,i). Polynomial in the entries.
template <class T>
T w_poly_m(const Mat4<T>& h) {
  Mat2<T> Z0, Z1;
  Z0(0, 0) = T(cplx(0, 1)); Z0(1, 1) = T(cplx(0, 1));
  Z1(0, 0) = T(cplx(0, -1)); Z1(1, 1) = T(cplx(0, 1));
  Mat2<T> A = blockA(h), B = blockB(h), C = blockC(h), D = blockD(h);
  Mat2<T> N0 = C * Z0 + D, N1 = C * Z1 + D;
  Mat2<T> M0 = A * Z0 + B, M1 = A * Z1 + B;
  T t1 = det2(N0) * (M1 * adjugate2(N1)).trace();
  T t0 = det2(N1) * (M0 * adjugate2(N0)).trace();
  return T(cplx(0, 1)) * (t1 - t0);
}

inline cplx w_poly(const GroupElement& g) { return w_poly_m(complexify(g.m)); }

/// Norm (mu2^{-2} + sum g_ij^2)^{1/2} from the growth condition.
inline double group_norm(const GroupElement& g) {
  double s = 1.0 / (g.mu2 * g.mu2);
  for (double v : g.m.a) s += v * v;
  return std::sqrt(s);
}

/// Scaling-and-squaring Pade(6) matrix exponential; used only for short
/// verification curves g exp(tL).
Mat4<double> mat_exp(const Mat4<double>& x);

/// All eleven non-split coset parameters; reassembly is
/// gamma r1(delta) u(x,y,z) h(lambda,zeta,phi1,phi2) r3(phi3) r4(phi4)
/// (split: u t(a,b) hhat(...) r3 r4, with (gamma,delta) read as (a,b)).
struct CosetCoords {
  Flavor flavor = Flavor::nonsplit;
  double gamma = 1.0, delta = 0.0;   // split: a, b
  double x = 0.0, y = 0.0, z = 0.0;
  ChartPoint chart;
  double phi3 = 0.0, phi4 = 0.0;
};

template <class T>
Mat4<T> assemble_m(Flavor flavor, const T& g1, const T& g2, const T& x, const T& y, const T& z,
                   const T& lambda, const T& zeta, const T& p1, const T& p2, const T& p3,
                   const T& p4) {
  Mat4<T> pre;
  if (flavor == Flavor::nonsplit)
    pre = torus_nonsplit_m(g1, g2) * unipotent_m(x, y, z);
  else
    pre = unipotent_m(x, y, z) * torus_split_m(g1, g2);
  Mat4<T> h = (flavor == Flavor::nonsplit) ? chart_nonsplit_m(lambda, zeta, p1, p2)
                                           : chart_split_m(lambda, zeta, p1, p2);
  return pre * h * rotation_m(3, p3) * rotation_m(4, p4);
}

inline Mat4<double> assemble(const CosetCoords& c) {
  return assemble_m<double>(c.flavor, c.gamma, c.delta, c.x, c.y, c.z, c.chart.lambda,
                            c.chart.zeta, c.chart.phi1, c.chart.phi2, c.phi3, c.phi4);
}

/// Random factored element in the Newton basin; the factors are kept so
/// transformation-property tests know the exact (gamma, delta, x, y, z).
struct CosetSample {
  CosetCoords coords;
  GroupElement g;
};

CosetSample sample_nonsplit(std::mt19937_64& rng, double guard = 0.05);

} // namespace gsp4

#endif
