#ifndef GSP4_CHART_JET_HPP
#define GSP4_CHART_JET_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "gsp4/errors.hpp"
#include "gsp4/mat.hpp"

namespace gsp4 {

/// Dense truncated Taylor expansion in the four chart variables
/// (lambda, zeta, phi1, phi2) at a point, total degree capped. Coefficients
/// are stored graded: degree-d block holds all monomials of total degree d,
/// ordered by a fixed ranking of the (e_zeta, e_phi1, e_phi2) triple; the
/// lambda exponent is d minus the triple's sum. The high-order K-type ladder
/// runs entirely on these.
class ChartJet {
public:
  static constexpr int kMaxOrder = 32;
  static constexpr int kVars = 4;

  struct Tables {
    // triple = (e1,e2,e3) exponents of (zeta,phi1,phi2); code = (e1*33+e2)*33+e3
    std::vector<int> code;              // per triple rank
    std::vector<std::array<uint8_t, 3>> exps;
    std::vector<int> tsum;              // e1+e2+e3 per rank
    std::vector<int> rank_of_code;      // size 33^3
    std::array<int, kMaxOrder + 2> offset4{};   // C(d+3,4): start of degree-d block
    std::array<int, kMaxOrder + 1> tcount{};    // C(d+3,3): triples with sum<=d
  };
  static const Tables& tables();

  int order = 0;
  std::vector<cplx> c;

  ChartJet() : c(1) {}
  explicit ChartJet(int ord) : order(ord), c(tables().offset4[ord + 1]) {}
  ChartJet(int ord, cplx value) : ChartJet(ord) { c[0] = value; }

  static ChartJet constant(int ord, cplx v) { return ChartJet(ord, v); }
  /// v + 1*eps_var; var indexes (lambda,zeta,phi1,phi2) = (0,1,2,3).
  static ChartJet variable(int ord, int var, double v) {
    ChartJet x(ord, cplx(v));
    if (ord >= 1) {
      const Tables& tb = tables();
      int q = (var == 0) ? 0 : tb.rank_of_code[var == 1 ? 33 * 33 : (var == 2 ? 33 : 1)];
      x.c[tb.offset4[1] + q] = cplx(1.0);
    }
    return x;
  }

  cplx value() const { return c[0]; }

  ChartJet truncated(int ord) const {
    if (ord >= order) return *this;
    ChartJet r(ord);
    std::copy(c.begin(), c.begin() + r.c.size(), r.c.begin());
    return r;
  }

  ChartJet operator+(const ChartJet& o) const {
    int ord = std::min(order, o.order);
    ChartJet r = truncated(ord);
    const std::size_t n = r.c.size();
    for (std::size_t i = 0; i < n; ++i) r.c[i] += o.c[i];
    return r;
  }
  ChartJet operator-(const ChartJet& o) const {
    int ord = std::min(order, o.order);
    ChartJet r = truncated(ord);
    const std::size_t n = r.c.size();
    for (std::size_t i = 0; i < n; ++i) r.c[i] -= o.c[i];
    return r;
  }
  ChartJet operator-() const {
    ChartJet r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  ChartJet operator*(const ChartJet& o) const;
  ChartJet operator*(cplx s) const {
    ChartJet r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  ChartJet& operator+=(const ChartJet& o) { *this = *this + o; return *this; }

  /// d/d var; resulting jet is exact to order-1.
  ChartJet partial(int var) const;

  /// Nonzero-entry count (cheap sparsity probe used by tests/benchmarks).
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& v : c) n += (v != cplx(0.0));
    return n;
  }
};

inline ChartJet operator*(cplx s, const ChartJet& x) { return x * s; }
inline ChartJet operator*(double s, const ChartJet& x) { return x * cplx(s); }
inline ChartJet operator+(cplx s, const ChartJet& x) { return ChartJet::constant(x.order, s) + x; }
inline ChartJet operator-(cplx s, const ChartJet& x) { return ChartJet::constant(x.order, s) - x; }
inline ChartJet operator+(const ChartJet& x, cplx s) { return x + ChartJet::constant(x.order, s); }
inline ChartJet operator-(const ChartJet& x, cplx s) { return x - ChartJet::constant(x.order, s); }
inline ChartJet operator+(double s, const ChartJet& x) { return cplx(s) + x; }
inline ChartJet operator-(double s, const ChartJet& x) { return cplx(s) - x; }
inline ChartJet operator+(const ChartJet& x, double s) { return x + cplx(s); }
inline ChartJet operator-(const ChartJet& x, double s) { return x - cplx(s); }

/// sum_p d[p] * nil(x)^p, the common core of all analytic functions on jets.
ChartJet jet_series(const ChartJet& x, const std::vector<cplx>& d);

ChartJet inv(const ChartJet& x);
ChartJet exp(const ChartJet& x);
ChartJet log(const ChartJet& x);
ChartJet pow(const ChartJet& x, cplx e);
ChartJet pow_int(const ChartJet& x, long n);
ChartJet sqrt(const ChartJet& x);
ChartJet sin(const ChartJet& x);
ChartJet cos(const ChartJet& x);
ChartJet tan(const ChartJet& x);
inline ChartJet operator/(const ChartJet& a, const ChartJet& b) { return a * inv(b); }
inline ChartJet operator/(const ChartJet& a, cplx b) { return a * (cplx(1.0) / b); }
inline ChartJet operator/(cplx a, const ChartJet& b) { return a * inv(b); }
inline ChartJet operator/(double a, const ChartJet& b) { return cplx(a) * inv(b); }

} // namespace gsp4

#endif
