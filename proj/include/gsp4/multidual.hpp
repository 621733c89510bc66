#ifndef GSP4_MULTIDUAL_HPP
#define GSP4_MULTIDUAL_HPP

#include <array>
#include <cmath>
#include <complex>

#include "gsp4/errors.hpp"
#include "gsp4/mat.hpp"

namespace gsp4 {

/// First-order-in-each-variable truncated polynomial over up to 6 nilpotents:
///   x = sum over subsets S of {eps_1..eps_k} of c[S] * prod(eps_i, i in S),
/// with eps_i^2 = 0. Coefficients are complex, subsets are bitmasks.
/// This is the carrier for iterated Lie derivatives: the coefficient of
/// eps_1...eps_k of F(g (1+eps_1 L_1) ... (1+eps_k L_k)) is the mixed
/// derivative (L_1.(L_2.(...F)))(g).
class MultiDual {
public:
  static constexpr int kMaxVars = 6;

  int nvars = 0;
  std::array<cplx, 64> c{};

  MultiDual() = default;
  explicit MultiDual(double v) { c[0] = v; }
  MultiDual(cplx v) { c[0] = v; }  // NOLINT: implicit by design, mirrors scalar use

  static MultiDual variable(int k, int i, cplx value) {
    MultiDual x;
    x.nvars = k;
    x.c[0] = value;
    x.c[std::size_t(1) << i] = cplx(1.0);
    return x;
  }
  static MultiDual constant(int k, cplx value) {
    MultiDual x;
    x.nvars = k;
    x.c[0] = value;
    return x;
  }

  cplx value() const { return c[0]; }
  int masks() const { return 1 << nvars; }

  MultiDual operator+(const MultiDual& o) const {
    MultiDual r;
    r.nvars = std::max(nvars, o.nvars);
    for (int m = 0; m < r.masks(); ++m) r.c[m] = c[m] + o.c[m];
    return r;
  }
  MultiDual operator-(const MultiDual& o) const {
    MultiDual r;
    r.nvars = std::max(nvars, o.nvars);
    for (int m = 0; m < r.masks(); ++m) r.c[m] = c[m] - o.c[m];
    return r;
  }
  MultiDual operator-() const {
    MultiDual r;
    r.nvars = nvars;
    for (int m = 0; m < masks(); ++m) r.c[m] = -c[m];
    return r;
  }
  MultiDual operator*(const MultiDual& o) const {
    MultiDual r;
    r.nvars = std::max(nvars, o.nvars);
    const int full = r.masks() - 1;
    for (int i = 0; i <= full; ++i) {
      if (c[i] == cplx(0.0)) continue;
      const int comp = full & ~i;
      // enumerate submasks j of comp, including 0
      int j = comp;
      while (true) {
        r.c[i | j] += c[i] * o.c[j];
        if (j == 0) break;
        j = (j - 1) & comp;
      }
    }
    return r;
  }
  MultiDual& operator+=(const MultiDual& o) { *this = *this + o; return *this; }
  MultiDual& operator-=(const MultiDual& o) { *this = *this - o; return *this; }
  MultiDual& operator*=(const MultiDual& o) { *this = *this * o; return *this; }

  /// Nilpotent part (constant term dropped).
  MultiDual nil() const {
    MultiDual r = *this;
    r.c[0] = cplx(0.0);
    return r;
  }
};

inline MultiDual operator*(double s, const MultiDual& x) { return MultiDual(cplx(s)) * x; }
inline MultiDual operator*(cplx s, const MultiDual& x) { return MultiDual(s) * x; }
inline MultiDual operator+(cplx s, const MultiDual& x) { return MultiDual(s) + x; }
inline MultiDual operator-(cplx s, const MultiDual& x) { return MultiDual(s) - x; }

/// sum_{p<=k} d[p] * n^p for nilpotent n; d[p] = f^(p)(x0)/p!.
inline MultiDual md_series(const MultiDual& x, const std::array<cplx, MultiDual::kMaxVars + 1>& d) {
  MultiDual n = x.nil();
  MultiDual pw = MultiDual::constant(x.nvars, cplx(1.0));
  MultiDual r = MultiDual::constant(x.nvars, d[0]);
  for (int p = 1; p <= x.nvars; ++p) {
    pw = pw * n;
    r += d[p] * pw;
  }
  return r;
}

inline MultiDual inv(const MultiDual& x) {
  cplx x0 = x.value();
  if (std::abs(x0) < 1e-280) throw SingularConstantTerm("multidual inv at zero");
  std::array<cplx, 7> d{};
  cplx t = 1.0 / x0;
  for (int p = 0; p <= MultiDual::kMaxVars; ++p) {
    d[p] = t;                       // (-1)^p / x0^{p+1}
    t = -t / x0;
  }
  return md_series(x, d);
}
inline MultiDual operator/(const MultiDual& a, const MultiDual& b) { return a * inv(b); }
inline MultiDual operator/(const MultiDual& a, double b) { return a * MultiDual(cplx(1.0 / b)); }
inline MultiDual operator/(cplx a, const MultiDual& b) { return MultiDual(a) * inv(b); }
inline MultiDual operator/(double a, const MultiDual& b) { return MultiDual(cplx(a)) * inv(b); }

inline MultiDual exp(const MultiDual& x) {
  std::array<cplx, 7> d{};
  cplx e = std::exp(x.value());
  double fact = 1;
  for (int p = 0; p <= MultiDual::kMaxVars; ++p) {
    d[p] = e / fact;
    fact *= (p + 1);
  }
  return md_series(x, d);
}
inline MultiDual log(const MultiDual& x) {
  cplx x0 = x.value();
  if (std::abs(x0) < 1e-280) throw SingularConstantTerm("multidual log at zero");
  std::array<cplx, 7> d{};
  d[0] = std::log(x0);
  cplx t = 1.0 / x0;
  for (int p = 1; p <= MultiDual::kMaxVars; ++p) {
    d[p] = ((p % 2) ? t : -t) / double(p);
    t /= x0;
  }
  return md_series(x, d);
}
inline MultiDual pow(const MultiDual& x, cplx e) { return exp(e * log(x)); }
inline MultiDual pow_int(const MultiDual& x, long n) {
  if (n < 0) return inv(pow_int(x, -n));
  MultiDual r = MultiDual::constant(x.nvars, cplx(1.0));
  MultiDual b = x;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}
inline MultiDual sqrt(const MultiDual& x) { return pow(x, cplx(0.5)); }
inline MultiDual sin(const MultiDual& x) {
  std::array<cplx, 7> d{};
  cplx s = std::sin(x.value()), co = std::cos(x.value());
  const cplx cyc[4] = {s, co, -s, -co};
  double fact = 1;
  for (int p = 0; p <= MultiDual::kMaxVars; ++p) {
    d[p] = cyc[p % 4] / fact;
    fact *= (p + 1);
  }
  return md_series(x, d);
}
inline MultiDual cos(const MultiDual& x) {
  std::array<cplx, 7> d{};
  cplx s = std::sin(x.value()), co = std::cos(x.value());
  const cplx cyc[4] = {co, -s, -co, s};
  double fact = 1;
  for (int p = 0; p <= MultiDual::kMaxVars; ++p) {
    d[p] = cyc[p % 4] / fact;
    fact *= (p + 1);
  }
  return md_series(x, d);
}
inline MultiDual tan(const MultiDual& x) {
  if (std::abs(std::cos(x.value())) < 1e-12) throw SingularConstantTerm("multidual tan at pole");
  return sin(x) / cos(x);
}

} // namespace gsp4

#endif
