#ifndef GSP4_DUAL_HPP
#define GSP4_DUAL_HPP

#include <cmath>

namespace gsp4 {

/// Plain real first-order dual, used for the analytic Jacobian columns of
/// the Newton coset solver (one parameter seeded at a time).
struct Dual {
  double v = 0, d = 0;
  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT
  Dual(double value, double deriv) : v(value), d(deriv) {}

  Dual operator+(const Dual& o) const { return {v + o.v, d + o.d}; }
  Dual operator-(const Dual& o) const { return {v - o.v, d - o.d}; }
  Dual operator-() const { return {-v, -d}; }
  Dual operator*(const Dual& o) const { return {v * o.v, d * o.v + v * o.d}; }
  Dual operator/(const Dual& o) const {
    double iv = 1.0 / o.v;
    return {v * iv, (d - v * o.d * iv) * iv};
  }
  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
};

inline Dual operator*(double s, const Dual& x) { return {s * x.v, s * x.d}; }
inline Dual operator/(double s, const Dual& x) { return Dual(s) / x; }
inline Dual sin(const Dual& x) { return {std::sin(x.v), std::cos(x.v) * x.d}; }
inline Dual cos(const Dual& x) { return {std::cos(x.v), -std::sin(x.v) * x.d}; }
inline Dual sqrt(const Dual& x) {
  double r = std::sqrt(x.v);
  return {r, 0.5 * x.d / r};
}
inline Dual exp(const Dual& x) {
  double e = std::exp(x.v);
  return {e, e * x.d};
}

} // namespace gsp4

#endif
