#include "gsp4/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace gsp4 {

cplx tanh_sinh(const std::function<cplx(double)>& f, double a, double b, double tol,
               int max_level) {
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  const double tmax = 3.8;  // tanh(pi/2 sinh(3.8)) is 1 to machine precision
  auto node = [&](double t, double& x, double& w) {
    double sh = M_PI_2 * std::sinh(t);
    double ch = std::cosh(sh);
    x = std::tanh(sh);
    w = M_PI_2 * std::cosh(t) / (ch * ch);
  };
  double h = 1.0;
  double x, w;
  node(0.0, x, w);
  cplx sum = f(mid) * w;
  cplx prev;
  for (int level = 0; level < max_level; ++level) {
    // add the new odd multiples of h/2 (level 0 adds +-h, +-2h, ...)
    cplx add = 0;
    if (level == 0) {
      for (double t = h; t <= tmax; t += h) {
        node(t, x, w);
        double xa = mid - half * x, xb = mid + half * x;
        add += w * (f(xa) + f(xb));
      }
    } else {
      for (double t = 0.5 * h; t <= tmax; t += h) {
        node(t, x, w);
        double xa = mid - half * x, xb = mid + half * x;
        add += w * (f(xa) + f(xb));
      }
    }
    if (level == 0) {
      sum += add;
      prev = sum * h;
      continue;
    }
    sum += add;
    h *= 0.5;
    cplx cur = sum * h;
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur * half;
    prev = cur;
  }
  return prev * half;
}

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(n, std::move(r)).first->second;
}

cplx gauss_panel(const std::function<cplx(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_rule(n);
  double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  cplx s = 0;
  for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

cplx log_panels(const std::function<cplx(double)>& f, double a, double b, int panels, int order,
                Exec mode) {
  const double ratio = std::pow(b / a, 1.0 / panels);
  std::vector<cplx> parts(static_cast<std::size_t>(panels), cplx(0.0));
  for_each_index(
      std::size_t(panels),
      [&](std::size_t i) {
        double lo = a * std::pow(ratio, double(i));
        double hi = lo * ratio;
        parts[i] = gauss_panel(f, lo, hi, order);
      },
      mode);
  cplx s = 0;
  for (const cplx& p : parts) s += p;
  return s;
}

} // namespace gsp4
