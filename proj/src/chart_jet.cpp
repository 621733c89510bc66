#include "gsp4/chart_jet.hpp"

namespace gsp4 {

namespace {
long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
} // namespace

const ChartJet::Tables& ChartJet::tables() {
  static const Tables tb = [] {
    Tables t;
    t.rank_of_code.assign(33 * 33 * 33, -1);
    // triples ordered by total, then lex; this makes every degree-d block's
    // valid triples exactly the first C(d+3,3) ranks
    for (int s = 0; s <= kMaxOrder; ++s)
      for (int e1 = s; e1 >= 0; --e1)
        for (int e2 = s - e1; e2 >= 0; --e2) {
          int e3 = s - e1 - e2;
          int code = (e1 * 33 + e2) * 33 + e3;
          t.rank_of_code[code] = int(t.code.size());
          t.code.push_back(code);
          t.exps.push_back({uint8_t(e1), uint8_t(e2), uint8_t(e3)});
          t.tsum.push_back(s);
        }
    for (int d = 0; d <= kMaxOrder + 1; ++d) t.offset4[d] = int(binom(d + 3, 4));
    for (int d = 0; d <= kMaxOrder; ++d) t.tcount[d] = int(binom(d + 3, 3));
    return t;
  }();
  return tb;
}

ChartJet ChartJet::operator*(const ChartJet& o) const {
  const Tables& tb = tables();
  const int cap = std::min(order, o.order);
  ChartJet r(cap);

  // compact the right factor once, grouped by degree
  struct Ent { int code; cplx v; };
  std::vector<std::vector<Ent>> bent(cap + 1);
  for (int db = 0; db <= cap; ++db) {
    const int off = tb.offset4[db];
    const int n = tb.tcount[db];
    auto& dst = bent[db];
    for (int q = 0; q < n; ++q) {
      const cplx v = o.c[off + q];
      if (v != cplx(0.0)) dst.push_back({tb.code[q], v});
    }
  }

  for (int da = 0; da <= cap; ++da) {
    const int offa = tb.offset4[da];
    const int na = tb.tcount[da];
    for (int qa = 0; qa < na; ++qa) {
      const cplx va = c[offa + qa];
      if (va == cplx(0.0)) continue;
      const int codea = tb.code[qa];
      for (int db = 0; db + da <= cap; ++db) {
        cplx* out = r.c.data() + tb.offset4[da + db];
        for (const Ent& e : bent[db]) out[tb.rank_of_code[codea + e.code]] += va * e.v;
      }
    }
  }
  return r;
}

ChartJet ChartJet::partial(int var) const {
  const Tables& tb = tables();
  if (order == 0) throw JetOrderExhausted("chart jet order exhausted by partial()");
  ChartJet r(order - 1);
  const int sub = (var == 1) ? 33 * 33 : (var == 2 ? 33 : 1);
  for (int d = 1; d <= order; ++d) {
    const int off = tb.offset4[d];
    const int offd = tb.offset4[d - 1];
    const int n = tb.tcount[d];
    for (int q = 0; q < n; ++q) {
      const cplx v = c[off + q];
      if (v == cplx(0.0)) continue;
      if (var == 0) {
        const int e0 = d - tb.tsum[q];
        if (e0 >= 1) r.c[offd + q] += double(e0) * v;   // same triple, one block down
      } else {
        const auto& e = tb.exps[q];
        const int ev = e[var - 1];
        if (ev >= 1) r.c[offd + tb.rank_of_code[tb.code[q] - sub]] += double(ev) * v;
      }
    }
  }
  return r;
}

ChartJet jet_series(const ChartJet& x, const std::vector<cplx>& d) {
  ChartJet n = x;
  n.c[0] = cplx(0.0);
  ChartJet r = ChartJet::constant(x.order, d[0]);
  ChartJet pw = ChartJet::constant(x.order, cplx(1.0));
  const int pmax = std::min<int>(x.order, int(d.size()) - 1);
  for (int p = 1; p <= pmax; ++p) {
    pw = pw * n;    // min-degree of pw is p; multiply prunes above the cap
    r += d[p] * pw;
  }
  return r;
}

ChartJet inv(const ChartJet& x) {
  cplx x0 = x.value();
  if (std::abs(x0) < 1e-280) throw SingularConstantTerm("jet inv at zero");
  std::vector<cplx> d(x.order + 1);
  cplx t = 1.0 / x0;
  for (int p = 0; p <= x.order; ++p) {
    d[p] = t;
    t = -t / x0;
  }
  return jet_series(x, d);
}
ChartJet exp(const ChartJet& x) {
  std::vector<cplx> d(x.order + 1);
  cplx e = std::exp(x.value());
  double fact = 1;
  for (int p = 0; p <= x.order; ++p) {
    d[p] = e / fact;
    fact *= (p + 1);
  }
  return jet_series(x, d);
}
ChartJet log(const ChartJet& x) {
  cplx x0 = x.value();
  if (std::abs(x0) < 1e-280) throw SingularConstantTerm("jet log at zero");
  std::vector<cplx> d(x.order + 1);
  d[0] = std::log(x0);
  cplx t = 1.0 / x0;
  for (int p = 1; p <= x.order; ++p) {
    d[p] = ((p % 2) ? t : -t) / double(p);
    t /= x0;
  }
  return jet_series(x, d);
}
ChartJet pow(const ChartJet& x, cplx e) {
  cplx x0 = x.value();
  if (std::abs(x0) < 1e-280) throw SingularConstantTerm("jet pow at zero base");
  // binomial series: x0^e * sum C(e,p) (n/x0)^p
  std::vector<cplx> d(x.order + 1);
  cplx lead = std::pow(x0, e);
  cplx coef = 1.0;
  for (int p = 0; p <= x.order; ++p) {
    d[p] = lead * coef;
    coef *= (e - double(p)) / double(p + 1);
    lead /= x0;
  }
  return jet_series(x, d);
}
ChartJet pow_int(const ChartJet& x, long n) {
  if (n < 0) return inv(pow_int(x, -n));
  ChartJet r = ChartJet::constant(x.order, cplx(1.0));
  ChartJet b = x;
  while (n) {
    if (n & 1) r = r * b;
    if (n >>= 1) b = b * b;
  }
  return r;
}
ChartJet sqrt(const ChartJet& x) { return pow(x, cplx(0.5)); }
ChartJet sin(const ChartJet& x) {
  std::vector<cplx> d(x.order + 1);
  cplx s = std::sin(x.value()), co = std::cos(x.value());
  const cplx cyc[4] = {s, co, -s, -co};
  double fact = 1;
  for (int p = 0; p <= x.order; ++p) {
    d[p] = cyc[p % 4] / fact;
    fact *= (p + 1);
  }
  return jet_series(x, d);
}
ChartJet cos(const ChartJet& x) {
  std::vector<cplx> d(x.order + 1);
  cplx s = std::sin(x.value()), co = std::cos(x.value());
  const cplx cyc[4] = {co, -s, -co, s};
  double fact = 1;
  for (int p = 0; p <= x.order; ++p) {
    d[p] = cyc[p % 4] / fact;
    fact *= (p + 1);
  }
  return jet_series(x, d);
}
ChartJet tan(const ChartJet& x) {
  if (std::abs(std::cos(x.value())) < 1e-12) throw SingularConstantTerm("jet tan at pole");
  return sin(x) / cos(x);
}

} // namespace gsp4
