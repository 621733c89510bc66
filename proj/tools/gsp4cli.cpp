// gsp4: evaluation and verification front end for the GSp(4,R) Bessel machinery.
#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>

#include "gsp4/bessel.hpp"
#include "gsp4/coset.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/lie_derivative.hpp"
#include "gsp4/parallel.hpp"
#include "gsp4/split.hpp"
#include "gsp4/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace gsp4;

namespace {

// JSON printer with a fixed 17-significant-digit float format so identical
// runs are byte-identical regardless of the library's shortest-round-trip
// heuristics.
void dump_json(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += it.key();
        out += "\":";
        dump_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_json(v, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%" PRId64, j.get<int64_t>());
      out += buf;
      break;
    }
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::string:
      out += '"';
      out += j.get<std::string>();
      out += '"';
      break;
    default:
      out += "null";
  }
}

void emit(const json& j) {
  std::string s;
  dump_json(j, s);
  std::printf("%s\n", s.c_str());
}

ChartPoint sample_point(std::mt19937_64& rng) {
  auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  return {Flavor::nonsplit, uni(0.5, 1.6), uni(1.07, 1.8), uni(-0.5, 0.5), uni(-0.35, 0.35)};
}

int cmd_lie_table() {
  TableReport rep = verify_mult_table();
  json out;
  out["command"] = "verify lie-table";
  out["passed"] = rep.passed;
  out["failed"] = rep.failed;
  out["max_deviation"] = rep.max_deviation;
  emit(out);
  return rep.failed == 0 ? 0 : 1;
}

struct BesselArgs {
  int l = 4, lp = 2, m = 0;
  double s_re = 0, s_im = 0;
  double lambda = 1, zeta = 1.2, phi1 = 0, phi2 = 0;
  std::string suite = "all";
  int samples = 100;
  uint64_t seed = 1;
};

int cmd_bessel_eval(const BesselArgs& a) {
  cplx v = B0_coords({Flavor::nonsplit, a.lambda, a.zeta, a.phi1, a.phi2}, a.l, a.lp, a.m,
                     cplx(a.s_re, a.s_im));
  json out;
  out["command"] = "bessel eval";
  out["re"] = v.real();
  out["im"] = v.imag();
  emit(out);
  return 0;
}

int cmd_bessel_verify(const BesselArgs& a) {
  cplx s(a.s_re, a.s_im);
  json suites = json::array();
  bool ok = true;

  auto run_pde = [&]() {
    std::mt19937_64 rng(a.seed);
    std::vector<ChartPoint> pts(std::size_t(a.samples));
    for (auto& p : pts) p = sample_point(rng);
    std::vector<double> worst(pts.size(), 0.0);
    for_each_index(pts.size(), [&](std::size_t i) {
      auto r = pde_residuals(pts[i], a.l, a.lp, a.m, s);
      double scale = std::abs(B0_coords(pts[i], a.l, a.lp, a.m, s));
      for (auto& ri : r) worst[i] = std::max(worst[i], std::abs(ri) / scale);
    });
    double w = 0;
    for (double v : worst) w = std::max(w, v);
    json rep;
    rep["suite"] = "pde";
    rep["max_rel_residual"] = w;
    rep["tolerance"] = 1e-9;
    rep["pass"] = w < 1e-9;
    suites.push_back(rep);
    ok = ok && w < 1e-9;
  };
  auto run_annihilation = [&]() {
    std::mt19937_64 rng(a.seed);
    B0Global b0{a.l, a.lp, a.m, s};
    double w = 0;
    for (int i = 0; i < a.samples; ++i) {
      CosetSample smp = sample_nonsplit(rng);
      double scale = std::abs(B0_global(smp.g, a.l, a.lp, a.m, s));
      for (CplxTag t : {CplxTag::Nplus, CplxTag::Xminus, CplxTag::P1minus, CplxTag::P0minus})
        w = std::max(w, std::abs(lie_derivative(b0, smp.g.m, std::vector<CplxTag>{t})) / scale);
    }
    json rep;
    rep["suite"] = "annihilation";
    rep["max_rel_derivative"] = w;
    rep["tolerance"] = 1e-8;
    rep["pass"] = w < 1e-8;
    suites.push_back(rep);
    ok = ok && w < 1e-8;
  };
  auto run_weights = [&]() {
    std::mt19937_64 rng(a.seed);
    B0Global b0{a.l, a.lp, a.m, s};
    double w = 0;
    for (int i = 0; i < a.samples; ++i) {
      CosetSample smp = sample_nonsplit(rng);
      cplx base = B0_global(smp.g, a.l, a.lp, a.m, s);
      cplx dz = lie_derivative(b0, smp.g.m, std::vector<CplxTag>{CplxTag::Z});
      cplx dzp = lie_derivative(b0, smp.g.m, std::vector<CplxTag>{CplxTag::Zp});
      w = std::max(w, std::abs(dz - double(a.l) * base) / (std::abs(base) * a.l));
      w = std::max(w, std::abs(dzp - double(a.lp) * base) / (std::abs(base) * a.lp));
    }
    json rep;
    rep["suite"] = "weights";
    rep["max_rel_deviation"] = w;
    rep["tolerance"] = 1e-9;
    rep["pass"] = w < 1e-9;
    suites.push_back(rep);
    ok = ok && w < 1e-9;
  };
  auto run_coeffs = [&]() {
    double w = 0;
    std::vector<ChartPoint> pts = {{Flavor::nonsplit, 1.1, 1.4, 0.2, 0.3},
                                   {Flavor::nonsplit, 0.95, 1.35, -0.17, 0.23},
                                   {Flavor::nonsplit, 1.25, 1.6, 0.31, -0.14}};
    for (const auto& p : pts)
      for (int i = 0; i < kNumTags; ++i)
        for (auto& row : verify_coefficients(RealTag(i), p, 1e-2))
          w = std::max(w, row.deviation);
    json rep;
    rep["suite"] = "coeffs";
    rep["max_deviation"] = w;
    rep["tolerance"] = 1e-6;
    rep["pass"] = w < 1e-6;
    suites.push_back(rep);
    ok = ok && w < 1e-6;
  };

  if (a.suite == "pde" || a.suite == "all") run_pde();
  if (a.suite == "annihilation" || a.suite == "all") run_annihilation();
  if (a.suite == "weights" || a.suite == "all") run_weights();
  if (a.suite == "coeffs" || a.suite == "all") run_coeffs();

  json out;
  out["command"] = "bessel verify";
  out["suites"] = suites;
  out["pass"] = ok;
  emit(out);
  return ok ? 0 : 1;
}

int cmd_ladder(const BesselArgs& a, const std::string& csv_path) {
  cplx s(a.s_re, a.s_im);
  int k = (a.l - a.lp) / 2;
  Ladder lad(a.l, a.lp, a.m, s, k);
  std::vector<double> las = {0.6, 0.8, 1.0, 1.2, 1.4};
  std::vector<double> zes = {1.15, 1.3, 1.45, 1.6, 1.75};
  double max_np = 0;
  std::string csv = "lambda,zeta,phi1,phi2,re,im\n";
  std::vector<std::pair<double, double>> grid;
  for (double la : las)
    for (double ze : zes) grid.push_back({la, ze});
  std::vector<LadderValue> vals(grid.size());
  for_each_index(grid.size(), [&](std::size_t i) {
    vals[i] = lad.eval(grid[i].first, grid[i].second);
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    max_np = std::max(max_np, std::abs(vals[i].nplus) / std::abs(vals[i].value));
    char line[160];
    std::snprintf(line, sizeof line, "%.17g,%.17g,0,0,%.17g,%.17g\n", grid[i].first,
                  grid[i].second, vals[i].value.real(), vals[i].value.imag());
    csv += line;
  }
  if (!csv_path.empty()) {
    FILE* f = std::fopen(csv_path.c_str(), "w");
    if (!f) {
      std::fprintf(stderr, "cannot open %s\n", csv_path.c_str());
      return 2;
    }
    std::fputs(csv.c_str(), f);
    std::fclose(f);
  }
  json out;
  out["command"] = "ladder";
  out["weight_l"] = lad.weight().l;
  out["weight_lp"] = lad.weight().lp;
  out["max_rel_nplus_residual"] = max_np;
  out["tolerance"] = 1e-7;
  out["pass"] = max_np < 1e-7;
  if (csv_path.empty()) out["csv"] = csv;
  emit(out);
  return max_np < 1e-7 ? 0 : 1;
}

int cmd_split_demo(int l, int lp, double beta_max) {
  GrowthReport rep = growth_violation(l, lp, 0.0, 0.0, beta_max);
  std::printf("t,log_f,log_norm");
  for (auto& row : rep.rows) std::printf(",gap_beta_%g", row.beta);
  std::printf("\n");
  for (std::size_t i = 0; i < rep.ts.size(); ++i) {
    std::printf("%.17g,%.17g,%.17g", rep.ts[i], rep.log_f[i], rep.log_norm[i]);
    for (auto& row : rep.rows)
      std::printf(",%.17g", rep.log_f[i] - row.beta * rep.log_norm[i]);
    std::printf("\n");
  }
  return rep.all_diverge ? 0 : 1;
}

int cmd_zeta(int l, int n, int D, double s, double r, double c1v, bool quadrature,
             const std::string& table_src) {
  ZetaParams p;
  p.l = l; p.n = n; p.D = D; p.s = s; p.r = r; p.c1 = c1v;
  CkjTable table;
  double ratio = 1.0;
  if (table_src == "ladder") {
    ExtractResult er = extract_ckj(l, n);
    table = er.fitted;
    ratio = er.ratio_to_closed;
  } else {
    table = closed_ckj_table(l, n);
  }
  cplx closed = z_infinity(p.s, p, table);
  json out;
  out["command"] = "zeta";
  json params;
  params["l"] = l; params["n"] = n; params["D"] = D;
  params["s"] = s; params["r"] = r; params["c1"] = c1v;
  params["table"] = table_src;
  params["table_ratio_to_closed"] = ratio;
  out["params"] = params;
  out["closed_re"] = closed.real();
  out["closed_im"] = closed.imag();
  int rc = 0;
  if (quadrature) {
    cplx qsum = 0;
    for (auto& kv : table.c)
      qsum += kv.second * z_kj_quadrature(p.s, kv.first.first, kv.first.second, p);
    double rel = std::abs(qsum - closed) / std::abs(closed);
    out["quadrature_re"] = qsum.real();
    out["quadrature_im"] = qsum.imag();
    out["rel_err"] = rel;
    rc = rel < 1e-6 ? 0 : 1;
  }
  emit(out);
  return rc;
}

int cmd_lp_check(int l, int lp, int m, double pexp) {
  LpReport rep = lp_norm_check(l, lp, m, pexp);
  json out;
  out["command"] = "lp-check";
  out["convergent"] = rep.convergent;
  out["partials"] = rep.partials;
  out["numeric_consistent"] = rep.numeric_consistent;
  emit(out);
  return rep.numeric_consistent ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"GSp(4,R) Bessel models: evaluation and verification"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  auto* lie = verify->add_subcommand("lie-table", "check the 10x10 bracket table");

  BesselArgs ba;
  std::string csv_path;
  auto* bessel = app.add_subcommand("bessel", "Bessel function evaluation/verification");
  bessel->require_subcommand(1);
  auto* beval = bessel->add_subcommand("eval", "evaluate B0 on the chart");
  beval->add_option("--l", ba.l)->required();
  beval->add_option("--lp", ba.lp)->required();
  beval->add_option("--m", ba.m)->required();
  beval->add_option("--s", ba.s_re);
  beval->add_option("--s-im", ba.s_im);
  beval->add_option("--lambda", ba.lambda)->required();
  beval->add_option("--zeta", ba.zeta)->required();
  beval->add_option("--phi1", ba.phi1);
  beval->add_option("--phi2", ba.phi2);
  auto* bverify = bessel->add_subcommand("verify", "run verification suites");
  bverify->add_option("--l", ba.l)->required();
  bverify->add_option("--lp", ba.lp)->required();
  bverify->add_option("--m", ba.m)->required();
  bverify->add_option("--s", ba.s_re);
  bverify->add_option("--suite", ba.suite)
      ->check(CLI::IsMember({"pde", "annihilation", "coeffs", "weights", "all"}));
  bverify->add_option("--samples", ba.samples);
  bverify->add_option("--seed", ba.seed);

  auto* ladder = app.add_subcommand("ladder", "K-type ladder up to (l,l)");
  ladder->add_option("--l", ba.l)->required();
  ladder->add_option("--lp", ba.lp)->required();
  ladder->add_option("--m", ba.m)->required();
  ladder->add_option("--s", ba.s_re);
  ladder->add_option("--csv", csv_path);

  int sl = 10, slp = 10;
  double beta_max = 50;
  auto* split = app.add_subcommand("split", "split-case demonstrations");
  split->require_subcommand(1);
  auto* sdemo = split->add_subcommand("demo", "growth violation table (CSV)");
  sdemo->add_option("--l", sl);
  sdemo->add_option("--lp", slp);
  sdemo->add_option("--beta-max", beta_max);

  int zl = 10, zn = 3, zD = 4;
  double zs = 1.0, zr = 2.0, zc1 = 1.0;
  bool zquad = false;
  std::string ztable = "closed";
  auto* zeta = app.add_subcommand("zeta", "archimedean zeta integral");
  zeta->add_option("--l", zl)->required();
  zeta->add_option("--n", zn)->required();
  zeta->add_option("--D", zD)->required();
  zeta->add_option("--s", zs)->required();
  zeta->add_option("--r", zr)->required();
  zeta->add_option("--c1", zc1)->required();
  zeta->add_flag("--quadrature", zquad);
  zeta->add_option("--table", ztable)->check(CLI::IsMember({"closed", "ladder"}));

  int ll = 6, llp = 3, lm = 1;
  double lpow = 2.0;
  auto* lpc = app.add_subcommand("lp-check", "L^p classification of B0");
  lpc->add_option("--l", ll)->required();
  lpc->add_option("--lp", llp)->required();
  lpc->add_option("--m", lm)->required();
  lpc->add_option("--p", lpow)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lie->parsed()) return cmd_lie_table();
    if (beval->parsed()) return cmd_bessel_eval(ba);
    if (bverify->parsed()) return cmd_bessel_verify(ba);
    if (ladder->parsed()) return cmd_ladder(ba, csv_path);
    if (sdemo->parsed()) return cmd_split_demo(sl, slp, beta_max);
    if (zeta->parsed()) return cmd_zeta(zl, zn, zD, zs, zr, zc1, zquad, ztable);
    if (lpc->parsed()) return cmd_lp_check(ll, llp, lm, lpow);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
