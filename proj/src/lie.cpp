#include "gsp4/lie.hpp"

#include <cmath>

#include "gsp4/errors.hpp"

namespace gsp4 {

namespace {

Mat4<double> real_mat(RealTag t) {
  Mat4<double> m;
  switch (t) {
    case RealTag::H1: m(0, 0) = 1; m(2, 2) = -1; break;
    case RealTag::H2: m(1, 1) = 1; m(3, 3) = -1; break;
    case RealTag::F:  m(0, 2) = 1; break;
    case RealTag::G:  m(2, 0) = 1; break;
    case RealTag::R:  m(1, 3) = 1; break;
    case RealTag::Rp: m(3, 1) = 1; break;
    case RealTag::P:  m(1, 0) = 1; m(2, 3) = -1; break;
    case RealTag::Pp: m(0, 1) = 1; m(3, 2) = -1; break;
    case RealTag::Q:  m(0, 3) = 1; m(1, 2) = 1; break;
    case RealTag::Qp: m(2, 1) = 1; m(3, 0) = 1; break;
  }
  return m;
}

Mat4<cplx> cplx_mat(CplxTag t) {
  const cplx i(0, 1);
  Mat4<cplx> m;
  auto half = [](std::initializer_list<std::pair<std::pair<int, int>, cplx>> entries) {
    Mat4<cplx> r;
    for (auto& e : entries) r(e.first.first, e.first.second) = 0.5 * e.second;
    return r;
  };
  switch (t) {
    case CplxTag::Z:
      m(0, 2) = -i; m(2, 0) = i;
      return m;
    case CplxTag::Zp:
      m(1, 3) = -i; m(3, 1) = i;
      return m;
    case CplxTag::Nplus:
      return half({{{0, 1}, 1}, {{0, 3}, -i}, {{1, 0}, -1}, {{1, 2}, -i},
                   {{2, 1}, i}, {{2, 3}, 1}, {{3, 0}, i}, {{3, 2}, -1}});
    case CplxTag::Nminus:
      return half({{{0, 1}, 1}, {{0, 3}, i}, {{1, 0}, -1}, {{1, 2}, i},
                   {{2, 1}, -i}, {{2, 3}, 1}, {{3, 0}, -i}, {{3, 2}, -1}});
    case CplxTag::Xplus:
      return half({{{0, 0}, 1}, {{0, 2}, i}, {{2, 0}, i}, {{2, 2}, -1}});
    case CplxTag::Xminus:
      return half({{{0, 0}, 1}, {{0, 2}, -i}, {{2, 0}, -i}, {{2, 2}, -1}});
    case CplxTag::P1plus:
      return half({{{0, 1}, 1}, {{0, 3}, i}, {{1, 0}, 1}, {{1, 2}, i},
                   {{2, 1}, i}, {{2, 3}, -1}, {{3, 0}, i}, {{3, 2}, -1}});
    case CplxTag::P1minus:
      return half({{{0, 1}, 1}, {{0, 3}, -i}, {{1, 0}, 1}, {{1, 2}, -i},
                   {{2, 1}, -i}, {{2, 3}, -1}, {{3, 0}, -i}, {{3, 2}, -1}});
    case CplxTag::P0plus:
      return half({{{1, 1}, 1}, {{1, 3}, i}, {{3, 1}, i}, {{3, 3}, -1}});
    case CplxTag::P0minus:
      return half({{{1, 1}, 1}, {{1, 3}, -i}, {{3, 1}, -i}, {{3, 3}, -1}});
  }
  return m;
}

// cell(row, col) = [row, col]; literal transcription of the table in the
// group/Lie-algebra section, verified by verify_mult_table().
struct TableData {
  std::array<std::array<Combo, kNumTags>, kNumTags> cell{};
  TableData() {
    auto set = [&](CplxTag a, CplxTag b, std::initializer_list<std::pair<CplxTag, double>> v) {
      Combo c{};
      for (auto& e : v) c.coef[int(e.first)] += e.second;
      cell[int(a)][int(b)] = c;
    };
    using T = CplxTag;
    // row Z
    set(T::Z, T::Nplus, {{T::Nplus, 1}});
    set(T::Z, T::Nminus, {{T::Nminus, -1}});
    set(T::Z, T::Xplus, {{T::Xplus, 2}});
    set(T::Z, T::Xminus, {{T::Xminus, -2}});
    set(T::Z, T::P1plus, {{T::P1plus, 1}});
    set(T::Z, T::P1minus, {{T::P1minus, -1}});
    // row Z'
    set(T::Zp, T::Nplus, {{T::Nplus, -1}});
    set(T::Zp, T::Nminus, {{T::Nminus, 1}});
    set(T::Zp, T::P1plus, {{T::P1plus, 1}});
    set(T::Zp, T::P1minus, {{T::P1minus, -1}});
    set(T::Zp, T::P0plus, {{T::P0plus, 2}});
    set(T::Zp, T::P0minus, {{T::P0minus, -2}});
    // row N+
    set(T::Nplus, T::Z, {{T::Nplus, -1}});
    set(T::Nplus, T::Zp, {{T::Nplus, 1}});
    set(T::Nplus, T::Nminus, {{T::Zp, 1}, {T::Z, -1}});
    set(T::Nplus, T::Xminus, {{T::P1minus, -1}});
    set(T::Nplus, T::P1plus, {{T::Xplus, 2}});
    set(T::Nplus, T::P1minus, {{T::P0minus, -2}});
    set(T::Nplus, T::P0plus, {{T::P1plus, 1}});
    // row N-
    set(T::Nminus, T::Z, {{T::Nminus, 1}});
    set(T::Nminus, T::Zp, {{T::Nminus, -1}});
    set(T::Nminus, T::Nplus, {{T::Z, 1}, {T::Zp, -1}});
    set(T::Nminus, T::Xplus, {{T::P1plus, -1}});
    set(T::Nminus, T::P1plus, {{T::P0plus, -2}});
    set(T::Nminus, T::P1minus, {{T::Xminus, 2}});
    set(T::Nminus, T::P0minus, {{T::P1minus, 1}});
    // row X+
    set(T::Xplus, T::Z, {{T::Xplus, -2}});
    set(T::Xplus, T::Nminus, {{T::P1plus, 1}});
    set(T::Xplus, T::Xminus, {{T::Z, 1}});
    set(T::Xplus, T::P1minus, {{T::Nplus, 1}});
    // row X-
    set(T::Xminus, T::Z, {{T::Xminus, 2}});
    set(T::Xminus, T::Nplus, {{T::P1minus, 1}});
    set(T::Xminus, T::Xplus, {{T::Z, -1}});
    set(T::Xminus, T::P1plus, {{T::Nminus, 1}});
    // row P1+
    set(T::P1plus, T::Z, {{T::P1plus, -1}});
    set(T::P1plus, T::Zp, {{T::P1plus, -1}});
    set(T::P1plus, T::Nplus, {{T::Xplus, -2}});
    set(T::P1plus, T::Nminus, {{T::P0plus, 2}});
    set(T::P1plus, T::Xminus, {{T::Nminus, -1}});
    set(T::P1plus, T::P1minus, {{T::Z, 1}, {T::Zp, 1}});
    set(T::P1plus, T::P0minus, {{T::Nplus, 1}});
    // row P1-
    set(T::P1minus, T::Z, {{T::P1minus, 1}});
    set(T::P1minus, T::Zp, {{T::P1minus, 1}});
    set(T::P1minus, T::Nplus, {{T::P0minus, 2}});
    set(T::P1minus, T::Nminus, {{T::Xminus, -2}});
    set(T::P1minus, T::Xplus, {{T::Nplus, -1}});
    set(T::P1minus, T::P1plus, {{T::Z, -1}, {T::Zp, -1}});
    set(T::P1minus, T::P0plus, {{T::Nminus, 1}});
    // row P0+
    set(T::P0plus, T::Zp, {{T::P0plus, -2}});
    set(T::P0plus, T::Nplus, {{T::P1plus, -1}});
    set(T::P0plus, T::P1minus, {{T::Nminus, -1}});
    set(T::P0plus, T::P0minus, {{T::Zp, 1}});
    // row P0-
    set(T::P0minus, T::Zp, {{T::P0minus, 2}});
    set(T::P0minus, T::Nminus, {{T::P1minus, -1}});
    set(T::P0minus, T::P1plus, {{T::Nplus, -1}});
    set(T::P0minus, T::P0plus, {{T::Zp, -1}});
  }
};

const TableData& table_data() {
  static const TableData t;
  return t;
}

} // namespace

const char* tag_name(RealTag t) {
  static const char* n[] = {"H1", "H2", "F", "G", "R", "R'", "P", "P'", "Q", "Q'"};
  return n[int(t)];
}
const char* tag_name(CplxTag t) {
  static const char* n[] = {"Z", "Z'", "N+", "N-", "X+", "X-", "P1+", "P1-", "P0+", "P0-"};
  return n[int(t)];
}

const Mat4<double>& basis_matrix(RealTag t) {
  static const std::array<Mat4<double>, kNumTags> mats = [] {
    std::array<Mat4<double>, kNumTags> m;
    for (int i = 0; i < kNumTags; ++i) m[i] = real_mat(RealTag(i));
    return m;
  }();
  return mats[int(t)];
}

const Mat4<cplx>& basis_matrix(CplxTag t) {
  static const std::array<Mat4<cplx>, kNumTags> mats = [] {
    std::array<Mat4<cplx>, kNumTags> m;
    for (int i = 0; i < kNumTags; ++i) m[i] = cplx_mat(CplxTag(i));
    return m;
  }();
  return mats[int(t)];
}

bool in_sp4(const Mat4<cplx>& x, double tol) {
  Mat2<cplx> A = blockA(x), B = blockB(x), C = blockC(x), D = blockD(x);
  double dev = 0;
  Mat2<cplx> r1 = A + D.transpose();
  Mat2<cplx> r2 = B - B.transpose();
  Mat2<cplx> r3 = C - C.transpose();
  for (auto& v : r1.a) dev = std::max(dev, std::abs(v));
  for (auto& v : r2.a) dev = std::max(dev, std::abs(v));
  for (auto& v : r3.a) dev = std::max(dev, std::abs(v));
  return dev <= tol;
}

Mat4<cplx> Combo::to_matrix() const {
  Mat4<cplx> m;
  for (int i = 0; i < kNumTags; ++i)
    if (coef[i] != 0.0) m = m + basis_matrix(CplxTag(i)) * cplx(coef[i]);
  return m;
}

const Combo& mult_table_cell(CplxTag a, CplxTag b) { return table_data().cell[int(a)][int(b)]; }

TableReport verify_mult_table(double tol) {
  TableReport rep;
  for (int i = 0; i < kNumTags; ++i)
    for (int j = 0; j < kNumTags; ++j) {
      Mat4<cplx> lhs = bracket(basis_matrix(CplxTag(i)), basis_matrix(CplxTag(j)));
      Mat4<cplx> rhs = mult_table_cell(CplxTag(i), CplxTag(j)).to_matrix();
      double dev = 0;
      for (std::size_t k = 0; k < lhs.a.size(); ++k) dev = std::max(dev, std::abs(lhs.a[k] - rhs.a[k]));
      rep.max_deviation = std::max(rep.max_deviation, dev);
      rep.ok[i][j] = dev <= tol;
      (rep.ok[i][j] ? rep.passed : rep.failed)++;
    }
  return rep;
}

CartanSplit cartan_split(const Mat4<cplx>& x) {
  // 16x10 least squares against the complex basis via normal equations
  std::array<Mat4<cplx>, kNumTags> bas;
  for (int i = 0; i < kNumTags; ++i) bas[i] = basis_matrix(CplxTag(i));
  cplx G[kNumTags][kNumTags];
  cplx rhs[kNumTags];
  for (int i = 0; i < kNumTags; ++i) {
    for (int j = 0; j < kNumTags; ++j) {
      cplx s = 0;
      for (std::size_t k = 0; k < 16; ++k) s += std::conj(bas[i].a[k]) * bas[j].a[k];
      G[i][j] = s;
    }
    cplx s = 0;
    for (std::size_t k = 0; k < 16; ++k) s += std::conj(bas[i].a[k]) * x.a[k];
    rhs[i] = s;
  }
  // Gaussian elimination with partial pivoting
  int perm[kNumTags];
  for (int i = 0; i < kNumTags; ++i) perm[i] = i;
  for (int col = 0; col < kNumTags; ++col) {
    int piv = col;
    for (int r = col + 1; r < kNumTags; ++r)
      if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
    std::swap(perm[col], perm[piv]);
    for (int j = 0; j < kNumTags; ++j) std::swap(G[col][j], G[piv][j]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = col + 1; r < kNumTags; ++r) {
      cplx f = G[r][col] / G[col][col];
      for (int j = col; j < kNumTags; ++j) G[r][j] -= f * G[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  CartanSplit out;
  for (int r = kNumTags - 1; r >= 0; --r) {
    cplx s = rhs[r];
    for (int j = r + 1; j < kNumTags; ++j) s -= G[r][j] * out.coords[j];
    out.coords[r] = s / G[r][r];
  }
  Mat4<cplx> recon;
  for (int i = 0; i < kNumTags; ++i) recon = recon + bas[i] * out.coords[i];
  double nx = std::max(frob_norm(x), 1e-30);
  if (frob_dist(recon, x) > 1e-10 * nx) throw NotInAlgebra("not in span of the sp(4,C) basis");

  auto acc = [&](Mat4<cplx>& dst, CplxTag t) { dst = dst + bas[int(t)] * out.coords[int(t)]; };
  acc(out.k, CplxTag::Z); acc(out.k, CplxTag::Zp);
  acc(out.k, CplxTag::Nplus); acc(out.k, CplxTag::Nminus);
  acc(out.p_plus, CplxTag::Xplus); acc(out.p_plus, CplxTag::P1plus); acc(out.p_plus, CplxTag::P0plus);
  acc(out.p_minus, CplxTag::Xminus); acc(out.p_minus, CplxTag::P1minus); acc(out.p_minus, CplxTag::P0minus);
  return out;
}

Mat4<cplx> cplx_from_real_combination(CplxTag t) {
  const cplx i(0, 1);
  auto R = [](RealTag r) { return complexify(basis_matrix(r)); };
  switch (t) {
    case CplxTag::Z: return R(RealTag::F) * (-i) + R(RealTag::G) * i;
    case CplxTag::Zp: return R(RealTag::R) * (-i) + R(RealTag::Rp) * i;
    case CplxTag::Nplus:
      return (R(RealTag::Pp) - R(RealTag::P)) * cplx(0.5) - (R(RealTag::Q) - R(RealTag::Qp)) * (0.5 * i);
    case CplxTag::Nminus:
      return (R(RealTag::Pp) - R(RealTag::P)) * cplx(0.5) + (R(RealTag::Q) - R(RealTag::Qp)) * (0.5 * i);
    case CplxTag::Xplus: return R(RealTag::H1) * cplx(0.5) + (R(RealTag::F) + R(RealTag::G)) * (0.5 * i);
    case CplxTag::Xminus: return R(RealTag::H1) * cplx(0.5) - (R(RealTag::F) + R(RealTag::G)) * (0.5 * i);
    case CplxTag::P1plus:
      return (R(RealTag::P) + R(RealTag::Pp)) * cplx(0.5) + (R(RealTag::Q) + R(RealTag::Qp)) * (0.5 * i);
    case CplxTag::P1minus:
      return (R(RealTag::P) + R(RealTag::Pp)) * cplx(0.5) - (R(RealTag::Q) + R(RealTag::Qp)) * (0.5 * i);
    case CplxTag::P0plus: return R(RealTag::H2) * cplx(0.5) + (R(RealTag::R) + R(RealTag::Rp)) * (0.5 * i);
    case CplxTag::P0minus: return R(RealTag::H2) * cplx(0.5) - (R(RealTag::R) + R(RealTag::Rp)) * (0.5 * i);
  }
  return {};
}

} // namespace gsp4
