#ifndef GSP4_LIE_HPP
#define GSP4_LIE_HPP

#include <array>
#include <string>
#include <vector>

#include "gsp4/errors.hpp"
#include "gsp4/mat.hpp"

namespace gsp4 {

/// Real basis of sp(4,R).
enum class RealTag { H1, H2, F, G, R, Rp, P, Pp, Q, Qp };
/// Complex basis of sp(4,C).
enum class CplxTag { Z, Zp, Nplus, Nminus, Xplus, Xminus, P1plus, P1minus, P0plus, P0minus };

constexpr int kNumTags = 10;
const char* tag_name(RealTag t);
const char* tag_name(CplxTag t);

const Mat4<double>& basis_matrix(RealTag t);
const Mat4<cplx>& basis_matrix(CplxTag t);

/// sp(4,C) membership: blocks satisfy A = -tD, B = tB, C = tC.
bool in_sp4(const Mat4<cplx>& x, double tol = 1e-12);

inline Mat4<cplx> bracket(const Mat4<cplx>& x, const Mat4<cplx>& y) { return x * y - y * x; }

/// Formal combination over the complex basis; the multiplication table cells
/// are stored this way and compared entrywise against computed brackets.
struct Combo {
  std::array<double, kNumTags> coef{};
  Mat4<cplx> to_matrix() const;
};

const Combo& mult_table_cell(CplxTag a, CplxTag b);

struct TableReport {
  std::array<std::array<bool, kNumTags>, kNumTags> ok{};
  double max_deviation = 0.0;
  int passed = 0;
  int failed = 0;
};

/// Compare all 100 table cells against commutators of the basis matrices.
TableReport verify_mult_table(double tol = 1e-14);

struct CartanSplit {
  Mat4<cplx> k;        // component in <Z, Z', N+, N->
  Mat4<cplx> p_plus;   // component in <X+, P1+, P0+>
  Mat4<cplx> p_minus;  // component in <X-, P1-, P0->
  std::array<cplx, kNumTags> coords{};  // coordinates in the complex basis
};

/// Least-squares coordinates in the complex basis; throws NotInAlgebra when
/// the residual exceeds 1e-10 * |X|.
CartanSplit cartan_split(const Mat4<cplx>& x);

/// Complex operators as words of real basis elements (for AD cross-checks):
/// returns the matrix of the tag, built as a combination of real basis elements.
Mat4<cplx> cplx_from_real_combination(CplxTag t);

} // namespace gsp4

#endif
