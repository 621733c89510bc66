#ifndef GSP4_LIE_DERIVATIVE_HPP
#define GSP4_LIE_DERIVATIVE_HPP

#include <vector>

#include "gsp4/group.hpp"
#include "gsp4/lie.hpp"
#include "gsp4/multidual.hpp"

namespace gsp4 {

/// Iterated right-translation derivative (L1.(L2.(...F)))(g), computed as the
/// coefficient of eps_1...eps_k in F(g (1+eps_1 L1) ... (1+eps_k Lk)).
/// Complex directions are applied directly; |word| <= 6.
template <class F>
cplx lie_derivative(F&& f, const Mat4<double>& g, const std::vector<Mat4<cplx>>& word) {
  const int k = int(word.size());
  if (k > MultiDual::kMaxVars) throw JetOrderExhausted("lie_derivative word longer than 6");
  Mat4<MultiDual> x;
  for (int e = 0; e < 16; ++e) x.a[e] = MultiDual::constant(k, cplx(g.a[e]));
  for (int i = 0; i < k; ++i) {
    Mat4<MultiDual> m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        MultiDual v = MultiDual::constant(k, r == c ? cplx(1.0) : cplx(0.0));
        v.c[std::size_t(1) << i] = word[std::size_t(i)](r, c);
        m(r, c) = v;
      }
    x = x * m;
  }
  MultiDual val = f(x);
  return val.c[(std::size_t(1) << k) - 1];
}

template <class F>
cplx lie_derivative(F&& f, const Mat4<double>& g, const std::vector<CplxTag>& word) {
  std::vector<Mat4<cplx>> mats;
  mats.reserve(word.size());
  for (CplxTag t : word) mats.push_back(basis_matrix(t));
  return lie_derivative(std::forward<F>(f), g, mats);
}

} // namespace gsp4

#endif
