#ifndef GSP4_MAT_HPP
#define GSP4_MAT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace gsp4 {

using cplx = std::complex<double>;

/// Fixed-size matrices generic over the scalar. The scalar only needs
/// ring operations (+,-,*) and, where a routine says so, division.
/// GSp(4) work never needs anything bigger than 4x4, and genericity over
/// jet/dual scalars is what makes the AD paths work.
template <class T, int N>
struct Mat {
  std::array<T, static_cast<std::size_t>(N) * N> a{};

  T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = T(1.0);
    return m;
  }
  static Mat zero() { return Mat{}; }

  Mat operator+(const Mat& o) const {
    Mat r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }
  Mat operator-() const {
    Mat r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        const T& v = (*this)(i, k);
        for (int j = 0; j < N; ++j) r(i, j) = r(i, j) + v * o(k, j);
      }
    return r;
  }
  template <class S>
  Mat operator*(const S& s) const {
    Mat r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * T(s);
    return r;
  }
  Mat transpose() const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  T trace() const {
    T t{};
    for (int i = 0; i < N; ++i) t = t + (*this)(i, i);
    return t;
  }
};

template <class T> using Mat2 = Mat<T, 2>;
template <class T> using Mat4 = Mat<T, 4>;

template <class T>
T det2(const Mat2<T>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <class T>
Mat2<T> adjugate2(const Mat2<T>& m) {
  Mat2<T> r;
  r(0, 0) = m(1, 1);
  r(0, 1) = -m(0, 1);
  r(1, 0) = -m(1, 0);
  r(1, 1) = m(0, 0);
  return r;
}

/// Blocks of a 4x4 in the [[A,B],[C,D]] convention used throughout.
template <class T>
Mat2<T> blockA(const Mat4<T>& g) {
  Mat2<T> r;
  r(0, 0) = g(0, 0); r(0, 1) = g(0, 1); r(1, 0) = g(1, 0); r(1, 1) = g(1, 1);
  return r;
}
template <class T>
Mat2<T> blockB(const Mat4<T>& g) {
  Mat2<T> r;
  r(0, 0) = g(0, 2); r(0, 1) = g(0, 3); r(1, 0) = g(1, 2); r(1, 1) = g(1, 3);
  return r;
}
template <class T>
Mat2<T> blockC(const Mat4<T>& g) {
  Mat2<T> r;
  r(0, 0) = g(2, 0); r(0, 1) = g(2, 1); r(1, 0) = g(3, 0); r(1, 1) = g(3, 1);
  return r;
}
template <class T>
Mat2<T> blockD(const Mat4<T>& g) {
  Mat2<T> r;
  r(0, 0) = g(2, 2); r(0, 1) = g(2, 3); r(1, 0) = g(3, 2); r(1, 1) = g(3, 3);
  return r;
}

template <class T>
Mat4<T> from_blocks(const Mat2<T>& A, const Mat2<T>& B, const Mat2<T>& C, const Mat2<T>& D) {
  Mat4<T> g;
  g(0, 0) = A(0, 0); g(0, 1) = A(0, 1); g(1, 0) = A(1, 0); g(1, 1) = A(1, 1);
  g(0, 2) = B(0, 0); g(0, 3) = B(0, 1); g(1, 2) = B(1, 0); g(1, 3) = B(1, 1);
  g(2, 0) = C(0, 0); g(2, 1) = C(0, 1); g(3, 0) = C(1, 0); g(3, 1) = C(1, 1);
  g(2, 2) = D(0, 0); g(2, 3) = D(0, 1); g(3, 2) = D(1, 0); g(3, 3) = D(1, 1);
  return g;
}

inline double frob_norm(const Mat4<double>& m) {
  double s = 0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}
inline double frob_norm(const Mat4<cplx>& m) {
  double s = 0;
  for (const cplx& v : m.a) s += std::norm(v);
  return std::sqrt(s);
}
inline double frob_dist(const Mat4<double>& x, const Mat4<double>& y) { return frob_norm(x - y); }
inline double frob_dist(const Mat4<cplx>& x, const Mat4<cplx>& y) { return frob_norm(x - y); }

inline Mat4<cplx> complexify(const Mat4<double>& m) {
  Mat4<cplx> r;
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = cplx(m.a[i], 0.0);
  return r;
}

/// Entry-wise promotion of a real matrix into any scalar type constructible
/// from double (jets, duals, complex).
template <class T>
Mat4<T> promote(const Mat4<double>& m) {
  Mat4<T> r;
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = T(m.a[i]);
  return r;
}
template <class T>
Mat4<T> promote(const Mat4<cplx>& m) {
  Mat4<T> r;
  for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = T(m.a[i]);
  return r;
}

} // namespace gsp4

#endif
