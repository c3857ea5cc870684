#pragma once

#include <array>
#include <complex>

#include "ptcomb/cell.hpp"

namespace ptcomb {

using Complex = std::complex<double>;

/// 2x2 complex matrix over the (psi, psi'/k) basis, row major.
struct Mat2 {
  std::array<Complex, 4> m{};  // m[0] m[1] / m[2] m[3]

  static Mat2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  Complex trace() const { return m[0] + m[3]; }
  Complex det_from_entries() const { return m[0] * m[3] - m[1] * m[2]; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);
std::array<Complex, 2> apply(const Mat2& a, const std::array<Complex, 2>& v);

/// Delta jump at site with coupling c: adds 2c/eps to psi'/k, unit det.
Mat2 jump_matrix(const Coupling& c, double eps);
/// Free flight over one spacing a: rotation by eps in (psi, psi'/k).
Mat2 propagation_matrix(double eps);

/// Ordered product over sites of (jump * propagation) across one cell.
/// det is accumulated factor-wise (each factor has unit determinant),
/// so it stays 1 to rounding even when the entries grow large.
struct CellMatrix {
  Mat2 matrix;
  Complex det;

  Complex half_trace() const { return 0.5 * matrix.trace(); }
};

/// eps = 0 is taken as the small-eps limit, evaluated at eps = 1e-6.
CellMatrix cell_matrix(const UnitCell& cell, Epsilon eps);

}  // namespace ptcomb
