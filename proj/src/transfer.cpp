#include "ptcomb/transfer.hpp"

#include <cmath>

namespace ptcomb {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

std::array<Complex, 2> apply(const Mat2& a, const std::array<Complex, 2>& v) {
  return {a.m[0] * v[0] + a.m[1] * v[1], a.m[2] * v[0] + a.m[3] * v[1]};
}

Mat2 jump_matrix(const Coupling& c, double eps) {
  return {{1.0, 0.0, 2.0 * c.value() / eps, 1.0}};
}

Mat2 propagation_matrix(double eps) {
  const double ce = std::cos(eps);
  const double se = std::sin(eps);
  return {{ce, se, -se, ce}};
}

CellMatrix cell_matrix(const UnitCell& cell, Epsilon eps) {
  double e = eps.value();
  if (e == 0.0) e = 1e-6;  // small-eps limit of the factors

  const Mat2 prop = propagation_matrix(e);
  const Complex det_prop = prop.det_from_entries();

  CellMatrix out;
  out.matrix = Mat2::identity();
  out.det = Complex(1.0, 0.0);
  for (int j = 0; j < cell.size(); ++j) {
    const Mat2 jump = jump_matrix(cell.site(j), e);
    out.matrix = prop * (jump * out.matrix);
    out.det *= jump.det_from_entries() * det_prop;
  }
  return out;
}

}  // namespace ptcomb
