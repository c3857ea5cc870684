#include "ptcomb/analysis.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "ptcomb/detail/rootscan.hpp"

namespace ptcomb {

namespace {

double band_b(const UnitCell& cell, double e) { return big_b(cell, Epsilon(e)).real_value; }

}  // namespace

Decomposition n2_decompose(double r1, double s1, Epsilon eps) {
  const double e = eps.value();
  const double sn = sinc(e);
  Decomposition d;
  d.base = band_b(make_pt_cell({Coupling(r1, 0.0)}), e);
  d.lift = 2.0 * s1 * s1 * sn * sn;  // 2 s1^2 sin^2(eps)/eps^2, sinc form at 0
  d.total = d.base + d.lift;
  return d;
}

Decomposition n3_decompose(double r1, double r2, double s1, Epsilon eps) {
  const double e = eps.value();
  const double sn = sinc(e);
  Decomposition d;
  d.base = band_b(make_pt_cell({Coupling(r1, 0.0)}, r2), e);
  // 4 s1^2 sin^2(eps) [eps cos(eps) + r2 sin(eps)] / eps^3
  d.lift = 4.0 * s1 * s1 * sn * sn * (std::cos(e) + r2 * sn);
  d.total = d.base + d.lift;
  return d;
}

namespace {

using Complex = std::complex<double>;

Complex envelope_f(double r1, double s1, double e, double f_sign, double root_sign,
                   bool conjugate) {
  const double e2 = e * e;
  const double rr = r1 * r1;
  const double ss = s1 * s1;
  const double inner =
      (r1 + rr + ss) * (r1 + rr + ss) + 2.0 * (r1 + rr - ss) * e2 + e2 * e2;
  const Complex inner_root = std::sqrt(Complex(inner, 0.0));
  const Complex F = rr + (rr + ss) * (rr + ss) + 2.0 * (r1 + rr - ss) * e2 + e2 * e2 +
                    f_sign * (r1 - rr - ss + e2) * inner_root;
  if (F == Complex(0.0, 0.0))
    throw std::domain_error("n2_envelope: F vanished (degenerate extremal curve)");
  const Complex R = std::sqrt(F - 2.0 * rr * e2);
  const Complex lead = std::sqrt(2.0) * r1 * Complex(r1, conjugate ? s1 : -s1);
  return (lead + root_sign * R) / std::sqrt(F);
}

}  // namespace

EnvelopeValue n2_envelope_value(double r1, double s1, Epsilon eps, EnvelopeSign sign) {
  const double e = eps.value();
  const double sg = sign == EnvelopeSign::plus ? 1.0 : -1.0;
  const Complex f = envelope_f(r1, s1, e, sg, sg, false);
  const Complex fs = envelope_f(r1, s1, e, sg, sg, true);
  const Complex c = 2.0 * f * fs - 1.0;
  EnvelopeValue out;
  out.value = c;
  out.imag_residue = std::abs(c.imag()) / std::max(1.0, std::abs(c.real()));
  return out;
}

double n2_envelope(double r1, double s1, Epsilon eps, EnvelopeSign sign) {
  return n2_envelope_value(r1, s1, eps, sign).value.real();
}

std::pair<double, double> n2_large_s_approx(double s1, Epsilon eps) {
  const double e = eps.value();
  if (e <= 0.0) throw std::invalid_argument("n2_large_s_approx: eps must be > 0");
  const double curve = -1.0 + 2.0 * s1 * s1 / (e * e);
  if (e <= s1) return {1.0, curve};
  return {curve, 1.0};  // boundaries interchange above eps = s1
}

std::vector<Extremum> find_extrema(const UnitCell& cell, double lo, double hi,
                                   const ExtremaOptions& opts) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument("find_extrema: need 0 < lo < hi");

  const std::vector<double> xs = detail::scan_grid(lo, hi, opts.points_per_pi);
  const double step = xs[1] - xs[0];
  std::vector<double> ds(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) ds[i] = big_b_derivative(cell, Epsilon(xs[i]));

  auto deriv = [&](double x) { return big_b_derivative(cell, Epsilon(x)); };

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (ds[i] == 0.0) {
      roots.push_back(xs[i]);
    } else if ((ds[i] < 0.0) != (ds[i + 1] < 0.0)) {
      roots.push_back(detail::bisect(deriv, xs[i], xs[i + 1], ds[i], 1e-10));
    }
  }

  for (size_t i = 0; i + 1 < roots.size(); ++i) {
    if (roots[i + 1] - roots[i] < step) {
      std::cerr << "find_extrema: roots " << roots[i] << " and " << roots[i + 1]
                << " closer than the scan step; extrema may be missed\n";
      break;
    }
  }

  const int period = cell.size() % 2 == 1 ? cell.size() : cell.size() / 2;
  std::vector<Extremum> out;
  out.reserve(roots.size());
  const double h = std::max(1e-6, 1e-7 * (hi - lo));
  for (size_t i = 0; i < roots.size(); ++i) {
    Extremum ex;
    ex.eps = roots[i];
    ex.b_value = band_b(cell, roots[i]);
    const double left = band_b(cell, std::max(lo, roots[i] - h));
    const double right = band_b(cell, std::min(hi, roots[i] + h));
    const double d2 = left - 2.0 * ex.b_value + right;
    if (d2 < 0.0) {
      ex.kind = ExtremumKind::maximum;
    } else if (d2 > 0.0) {
      ex.kind = ExtremumKind::minimum;
    } else {
      // flat second difference: side on which |B| decreases decides
      ex.kind = std::abs(right) < std::abs(ex.b_value) ? ExtremumKind::maximum
                                                       : ExtremumKind::minimum;
    }
    ex.group_label = opts.grouping ? static_cast<int>(i % static_cast<size_t>(period)) : 0;
    out.push_back(ex);
  }
  return out;
}

}  // namespace ptcomb
