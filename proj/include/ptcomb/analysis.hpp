#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ptcomb/band_condition.hpp"
#include "ptcomb/cell.hpp"

namespace ptcomb {

/// Split of B into its real-coupling part and the imaginary-part lift.
struct Decomposition {
  double base = 0.0;   // B with s1 := 0
  double lift = 0.0;
  double total = 0.0;  // base + lift, reproduces big_b
};

/// N=2: B = B(s1=0) + 2 s1^2 sin^2(eps)/eps^2. The lift is never negative.
Decomposition n2_decompose(double r1, double s1, Epsilon eps);

/// N=3: B = B(s1=0) + 4 s1^2 sin^2(eps) [eps cos(eps) + r2 sin(eps)]/eps^3.
Decomposition n3_decompose(double r1, double r2, double s1, Epsilon eps);

enum class EnvelopeSign { plus, minus };

struct EnvelopeValue {
  std::complex<double> value;
  double imag_residue = 0.0;  // |Im| / max(1, |Re|); > 1e-9 flags a region
                              // where the extremal curve has left the reals
};

/// C_+- = 2 f f* - 1 through the extremal points of the N=2 band condition.
/// C_+ (maxima) pairs F_+ with the + inner root, C_- (minima) pairs F_-
/// with the - inner root; principal square roots throughout, f* conjugates
/// the explicit i s1 only. Throws std::domain_error when F = 0.
EnvelopeValue n2_envelope_value(double r1, double s1, Epsilon eps, EnvelopeSign sign);
double n2_envelope(double r1, double s1, Epsilon eps, EnvelopeSign sign);

/// Boundary curves of B for s1 >> r1: {1, -1 + 2 s1^2/eps^2}, returned as
/// (lower, upper); the two interchange at eps = s1.
std::pair<double, double> n2_large_s_approx(double s1, Epsilon eps);

enum class ExtremumKind { maximum, minimum };

struct Extremum {
  double eps = 0.0;
  double b_value = 0.0;
  ExtremumKind kind = ExtremumKind::maximum;
  int group_label = 0;  // positional label, period N (odd N) or N/2 (even N)
};

struct ExtremaOptions {
  bool grouping = false;
  double points_per_pi = 2000.0;  // scan resolution
};

/// All roots of dB/deps on (lo, hi), bisected to 1e-10 in eps and
/// classified by second difference. Warns on stderr if two roots land
/// closer than the scan step (possible missed extremum).
std::vector<Extremum> find_extrema(const UnitCell& cell, double lo, double hi,
                                   const ExtremaOptions& opts = {});

}  // namespace ptcomb
