#pragma once

#include <complex>
#include <vector>

#include "ptcomb/cell.hpp"

namespace ptcomb {

/// sin(eps)/eps with the series branch below 1e-4 (sinc(0) = 1).
double sinc(double eps);
/// d/deps of sinc.
double sinc_derivative(double eps);

/// h_j(eps) = cos(eps) + c_j sin(eps)/eps.
struct HValue {
  std::complex<double> value;
};

HValue h_eval(const Coupling& c, Epsilon eps);
std::complex<double> h_derivative(const Coupling& c, Epsilon eps);

/// Strictly increasing site indices in 1..N, consecutive entries of
/// alternating parity ("to an odd index must always follow an even index
/// and reciprocally").
using IndexProduct = std::vector<int>;

/// Every alternating-parity M-subset of {1..N}, lexicographic, memoized.
const std::vector<IndexProduct>& alternating_subsets(int n, int m);

struct BandConditionValue {
  std::complex<double> complex_value;
  double real_value = 0.0;
  double imag_residue = 0.0;  // |Im| / max(1, |Re|)
};

/// The band condition B(eps): cos(N Q a) = B. Full alternating expansion,
/// coefficient 2^(M-1) and alternating sign on the size-M product sums,
/// M stepping down by 2 to the parity-dependent tail term.
BandConditionValue big_b(const UnitCell& cell, Epsilon eps);

/// Hand-written closed forms for N = 2, 3, 4. Test double for big_b only.
BandConditionValue big_b_explicit(const UnitCell& cell, Epsilon eps);

/// Independent route: half trace of the transfer matrix across one cell.
BandConditionValue big_b_oracle(const UnitCell& cell, Epsilon eps);

/// dB/deps of the real projection, term-wise analytic differentiation.
double big_b_derivative(const UnitCell& cell, Epsilon eps);

}  // namespace ptcomb
