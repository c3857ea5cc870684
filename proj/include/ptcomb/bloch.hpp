#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "ptcomb/cell.hpp"
#include "ptcomb/transfer.hpp"

namespace ptcomb {

enum class BlochBranch { plus, minus };

/// Bloch eigenstate at (eps, Q) inside one primitive cell. Positions are
/// in units of a: deltas sit at x = 0..N-1, the cell is [0, N], segment j
/// covers (j-1, j) with psi = A_j e^{i eps x} + B_j e^{-i eps x}.
/// Normalized so the cell integral of |psi|^2 is 1; the phase makes
/// psi(0) real positive (or psi'(0)/k when psi(0) vanishes).
struct BlochState {
  double eps = 0.0;
  double q_a = 0.0;  // signed: +-arccos(B)/N per branch
  std::vector<std::pair<Complex, Complex>> segment_coeffs;
  double norm = 1.0;

  int n_sites() const { return static_cast<int>(segment_coeffs.size()); }
  Complex psi(double x) const;
  double density(double x) const;
};

/// Eigenvector of the cell matrix for e^{i sign N Q a}, propagated through
/// the cell. Throws std::domain_error outside a band (|B| >= 1 - 1e-12)
/// and on band-edge degeneracy (|B| within 1e-10 of +-1).
BlochState bloch_state(const UnitCell& cell, Epsilon eps, BlochBranch branch);

/// |psi|^2 on a uniform grid over [0, N], samples >= 2.
std::vector<std::pair<double, double>> psi_profile(const BlochState& state, int samples);

struct LocalizationMetrics {
  double participation_ratio = 1.0;  // 1/(Na * integral of |psi|^4), 1 = uniform
  double peak_to_mean = 1.0;         // max density * Na
};

/// Closed-form segment integrals; no sampling error.
LocalizationMetrics localization_metrics(const BlochState& state);

}  // namespace ptcomb
