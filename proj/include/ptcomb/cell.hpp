#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace ptcomb {

/// One dimensionless delta strength c = r + i s = a/a_j.
struct Coupling {
  double r = 0.0;
  double s = 0.0;

  Coupling() = default;
  Coupling(double r_, double s_);  // rejects non-finite parts

  std::complex<double> value() const { return {r, s}; }
  Coupling conjugated() const { return Coupling(r, -s); }

  friend bool operator==(const Coupling& a, const Coupling& b) {
    return a.r == b.r && a.s == b.s;
  }
};

/// Reduced wavenumber eps = k a >= 0. The physical energy is
/// E = hbar^2 eps^2 / (2 m a^2); nothing else about units enters the code.
class Epsilon {
 public:
  explicit Epsilon(double v);  // rejects negative or non-finite values
  double value() const { return v_; }

 private:
  double v_;
};

/// Ordered couplings of one primitive cell, deltas equally spaced by a.
/// pt_ordered() is true iff site N+1-j stores the exact conjugate of site j
/// (bitwise on the stored reals), which for odd N forces the middle real.
class UnitCell {
 public:
  explicit UnitCell(std::vector<Coupling> couplings);

  int size() const { return static_cast<int>(c_.size()); }
  const Coupling& site(int j) const { return c_[static_cast<size_t>(j)]; }  // 0-based
  const std::vector<Coupling>& couplings() const { return c_; }
  bool pt_ordered() const { return pt_; }

  /// Conjugate every coupling and reverse site order (the PT image).
  UnitCell conjugate_reversed() const;

 private:
  std::vector<Coupling> c_;
  bool pt_;
};

/// Builds a PT-ordered cell from one half: [h1..hk, (middle), hk*..h1*].
/// `middle` must be present iff an odd-N cell is requested.
UnitCell make_pt_cell(const std::vector<Coupling>& half,
                      std::optional<double> middle = std::nullopt);

/// Exact conjugate-reversal identities on the stored values.
bool check_pt(const UnitCell& cell);

}  // namespace ptcomb
