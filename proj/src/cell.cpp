#include "ptcomb/cell.hpp"

#include <cmath>
#include <stdexcept>

namespace ptcomb {

Coupling::Coupling(double r_, double s_) : r(r_), s(s_) {
  if (!std::isfinite(r_) || !std::isfinite(s_))
    throw std::invalid_argument("coupling parts must be finite");
}

Epsilon::Epsilon(double v) : v_(v) {
  if (!std::isfinite(v) || v < 0.0)
    throw std::invalid_argument("epsilon must be finite and >= 0");
}

namespace {

bool pt_identities_hold(const std::vector<Coupling>& c) {
  const int n = static_cast<int>(c.size());
  for (int j = 0; j < n; ++j) {
    const Coupling& a = c[static_cast<size_t>(j)];
    const Coupling& b = c[static_cast<size_t>(n - 1 - j)];
    if (!(a.r == b.r && a.s == -b.s)) return false;
  }
  return true;
}

}  // namespace

UnitCell::UnitCell(std::vector<Coupling> couplings) : c_(std::move(couplings)) {
  if (c_.empty()) throw std::invalid_argument("cell needs at least one coupling");
  pt_ = pt_identities_hold(c_);
}

UnitCell UnitCell::conjugate_reversed() const {
  std::vector<Coupling> out;
  out.reserve(c_.size());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out.push_back(it->conjugated());
  return UnitCell(std::move(out));
}

UnitCell make_pt_cell(const std::vector<Coupling>& half, std::optional<double> middle) {
  if (half.empty()) throw std::invalid_argument("make_pt_cell: half must be non-empty");
  std::vector<Coupling> c = half;
  if (middle) c.emplace_back(*middle, 0.0);
  for (auto it = half.rbegin(); it != half.rend(); ++it) c.push_back(it->conjugated());
  return UnitCell(std::move(c));
}

bool check_pt(const UnitCell& cell) { return pt_identities_hold(cell.couplings()); }

}  // namespace ptcomb
