#pragma once

#include <complex>

namespace ptcomb::detail {

/// Compensated (Kahan) accumulator; error stays O(eps * sum of |terms|)
/// independent of cancellation in the running sum.
template <class T>
class Kahan {
 public:
  void add(const T& x) {
    const T y = x - comp_;
    const T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  const T& value() const { return sum_; }

 private:
  T sum_{};
  T comp_{};
};

using KahanReal = Kahan<double>;
using KahanComplex = Kahan<std::complex<double>>;

}  // namespace ptcomb::detail
