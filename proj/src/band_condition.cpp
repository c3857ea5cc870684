#include "ptcomb/band_condition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "ptcomb/detail/kahan.hpp"
#include "ptcomb/transfer.hpp"

namespace ptcomb {

double sinc(double eps) {
  if (std::abs(eps) < 1e-4) {
    const double e2 = eps * eps;
    return 1.0 - e2 / 6.0 + e2 * e2 / 120.0;
  }
  return std::sin(eps) / eps;
}

double sinc_derivative(double eps) {
  if (std::abs(eps) < 1e-4) {
    const double e2 = eps * eps;
    return -eps / 3.0 + eps * e2 / 30.0;
  }
  return (eps * std::cos(eps) - std::sin(eps)) / (eps * eps);
}

HValue h_eval(const Coupling& c, Epsilon eps) {
  const double e = eps.value();
  return {std::complex<double>(std::cos(e), 0.0) + c.value() * sinc(e)};
}

std::complex<double> h_derivative(const Coupling& c, Epsilon eps) {
  const double e = eps.value();
  return std::complex<double>(-std::sin(e), 0.0) + c.value() * sinc_derivative(e);
}

namespace {

using Complex = std::complex<double>;

void enumerate_alternating(int n, int m, int start, IndexProduct& cur,
                           std::vector<IndexProduct>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    if (!cur.empty() && (i % 2) == (cur.back() % 2)) continue;
    cur.push_back(i);
    enumerate_alternating(n, m, i + 1, cur, out);
    cur.pop_back();
  }
}

// One addend of the expansion: either a self-symmetric subset, or the
// lexicographically smaller member of a reflection pair (the partner is
// derived from it at evaluation time).
struct EvalGroup {
  IndexProduct rep;
  bool self_mirror = false;
};

struct SubsetTable {
  std::vector<IndexProduct> lex;
  std::vector<EvalGroup> groups;
};

IndexProduct reflected(const IndexProduct& sub, int n) {
  IndexProduct out(sub.size());
  for (size_t t = 0; t < sub.size(); ++t) out[sub.size() - 1 - t] = n + 1 - sub[t];
  return out;
}

const SubsetTable& subset_table(int n, int m) {
  if (m < 1 || m > n)
    throw std::invalid_argument("alternating_subsets: need 1 <= M <= N");
  static std::map<std::pair<int, int>, SubsetTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, m});
  if (it != cache.end()) return it->second;

  SubsetTable table;
  IndexProduct cur;
  cur.reserve(static_cast<size_t>(m));
  enumerate_alternating(n, m, 1, cur, table.lex);
  for (const IndexProduct& sub : table.lex) {
    const IndexProduct ref = reflected(sub, n);
    if (ref == sub) {
      table.groups.push_back({sub, true});
    } else if (sub < ref) {
      table.groups.push_back({sub, false});
    }
  }
  return cache.emplace(std::make_pair(n, m), std::move(table)).first->second;
}

// Product over a self-symmetric subset, conjugate positions paired first:
// (h_{i} h_{N+1-i}) factors are exactly real for PT cells, so the whole
// product keeps a bitwise-zero imaginary part.
Complex product_self(const std::vector<Complex>& h, const IndexProduct& sub) {
  const size_t m = sub.size();
  Complex acc(1.0, 0.0);
  for (size_t t = 0; t < m / 2; ++t)
    acc *= h[static_cast<size_t>(sub[t] - 1)] * h[static_cast<size_t>(sub[m - 1 - t] - 1)];
  if (m % 2 == 1) acc *= h[static_cast<size_t>(sub[m / 2] - 1)];
  return acc;
}

Complex product_forward(const std::vector<Complex>& h, const IndexProduct& sub) {
  Complex acc(1.0, 0.0);
  for (int i : sub) acc *= h[static_cast<size_t>(i - 1)];
  return acc;
}

// Reflection partner of `sub`, multiplied in mirrored traversal order so
// the result is the exact floating-point conjugate of product_forward for
// PT cells; the pair then sums to an exactly real addend.
Complex product_mirrored(const std::vector<Complex>& h, const IndexProduct& sub, int n) {
  Complex acc(1.0, 0.0);
  for (int i : sub) acc *= h[static_cast<size_t>(n - i)];
  return acc;
}

std::vector<Complex> h_values(const UnitCell& cell, double e) {
  const double ce = std::cos(e);
  const double si = sinc(e);
  std::vector<Complex> h(static_cast<size_t>(cell.size()));
  for (int j = 0; j < cell.size(); ++j)
    h[static_cast<size_t>(j)] = Complex(ce, 0.0) + cell.site(j).value() * si;
  return h;
}

double tail_sign(int n, int m) {
  return ((n - m) / 2) % 2 == 0 ? 1.0 : -1.0;
}

BandConditionValue make_value(Complex b) {
  BandConditionValue v;
  v.complex_value = b;
  v.real_value = b.real();
  v.imag_residue = std::abs(b.imag()) / std::max(1.0, std::abs(b.real()));
  return v;
}

}  // namespace

const std::vector<IndexProduct>& alternating_subsets(int n, int m) {
  return subset_table(n, m).lex;
}

BandConditionValue big_b(const UnitCell& cell, Epsilon eps) {
  const int n = cell.size();
  const std::vector<Complex> h = h_values(cell, eps.value());

  detail::KahanComplex acc;
  for (int m = n; m >= (n % 2 == 0 ? 2 : 1); m -= 2) {
    const double coeff = tail_sign(n, m) * std::ldexp(1.0, m - 1);
    for (const EvalGroup& g : subset_table(n, m).groups) {
      const Complex term = g.self_mirror
                               ? product_self(h, g.rep)
                               : product_forward(h, g.rep) + product_mirrored(h, g.rep, n);
      acc.add(coeff * term);
    }
  }
  if (n % 2 == 0) acc.add(Complex(n / 2 % 2 == 0 ? 1.0 : -1.0, 0.0));
  return make_value(acc.value());
}

BandConditionValue big_b_explicit(const UnitCell& cell, Epsilon eps) {
  const int n = cell.size();
  if (n < 2 || n > 4)
    throw std::invalid_argument("big_b_explicit: closed forms exist for N = 2, 3, 4");
  const std::vector<Complex> h = h_values(cell, eps.value());
  switch (n) {
    case 2:
      return make_value(2.0 * h[0] * h[1] - 1.0);
    case 3:
      return make_value(4.0 * h[0] * h[1] * h[2] - (h[0] + h[1] + h[2]));
    default:
      return make_value(8.0 * h[0] * h[1] * h[2] * h[3] -
                        2.0 * (h[0] * h[1] + h[0] * h[3] + h[1] * h[2] + h[2] * h[3]) + 1.0);
  }
}

BandConditionValue big_b_oracle(const UnitCell& cell, Epsilon eps) {
  return make_value(cell_matrix(cell, eps).half_trace());
}

double big_b_derivative(const UnitCell& cell, Epsilon eps) {
  const int n = cell.size();
  const std::vector<Complex> h = h_values(cell, eps.value());
  std::vector<Complex> hp(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) hp[static_cast<size_t>(j)] = h_derivative(cell.site(j), eps);

  detail::KahanComplex acc;
  for (int m = n; m >= (n % 2 == 0 ? 2 : 1); m -= 2) {
    const double coeff = tail_sign(n, m) * std::ldexp(1.0, m - 1);
    for (const IndexProduct& sub : subset_table(n, m).lex) {
      // product rule: one leave-one-out term per factor
      for (size_t t = 0; t < sub.size(); ++t) {
        Complex p(1.0, 0.0);
        for (size_t u = 0; u < sub.size(); ++u) {
          const auto idx = static_cast<size_t>(sub[u] - 1);
          p *= (u == t) ? hp[idx] : h[idx];
        }
        acc.add(coeff * p);
      }
    }
  }
  return acc.value().real();
}

}  // namespace ptcomb
