#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pauli_super/codimension.hpp"
#include "pauli_super/errors.hpp"
#include "pauli_super/int_matrix.hpp"
#include "pauli_super/report.hpp"

namespace pauli_super {

/// Block dimensions of P(t): a = dim L_1, b = dim L_-1, c = dim L_0, d = a + b + c.
struct BlockSizes {
  double a, b, c, d;
};

inline void require_power_of_two(long t) {
  if (t < 2 || (t & (t - 1)) != 0) throw ConfigurationError("t must be a power of two >= 2, got " + std::to_string(t));
}

inline BlockSizes block_sizes(long t) {
  require_power_of_two(t);
  const double td = static_cast<double>(t);
  const double a = td * (td + 1) / 2, b = td * (td - 1) / 2, c = td * td - 1;
  return {a, b, c, a + b + c};
}

/// Natural log of a nonnegative big integer; -inf for zero.
inline long double log_bigint(const BigInt& x) {
  if (x < 0) throw DomainError("log_bigint: negative argument");
  if (x.is_zero()) return -std::numeric_limits<long double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 1000) return std::log(x.convert_to<long double>());
  const std::size_t shift = top - 60;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<long double>()) + static_cast<long double>(shift) * std::log(2.0L);
}

/// exp of the Shannon entropy of x (natural log), with 0^0 = 1.
inline double phi(std::span<const double> x) {
  double sum = 0, h = 0;
  for (double v : x) {
    if (!(v >= 0)) throw DomainError("phi: negative or NaN entry");
    sum += v;
    if (v > 0) h -= v * std::log(v);
  }
  if (std::abs(sum - 1) > 1e-12) throw DomainError("phi: entries do not sum to 1");
  return std::exp(h);
}

/// ln Phi(n; n_1, ..., n_d) = -sum (n_i/n) ln(n_i/n).
inline long double log_phi_counts(const MultiDegree& v) {
  const unsigned n = v.total();
  if (n == 0) throw DomainError("log_phi_counts: empty multidegree");
  long double h = 0;
  for (unsigned c : v.counts)
    if (c > 0) {
      const long double p = static_cast<long double>(c) / n;
      h -= p * std::log(p);
    }
  return h;
}

namespace detail {
template <class Real>
Real g_of_z_impl(Real z, Real t) {
  const Real c = t * t - 1;
  const Real w = 1 - c * z;
  return c * z * std::log(z) + w * std::log(w) - Real(0.5) * w * std::log(c * t * t);
}
}  // namespace detail

/// g(z) = ln(1/PhiTilde) along the constrained family, for 0 < z < 1/(t^2-1).
inline double g_of_z(double z, long t) {
  const double c = block_sizes(t).c;
  if (!(z > 0 && z < 1 / c)) throw DomainError("g_of_z: z outside (0, 1/(t^2-1))");
  return detail::g_of_z_impl<double>(z, static_cast<double>(t));
}

/// PhiTilde(x, y, z) = x^(-ax) y^(-by) z^(-cz).
inline double phi_tilde(double x, double y, double z, long t) {
  const auto s = block_sizes(t);
  auto term = [](double m, double p) { return p > 0 ? m * p * std::log(p) : 0.0; };
  return std::exp(-(term(s.a, x) + term(s.b, y) + term(s.c, z)));
}

inline double theoretical_exponent(long t) {
  const double c = block_sizes(t).c;
  const double td = static_cast<double>(t);
  return c + td * std::sqrt(c);
}

inline double z_star(long t) { return 1 / theoretical_exponent(t); }

struct CriticalPointCheck {
  Report report;
  double z_star = 0;
  double g_at_z_star = 0;
  double g_prime_residual = 0;
  double g_second = 0;
  double grid_argmin = 0;
};

/// Checks numerically that z* is the minimizer of g.
///
/// Derivatives are central differences in long double with steps relative to
/// z* (1e-6 z* for g', 1e-4 z* for g''). The grid scan uses 10^4 midpoints of
/// (0, 1/c) and must land within one cell of z*.
inline CriticalPointCheck verify_critical_point(long t, double tol) {
  if (!(tol > 0)) throw DomainError("verify_critical_point: tol must be positive");
  const auto s = block_sizes(t);
  const long double tl = static_cast<long double>(t);
  const long double z0 = 1.0L / (static_cast<long double>(s.c) + tl * std::sqrt(static_cast<long double>(s.c)));
  auto g = [&](long double z) { return detail::g_of_z_impl<long double>(z, tl); };

  CriticalPointCheck out;
  out.report.title = "critical_point t=" + std::to_string(t);
  out.z_star = static_cast<double>(z0);
  out.g_at_z_star = static_cast<double>(g(z0));

  const long double h1 = 1e-6L * z0;
  out.g_prime_residual = static_cast<double>((g(z0 + h1) - g(z0 - h1)) / (2 * h1));
  const long double h2 = 1e-4L * z0;
  out.g_second = static_cast<double>((g(z0 + h2) - 2 * g(z0) + g(z0 - h2)) / (h2 * h2));

  ReportItem prime{"g_prime_vanishes", std::abs(out.g_prime_residual) < tol, 1, "g'(z*) = " + std::to_string(out.g_prime_residual), {}};
  ReportItem second{"g_second_positive", out.g_second > 0, 1, "g''(z*) = " + std::to_string(out.g_second), {}};

  const long double theo = 1 / z0;
  const long double rel = std::abs(std::exp(-g(z0)) - theo) / theo;
  ReportItem closed{"g_at_z_star_closed_form", rel < tol, 1, "relative error " + std::to_string(static_cast<double>(rel)), {}};

  constexpr int kGrid = 10000;
  const double cell = 1 / (s.c * kGrid);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double z = (k + 0.5) * cell;
    const double v = g_of_z(z, t);
    if (v < best) {
      best = v;
      out.grid_argmin = z;
    }
  }
  ReportItem grid{"grid_minimum_at_z_star", std::abs(out.grid_argmin - out.z_star) <= cell, kGrid,
                  "grid argmin " + std::to_string(out.grid_argmin), {}};

  for (auto* it : {&prime, &second, &closed, &grid}) {
    if (!it->passed) it->witnesses.push_back(it->detail);
    out.report.items.push_back(*it);
  }
  return out;
}

struct ConstrainedMaximum {
  double x = 0, y = 0, z = 0;  // common coordinate on L_1, L_-1, L_0 letters
  double value = 0;            // PhiTilde(x, y, z)
  int iterations = 0;
};

/// Maximizes PhiTilde subject to ax = by, ax + by + cz = 1 by golden-section
/// minimization of g over (0, 1/c).
inline ConstrainedMaximum maximize_phi_constrained(long t) {
  const auto s = block_sizes(t);
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double lo = 0, hi = 1 / s.c;
  double m1 = hi - inv_phi * (hi - lo), m2 = lo + inv_phi * (hi - lo);
  double f1 = g_of_z(m1, t), f2 = g_of_z(m2, t);
  ConstrainedMaximum out;
  while (hi - lo > 1e-14 / s.c && out.iterations < 500) {
    ++out.iterations;
    if (f1 < f2) {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - inv_phi * (hi - lo);
      f1 = g_of_z(m1, t);
    } else {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + inv_phi * (hi - lo);
      f2 = g_of_z(m2, t);
    }
  }
  out.z = (lo + hi) / 2;
  const double half = (1 - s.c * out.z) / 2;
  out.x = half / s.a;
  out.y = half / s.b;
  out.value = phi_tilde(out.x, out.y, out.z, t);
  return out;
}

/// Largest Phi over `samples` random points of the full d-simplex with
/// x_1 + ... + x_a = x_{a+1} + ... + x_{a+b}. Each block is Dirichlet(1).
inline double sample_constrained_phi_max(long t, std::size_t samples, std::uint64_t seed) {
  const auto s = block_sizes(t);
  const auto a = static_cast<std::size_t>(s.a), b = static_cast<std::size_t>(s.b), c = static_cast<std::size_t>(s.c);
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(a + b + c);
  auto fill = [&](std::size_t begin, std::size_t count, double mass) {
    double sum = 0;
    for (std::size_t i = 0; i < count; ++i) sum += (x[begin + i] = expo(rng));
    for (std::size_t i = 0; i < count; ++i) x[begin + i] *= mass / sum;
  };
  double best = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double even_mass = unit(rng);
    fill(0, a, (1 - even_mass) / 2);
    fill(a, b, (1 - even_mass) / 2);
    fill(a + b, c, even_mass);
    double sum = 0;
    for (double v : x) sum += v;
    for (double& v : x) v /= sum;
    best = std::max(best, phi(x));
  }
  return best;
}

/// (1/n^d) Phi^n <= multinomial(v) <= n Phi^n, compared in log space with a
/// relative margin of 1e-9. d is the number of letters of v; zero counts are
/// allowed and contribute nothing to Phi.
inline bool stirling_sandwich_check(const MultiDegree& v) {
  const unsigned n = v.total();
  if (n == 0) throw DomainError("stirling_sandwich_check: total must be >= 1");
  constexpr long double kMargin = 1e-9L;
  const long double lm = log_bigint(multinomial(v));
  const long double lphi_n = n * log_phi_counts(v);
  const long double ln_n = std::log(static_cast<long double>(n));
  const long double lower = lphi_n - static_cast<long double>(v.size()) * ln_n;
  const long double upper = ln_n + lphi_n;
  return lower <= lm + kMargin && lm <= upper + kMargin;
}

/// c_n <= (n+1)^(d+1) * theoretical(t)^n, d = 2t^2 - 1.
inline bool upper_bound_check(unsigned n, const BigInt& c_n, long t) {
  const auto s = block_sizes(t);
  const long double lhs = log_bigint(c_n);
  const long double rhs = (s.d + 1) * std::log(static_cast<long double>(n) + 1) +
                          n * std::log(static_cast<long double>(theoretical_exponent(t)));
  return lhs <= rhs;
}

/// c_n <= (dim L)^(n+1), exact.
inline bool dimension_bound_check(unsigned n, const BigInt& c_n, long t) {
  const auto d = static_cast<unsigned long>(block_sizes(t).d);
  return c_n <= boost::multiprecision::pow(BigInt(d), n + 1);
}

struct ExponentEstimate {
  unsigned n = 0;
  double lower = 0;  // (c_n / n^d)^(1/n)
  double root = 0;   // c_n^(1/n)
  double upper = 0;  // (n^d c_n)^(1/n)
  bool upper_bound_ok = false;
};

struct ExponentReport {
  long t = 0;
  double z_star = 0;
  double g_at_z_star = 0;
  double g_prime_residual = 0;
  double g_second = 0;
  double theoretical = 0;
  std::vector<ExponentEstimate> estimates;
};

inline ExponentEstimate estimate_row(unsigned n, const BigInt& c_n, long t) {
  if (n == 0) throw DomainError("estimate_row: n must be >= 1");
  const auto s = block_sizes(t);
  const long double lc = log_bigint(c_n);
  const long double dl = s.d * std::log(static_cast<long double>(n));
  ExponentEstimate e;
  e.n = n;
  e.lower = static_cast<double>(std::exp((lc - dl) / n));
  e.root = static_cast<double>(std::exp(lc / n));
  e.upper = static_cast<double>(std::exp((lc + dl) / n));
  e.upper_bound_ok = upper_bound_check(n, c_n, t);
  return e;
}

/// Closed-form quantities for t plus per-n brackets for the given c_n rows.
inline ExponentReport estimate_exponent(long t, const std::vector<CodimensionRow>& codims, double tol = 1e-8) {
  const CriticalPointCheck cp = verify_critical_point(t, tol);
  ExponentReport r;
  r.t = t;
  r.z_star = cp.z_star;
  r.g_at_z_star = cp.g_at_z_star;
  r.g_prime_residual = cp.g_prime_residual;
  r.g_second = cp.g_second;
  r.theoretical = theoretical_exponent(t);
  for (const auto& row : codims) r.estimates.push_back(estimate_row(row.n, row.codimension, t));
  return r;
}

}  // namespace pauli_super
