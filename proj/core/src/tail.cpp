#include "sums_detail.hpp"

#include "ymheat/numeric.hpp"
#include "ymheat/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace ymheat::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Per-pair bound on a summand in log form: log X(a, b), and its linear
// envelope C0 + rho k + P log(1 + k) in k = a + b used beyond the table.
struct Envelope {
  SumKind kind;
  double loop_area;
  double total_area;
  int rank;
  double log_genus;  // log N^{2-2g} for non-flat pairs

  double log_x(int a, int b) const {
    const double N = rank;
    const double k = a + b;
    const bool flat = a == 0 && b == 0;
    const double g = flat ? 0.0 : log_genus;
    const double sphere_dims = static_cast<double>(rank) * (rank - 1) * std::log1p(k);
    switch (kind) {
      case SumKind::partition:
        return g;
      case SumKind::expectation:
        return g + 0.5 * loop_area * (1.0 + (2.0 * (a + N * b) + 1.0) / (N * N));
      case SumKind::second_moment:
        return g + loop_area + loop_area * k / N;
      case SumKind::sphere_numerator:
        return sphere_dims + 0.5 * (total_area - loop_area) *
                                 (1.0 + (2.0 * (a + N * b) + 1.0) / (N * N));
      case SumKind::sphere_partition:
        return sphere_dims;
    }
    return 0.0;
  }

  double c0() const {
    const double N = rank;
    switch (kind) {
      case SumKind::partition: return log_genus;
      case SumKind::expectation: return log_genus + 0.5 * loop_area * (1.0 + 1.0 / (N * N));
      case SumKind::second_moment: return log_genus + loop_area;
      case SumKind::sphere_numerator:
        return 0.5 * (total_area - loop_area) * (1.0 + 1.0 / (N * N));
      case SumKind::sphere_partition: return 0.0;
    }
    return 0.0;
  }

  double rho() const {
    const double N = rank;
    switch (kind) {
      case SumKind::expectation:
      case SumKind::second_moment: return loop_area / N;
      case SumKind::sphere_numerator: return (total_area - loop_area) / N;
      default: return 0.0;
    }
  }

  double power() const {
    const bool sphere = kind == SumKind::sphere_numerator || kind == SumKind::sphere_partition;
    return sphere ? static_cast<double>(rank) * (rank - 1) : 0.0;
  }
};

// log of sum over partitions of a with at most L rows of
// prod over boxes exp(-(T/2)(1 + 2 content / N)), for a = 0..cap.
std::vector<double> log_row_sums(double total_area, int rank, int max_rows, int cap) {
  std::vector<double> out(static_cast<std::size_t>(cap) + 1, -kInf);
  out[0] = 0.0;
  const int rows = std::min(max_rows, cap);
  if (rows <= 0) return out;
  const double h = 0.5 * total_area;
  const std::size_t w = static_cast<std::size_t>(cap) + 1;
  const auto at = [w](std::vector<double>& m, int s, int v) -> double& {
    return m[static_cast<std::size_t>(s) * w + static_cast<std::size_t>(v)];
  };
  const auto row_weight = [&](int i, int v) {
    const double c = v * (v + 1) / 2.0 - static_cast<double>(i) * v;
    return std::exp(-h * (v + 2.0 * c / rank));
  };
  // d[s][v]: weight of diagrams whose first i rows sum to s with row i = v.
  std::vector<double> d(w * w, 0.0);
  std::vector<double> suffix(w * w, 0.0);
  for (int v = 0; v <= cap; ++v) at(d, v, v) = row_weight(1, v);
  for (int i = 2; i <= rows; ++i) {
    for (int s = 0; s <= cap; ++s) {
      double acc = 0.0;
      for (int v = s; v >= 0; --v) {
        acc += at(d, s, v);
        at(suffix, s, v) = acc;
      }
    }
    std::fill(d.begin(), d.end(), 0.0);
    for (int v = 0; v <= cap; ++v) {
      const double wv = row_weight(i, v);
      for (int s = v; s <= cap; ++s) at(d, s, v) = wv * at(suffix, s - v, v);
    }
  }
  for (int s = 0; s <= cap; ++s) {
    double total = 0.0;
    for (int v = 0; v <= s; ++v) total += at(d, s, v);
    out[static_cast<std::size_t>(s)] = total > 0.0 ? std::log(total) : -kInf;
  }
  return out;
}

// Bound on sum_{k > cap} c(k) exp(C0 + P log(1+k) - s k), c(k) the number
// of partition pairs of total size k, using c(k) <= x^{-k} / phi(x)^2.
double closure(const Envelope& env, double total_area, int cap) {
  const double s = total_area / 4.0 - env.rho();
  if (!(s > 0.0)) return kInf;
  const double P = env.power();
  double best = kInf;
  for (int step = 1; step <= 19; ++step) {
    const double u = s * 0.05 * step;
    const double w = s - u;
    // -log phi(e^{-u}) = sum_j 1/(j (e^{ju} - 1)) <= pi^2 / (6u); the product is slow near 1.
    const double neg_log_phi = u < 0.05 ? std::numbers::pi * std::numbers::pi / (6.0 * u)
                                        : -std::log(euler_phi(std::exp(-u)));
    const double base = env.c0() + 2.0 * neg_log_phi;
    double log_total = -kInf;
    if ((P + 40.0) / w > 1e5) {
      // (1+k)^P e^{-wk} is unimodal: bound the sum by its maximum plus the full integral.
      const double peak = std::max(static_cast<double>(cap + 1), P / w - 1.0);
      const double log_max = P * std::log1p(peak) - w * peak;
      const double log_integral = w - (P + 1.0) * std::log(w) + std::lgamma(P + 1.0);
      log_total = base + log_add(log_max, log_integral);
    } else {
      for (long k = cap + 1;; ++k) {
        const double term = base + P * std::log1p(static_cast<double>(k)) - w * k;
        log_total = log_add(log_total, term);
        const double log_ratio = P * std::log((k + 2.0) / (k + 1.0)) - w;
        if (log_ratio < 0.0 && term < log_total - 40.0) {
          // Ratios decrease in k, so the rest is dominated by a geometric series.
          const double r = std::exp(log_ratio);
          log_total = log_add(log_total, term + log_ratio - std::log1p(-r));
          break;
        }
      }
    }
    best = std::min(best, std::exp(log_total));
  }
  return best;
}

int table_cap(const Envelope& env, double total_area, int k_max) {
  int cap = std::max(32, 4 * k_max);
  while (cap < 400 && closure(env, total_area, cap) > 1e-30) {
    cap = std::min(400, 2 * cap);
  }
  return std::max(cap, 4 * k_max);
}

}  // namespace

GaussianFactor gaussian_factor(SumKind kind, double T, double t, int rank) {
  const double N = rank;
  switch (kind) {
    case SumKind::expectation:
      return {0.5 * T, t / (T * N), t * t / (2.0 * T * N * N) - t / (2.0 * N * N)};
    case SumKind::sphere_numerator:
      return {0.5 * T, (T - t) / (T * N), -t * (T - t) / (2.0 * T * N * N)};
    default:
      return {0.5 * T, 0.0, 0.0};
  }
}

double gaussian_sum(const GaussianFactor& g, int delta, int rank, int n_max) {
  CompensatedSum acc;
  const double y = static_cast<double>(delta) / rank + g.centre;
  for (int n = -n_max; n <= n_max; ++n) {
    const double x = n + y;
    acc.add(std::exp(g.offset - g.half_area * x * x));
  }
  return acc.value();
}

double gaussian_tail(const GaussianFactor& g, int delta, int rank, int n_max) {
  const double y = static_cast<double>(delta) / rank + g.centre;
  double total = 0.0;
  for (int side = -1; side <= 1; side += 2) {
    // Terms exp(-(T/2) u^2) with u = n + y, walking outward from |n| = n_max + 1.
    for (long m = n_max + 1;; ++m) {
      const double u = side * static_cast<double>(m) + y;
      const double term = std::exp(g.offset - g.half_area * u * u);
      total += term;
      if (side * u <= 0.0) continue;
      // Beyond this point |u| grows by one per step and the ratios decrease.
      const double au = std::fabs(u);
      const double ratio = std::exp(-g.half_area * (2.0 * au + 1.0));
      if (term <= 1e-40 * std::max(total, 1e-300) || term == 0.0) {
        total += term * ratio / (1.0 - ratio);
        break;
      }
    }
  }
  return total;
}

double kind_tail(SumKind kind, GroupKind group, int genus, double T, double t, int rank,
                 const TruncationPolicy& policy) {
  const bool sphere = kind == SumKind::sphere_numerator || kind == SumKind::sphere_partition;
  const double log_genus =
      (!sphere && genus >= 2) ? (2.0 - 2.0 * genus) * std::log(static_cast<double>(rank)) : 0.0;
  const Envelope env{kind, t, T, rank, log_genus};
  const int k_max = policy.k_max;
  const int cap = table_cap(env, T, k_max);
  const int m = median_index(rank);
  const auto log_alpha = log_row_sums(T, rank, m - 1, cap);
  const auto log_beta = log_row_sums(T, rank, rank - m, cap);
  const double N = rank;
  const double h = 0.5 * T;
  const bool unitary = group == GroupKind::unitary;
  const GaussianFactor g = gaussian_factor(kind, T, t, rank);
  const double gaussian_sup = std::exp(g.offset) * (1.0 + theta(h));

  double outside = 0.0;
  double inside_n = 0.0;
  for (int a = 0; a <= cap; ++a) {
    if (log_alpha[static_cast<std::size_t>(a)] == -kInf) continue;
    for (int b = 0; b <= cap; ++b) {
      if (log_beta[static_cast<std::size_t>(b)] == -kInf) continue;
      const double cross = h * static_cast<double>(a - b) * (a - b) / (N * N);
      const double log_term = log_alpha[static_cast<std::size_t>(a)] +
                              log_beta[static_cast<std::size_t>(b)] + cross + env.log_x(a, b);
      const double term = std::exp(log_term);
      if (a <= k_max && b <= k_max) {
        if (unitary) inside_n += term * gaussian_tail(g, a - b, rank, policy.n_max);
      } else {
        outside += term;
      }
    }
  }
  outside += closure(env, T, cap);
  if (unitary) outside *= gaussian_sup;
  return outside + inside_n;
}

}  // namespace ymheat::detail
