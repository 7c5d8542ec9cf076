#include "ymheat/oracle.hpp"

#include <cmath>
#include <functional>

namespace ymheat::oracle {

namespace {

struct Data {
  double dim;
  double casimir;
};

// Median split of an explicit tuple, computed independently of decompose.
void split_sizes(const std::vector<long>& parts, long& n, long& a, long& b) {
  const std::size_t N = parts.size();
  n = parts[(N + 2) / 2 - 1];
  a = 0;
  b = 0;
  for (long p : parts) {
    if (p > n) a += p - n;
    if (p < n) b += n - p;
  }
}

void tuples(int rank, long lo, long hi, std::vector<long>& prefix,
            const std::function<void(const std::vector<long>&)>& visit) {
  if (static_cast<int>(prefix.size()) == rank) {
    visit(prefix);
    return;
  }
  const long top = prefix.empty() ? hi : prefix.back();
  for (long v = top; v >= lo; --v) {
    prefix.push_back(v);
    tuples(rank, lo, hi, prefix, visit);
    prefix.pop_back();
  }
}

Data data(GroupKind group, const ExplicitWeight& w) {
  const double d = static_cast<double>(dim_explicit(w));
  const Rational c = group == GroupKind::unitary ? casimir_u_explicit(w)
                                                 : casimir_su_explicit(su_normalize(w));
  return {d, to_double(c)};
}

ExplicitWeight normal(GroupKind group, const ExplicitWeight& w) {
  return group == GroupKind::unitary ? w : su_normalize(w);
}

}  // namespace

std::vector<ExplicitWeight> enumerate_weights(GroupKind group, int rank,
                                              const TruncationPolicy& policy) {
  std::vector<ExplicitWeight> out;
  const long k = policy.k_max;
  std::vector<long> prefix;
  const auto accept = [&](const std::vector<long>& parts, long want_n) {
    if (group == GroupKind::special_unitary && parts.back() != 0) return;
    long n = 0, a = 0, b = 0;
    split_sizes(parts, n, a, b);
    if (group == GroupKind::unitary && n != want_n) return;
    if (a <= k && b <= k) out.emplace_back(parts);
  };
  if (group == GroupKind::unitary) {
    for (long n = -policy.n_max; n <= policy.n_max; ++n) {
      tuples(rank, n - k, n + k, prefix, [&](const std::vector<long>& p) { accept(p, n); });
    }
  } else {
    tuples(rank, 0, 2 * k, prefix, [&](const std::vector<long>& p) { accept(p, 0); });
  }
  return out;
}

std::vector<ExplicitWeight> tuple_successors(const ExplicitWeight& w) {
  std::vector<ExplicitWeight> out;
  std::vector<long> parts(w.parts().begin(), w.parts().end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i - 1] > parts[i]) {
      ++parts[i];
      out.emplace_back(parts);
      --parts[i];
    }
  }
  return out;
}

std::vector<ExplicitWeight> tuple_predecessors(const ExplicitWeight& w) {
  std::vector<ExplicitWeight> out;
  std::vector<long> parts(w.parts().begin(), w.parts().end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 == parts.size() || parts[i] > parts[i + 1]) {
      --parts[i];
      out.emplace_back(parts);
      ++parts[i];
    }
  }
  return out;
}

double partition_function(GroupKind group, int genus, double T, int rank,
                          const TruncationPolicy& policy) {
  long double z = 0.0L;
  for (const ExplicitWeight& w : enumerate_weights(group, rank, policy)) {
    const Data d = data(group, w);
    z += std::exp(-0.5L * T * d.casimir) * std::pow(static_cast<long double>(d.dim), 2.0L - 2.0L * genus);
  }
  return static_cast<double>(z);
}

double wilson_expectation(GroupKind group, const SurfaceSpec& s, int rank,
                          const TruncationPolicy& policy) {
  const long double T = s.total_area;
  const long double t = s.loop_area;
  long double num = 0.0L;
  long double z = 0.0L;
  for (const ExplicitWeight& mu : enumerate_weights(group, rank, policy)) {
    const Data dm = data(group, mu);
    const long double base =
        std::exp(-0.5L * T * dm.casimir) * std::pow(static_cast<long double>(dm.dim), 2.0L - 2.0L * s.genus);
    z += base;
    long double inner = 0.0L;
    for (const ExplicitWeight& nu : tuple_successors(mu)) {
      const Data dn = data(group, normal(group, nu));
      inner += (dn.dim / dm.dim) * std::exp(0.5L * t * (dm.casimir - dn.casimir));
    }
    num += base * inner / rank;
  }
  return static_cast<double>(num / z);
}

double wilson_second_moment(GroupKind group, const SurfaceSpec& s, int rank,
                            const TruncationPolicy& policy) {
  const long double T = s.total_area;
  const long double t = s.loop_area;
  long double num = 0.0L;
  long double z = 0.0L;
  for (const ExplicitWeight& mu : enumerate_weights(group, rank, policy)) {
    const Data dm = data(group, mu);
    const long double base =
        std::exp(-0.5L * T * dm.casimir) * std::pow(static_cast<long double>(dm.dim), 2.0L - 2.0L * s.genus);
    z += base;
    long double inner = 0.0L;
    for (const ExplicitWeight& nu : tuple_successors(mu)) {
      for (const ExplicitWeight& lambda : tuple_predecessors(nu)) {
        const Data dl = data(group, normal(group, lambda));
        inner += (dl.dim / dm.dim) * std::exp(0.5L * t * (dm.casimir - dl.casimir));
      }
    }
    num += base * inner / (static_cast<long double>(rank) * rank);
  }
  return static_cast<double>(num / z);
}

double sphere_wilson(GroupKind group, double T, double t, int rank,
                     const TruncationPolicy& policy) {
  long double num = 0.0L;
  long double z = 0.0L;
  for (const ExplicitWeight& lambda : enumerate_weights(group, rank, policy)) {
    const Data dl = data(group, lambda);
    z += static_cast<long double>(dl.dim) * dl.dim * std::exp(-0.5L * T * dl.casimir);
    for (const ExplicitWeight& mu : tuple_successors(lambda)) {
      const Data dm = data(group, normal(group, mu));
      num += std::exp(-0.5L * t * dl.casimir - 0.5L * (T - t) * dm.casimir) *
             static_cast<long double>(dl.dim) * dm.dim;
    }
  }
  return static_cast<double>(num / (rank * z));
}

}  // namespace ymheat::oracle
