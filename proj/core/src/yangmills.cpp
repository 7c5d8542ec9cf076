#include "ymheat/yangmills.hpp"

#include "sums_detail.hpp"
#include "ymheat/numeric.hpp"
#include "ymheat/partitions.hpp"
#include "ymheat/weights.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <thread>

namespace ymheat {

using detail::GaussianFactor;
using detail::SumKind;

void validate(const SurfaceSpec& spec) {
  if (spec.genus < 1) throw DomainError("genus must be at least 1");
  if (!(spec.total_area > 0.0)) throw DomainError("total area must be positive");
  if (!(spec.loop_area > 0.0 && spec.loop_area < spec.total_area)) {
    throw DomainError("loop area must lie in (0, total area)");
  }
}

void validate(const TruncationPolicy& policy) {
  if (policy.k_max < 0) throw DomainError("k_max must be nonnegative");
  if (policy.k_max > kMaxPartitionSize) {
    throw DomainError("k_max must not exceed " + std::to_string(kMaxPartitionSize));
  }
  if (policy.n_max < 0) throw DomainError("n_max must be nonnegative");
  check_gamma(policy.gamma);
  if (!(policy.tail_tol > 0.0)) throw DomainError("tail_tol must be positive");
}

double theta(double x) {
  if (!(x > 0.0)) throw DomainError("theta: argument must be positive");
  double sum = 1.0;
  for (long n = 1;; ++n) {
    const double term = 2.0 * std::exp(-x * static_cast<double>(n) * static_cast<double>(n));
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return sum;
}

double euler_phi(double s) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("euler_phi: argument must lie in (0, 1)");
  double log_prod = 0.0;
  double power = s;
  for (;;) {
    const double l = std::log1p(-power);
    log_prod += l;
    if (std::fabs(l) < 1e-16) break;
    power *= s;
  }
  return std::exp(log_prod);
}

LimitTargets limit_targets(double T, double t) {
  if (!(T > 0.0)) throw DomainError("total area must be positive");
  if (!(t > 0.0)) throw DomainError("loop area must be positive");
  const double th = theta(T / 2.0);
  const double ph = euler_phi(std::exp(-T / 2.0));
  return {std::exp(-t / 2.0), std::exp(-t), th, ph, 1.0 / (ph * ph), th / (ph * ph)};
}

double plane_wilson(double t) {
  if (!(t > 0.0)) throw DomainError("loop area must be positive");
  return std::exp(-t / 2.0);
}

double plane_wilson_character(double t, int rank) {
  if (!(t > 0.0)) throw DomainError("loop area must be positive");
  if (rank < 1) throw RankError("rank must be positive");
  std::vector<long> parts(static_cast<std::size_t>(rank), 0);
  parts.back() = -1;
  const ExplicitWeight w(std::move(parts));
  const double d = static_cast<double>(dim_explicit(w));
  const double c = to_double(casimir_u_explicit(w));
  return d * std::exp(-c * t / 2.0) / rank;
}

namespace {

unsigned worker_count(const Execution& exec) {
  if (exec.workers > 0) return exec.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Partitions of size at most k_max + 1 with box moves stored as indices.
struct PartitionTable {
  std::vector<Partition> items;
  std::vector<int> sizes;
  std::vector<int> lengths;
  std::vector<long> contents;
  std::vector<std::vector<int>> up;
  std::vector<std::vector<int>> down;
  std::vector<std::vector<int>> sim;
  std::vector<int> first_of_size;

  explicit PartitionTable(int k_max) {
    std::map<Partition, int> index;
    for (int s = 0; s <= k_max + 1; ++s) {
      first_of_size.push_back(static_cast<int>(items.size()));
      for (Partition& p : enumerate(s)) {
        index.emplace(p, static_cast<int>(items.size()));
        sizes.push_back(p.size());
        lengths.push_back(p.length());
        contents.push_back(total_content(p));
        items.push_back(std::move(p));
      }
    }
    first_of_size.push_back(static_cast<int>(items.size()));
    const auto ids = [&](const std::vector<Partition>& ps) {
      std::vector<int> out;
      out.reserve(ps.size());
      for (const Partition& p : ps) out.push_back(index.at(p));
      return out;
    };
    up.resize(items.size());
    down.resize(items.size());
    sim.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (sizes[i] > k_max) continue;
      up[i] = ids(add_box(items[i]));
      down[i] = ids(remove_box(items[i]));
      sim[i] = ids(sim_partitions(items[i]));
    }
  }

  std::size_t count() const { return items.size(); }
};

struct Pair {
  int a;
  int b;
};

// Rank-dependent per-pair data: log dimension and SU Casimir number.
class RankContext {
 public:
  RankContext(const PartitionTable& table, int rank, int k_max, unsigned workers)
      : table_(table), rank_(rank), count_(table.count()) {
    log_content_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) {
      log_content_[i] = log_content_dim(table.items[i], rank);
    }
    log_q_.assign(count_ * count_, std::numeric_limits<double>::quiet_NaN());
    parallel_for(count_, workers, [&](std::size_t ia) {
      for (std::size_t ib = 0; ib < count_; ++ib) {
        if (table_.lengths[ia] + table_.lengths[ib] > rank_) continue;
        log_q_[ia * count_ + ib] = log_q_factor(table_.items[ia], table_.items[ib], rank_);
      }
    });
    const int m = median_index(rank);
    for (int k = 0; k <= 2 * k_max; ++k) {
      for (int sa = std::max(0, k - k_max); sa <= std::min(k, k_max); ++sa) {
        const int sb = k - sa;
        for (int ia = table.first_of_size[sa]; ia < table.first_of_size[sa + 1]; ++ia) {
          if (table.lengths[ia] > m - 1) continue;
          for (int ib = table.first_of_size[sb]; ib < table.first_of_size[sb + 1]; ++ib) {
            if (table.lengths[ib] > rank - m) continue;
            pairs_.push_back({ia, ib});
          }
        }
      }
    }
  }

  int rank() const { return rank_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const PartitionTable& table() const { return table_; }

  bool fits(int ia, int ib) const {
    return table_.lengths[static_cast<std::size_t>(ia)] +
               table_.lengths[static_cast<std::size_t>(ib)] <=
           rank_;
  }

  double log_dim(int ia, int ib) const {
    return log_content_[static_cast<std::size_t>(ia)] +
           log_content_[static_cast<std::size_t>(ib)] +
           log_q_[static_cast<std::size_t>(ia) * count_ + static_cast<std::size_t>(ib)];
  }

  double casimir(int ia, int ib) const {
    const long N = rank_;
    const long a = table_.sizes[static_cast<std::size_t>(ia)];
    const long b = table_.sizes[static_cast<std::size_t>(ib)];
    const long k = table_.contents[static_cast<std::size_t>(ia)] +
                   table_.contents[static_cast<std::size_t>(ib)];
    const long num = N * N * (a + b) + 2 * N * k - (a - b) * (a - b);
    return static_cast<double>(num) / static_cast<double>(N * N);
  }

  int delta(const Pair& p) const {
    return table_.sizes[static_cast<std::size_t>(p.a)] - table_.sizes[static_cast<std::size_t>(p.b)];
  }

  template <typename Fn>
  void for_each_successor(const Pair& p, Fn&& fn) const {
    for (int a : table_.up[static_cast<std::size_t>(p.a)]) {
      if (fits(a, p.b)) fn(a, p.b);
    }
    for (int b : table_.down[static_cast<std::size_t>(p.b)]) fn(p.a, b);
  }

  template <typename Fn>
  void for_each_sim(const Pair& p, Fn&& fn) const {
    const auto& t = table_;
    for (int a : t.up[static_cast<std::size_t>(p.a)]) {
      for (int b : t.up[static_cast<std::size_t>(p.b)]) {
        if (fits(a, b)) fn(a, b);
      }
    }
    for (int a : t.down[static_cast<std::size_t>(p.a)]) {
      for (int b : t.down[static_cast<std::size_t>(p.b)]) fn(a, b);
    }
    for (int a : t.sim[static_cast<std::size_t>(p.a)]) {
      if (fits(a, p.b)) fn(a, p.b);
    }
    for (int b : t.sim[static_cast<std::size_t>(p.b)]) {
      if (fits(p.a, b)) fn(p.a, b);
    }
  }

 private:
  const PartitionTable& table_;
  int rank_;
  std::size_t count_;
  std::vector<double> log_content_;
  std::vector<double> log_q_;
  std::vector<Pair> pairs_;
};

struct Accumulated {
  std::array<CompensatedSum, 4> classes;

  double total() const {
    CompensatedSum s;
    for (const auto& c : classes) s.add(c.value());
    return s.value();
  }
};

constexpr std::size_t kBlock = 64;

// Sums kernel(pair) over the enumerated pairs in fixed blocks, reduced in order.
template <typename Kernel>
Accumulated sum_pairs(const RankContext& ctx, double gamma, unsigned workers, Kernel&& kernel) {
  const auto& pairs = ctx.pairs();
  const std::size_t blocks = (pairs.size() + kBlock - 1) / kBlock;
  std::vector<Accumulated> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t blk) {
    Accumulated acc;
    const std::size_t end = std::min(pairs.size(), (blk + 1) * kBlock);
    for (std::size_t i = blk * kBlock; i < end; ++i) {
      const Pair& p = pairs[i];
      const int sa = ctx.table().sizes[static_cast<std::size_t>(p.a)];
      const int sb = ctx.table().sizes[static_cast<std::size_t>(p.b)];
      const auto cls = static_cast<std::size_t>(classify_sizes(sa, sb, ctx.rank(), gamma)) - 1;
      acc.classes[cls].add(kernel(p));
    }
    partial[blk] = acc;
  });
  Accumulated total;
  for (const Accumulated& blk : partial) {
    for (std::size_t c = 0; c < 4; ++c) total.classes[c].add(blk.classes[c].value());
  }
  return total;
}

// Gaussian n-sums indexed by delta + k_max for the unitary group; ones for SU.
std::vector<double> gaussian_table(GroupKind group, SumKind kind, double T, double t, int rank,
                                   const TruncationPolicy& policy) {
  std::vector<double> out(static_cast<std::size_t>(2 * policy.k_max + 1), 1.0);
  if (group == GroupKind::special_unitary) return out;
  const GaussianFactor g = detail::gaussian_factor(kind, T, t, rank);
  for (int delta = -policy.k_max; delta <= policy.k_max; ++delta) {
    out[static_cast<std::size_t>(delta + policy.k_max)] =
        detail::gaussian_sum(g, delta, rank, policy.n_max);
  }
  return out;
}

const TruncationPolicy& checked(const TruncationPolicy& policy, int rank) {
  if (rank < 1) throw RankError("rank must be positive");
  validate(policy);
  return policy;
}

class Engine {
 public:
  Engine(GroupKind group, int rank, const TruncationPolicy& policy, const Execution& exec)
      : group_(group),
        policy_(checked(policy, rank)),
        workers_(worker_count(exec)),
        table_(policy.k_max),
        ctx_(table_, rank, policy.k_max, workers_) {}

  std::uint64_t term_count() const {
    const std::uint64_t n =
        group_ == GroupKind::unitary ? static_cast<std::uint64_t>(2 * policy_.n_max + 1) : 1;
    return static_cast<std::uint64_t>(ctx_.pairs().size()) * n;
  }

  std::size_t g_index(const Pair& p) const {
    return static_cast<std::size_t>(ctx_.delta(p) + policy_.k_max);
  }

  Accumulated partition(int genus, double T) const {
    const auto g0 = gaussian_table(group_, SumKind::partition, T, 0.0, ctx_.rank(), policy_);
    const double power = 2.0 - 2.0 * genus;
    return sum_pairs(ctx_, policy_.gamma, workers_, [&](const Pair& p) {
      return std::exp(-0.5 * T * ctx_.casimir(p.a, p.b) + power * ctx_.log_dim(p.a, p.b)) *
             g0[g_index(p)];
    });
  }

  Accumulated expectation(const SurfaceSpec& s) const {
    const double T = s.total_area;
    const double t = s.loop_area;
    const auto ge = gaussian_table(group_, SumKind::expectation, T, t, ctx_.rank(), policy_);
    const double power = 2.0 - 2.0 * s.genus;
    const double N = ctx_.rank();
    return sum_pairs(ctx_, policy_.gamma, workers_, [&](const Pair& p) {
      const double c = ctx_.casimir(p.a, p.b);
      const double ld = ctx_.log_dim(p.a, p.b);
      CompensatedSum inner;
      ctx_.for_each_successor(p, [&](int a, int b) {
        inner.add(std::exp(ctx_.log_dim(a, b) - ld + 0.5 * t * (c - ctx_.casimir(a, b))));
      });
      return std::exp(-0.5 * T * c + power * ld) * inner.value() / N * ge[g_index(p)];
    });
  }

  Accumulated second_moment(const SurfaceSpec& s) const {
    const double T = s.total_area;
    const double t = s.loop_area;
    const auto g0 = gaussian_table(group_, SumKind::second_moment, T, t, ctx_.rank(), policy_);
    const double power = 2.0 - 2.0 * s.genus;
    const double N = ctx_.rank();
    return sum_pairs(ctx_, policy_.gamma, workers_, [&](const Pair& p) {
      const double c = ctx_.casimir(p.a, p.b);
      const double ld = ctx_.log_dim(p.a, p.b);
      // The diagonal term appears once per common successor.
      int diagonal = 0;
      ctx_.for_each_successor(p, [&](int, int) { ++diagonal; });
      CompensatedSum inner;
      inner.add(static_cast<double>(diagonal));
      ctx_.for_each_sim(p, [&](int a, int b) {
        inner.add(std::exp(ctx_.log_dim(a, b) - ld + 0.5 * t * (c - ctx_.casimir(a, b))));
      });
      return std::exp(-0.5 * T * c + power * ld) * inner.value() / (N * N) * g0[g_index(p)];
    });
  }

  Accumulated sphere_numerator(double T, double t) const {
    const auto gs = gaussian_table(group_, SumKind::sphere_numerator, T, t, ctx_.rank(), policy_);
    const double N = ctx_.rank();
    return sum_pairs(ctx_, policy_.gamma, workers_, [&](const Pair& p) {
      const double c = ctx_.casimir(p.a, p.b);
      const double ld = ctx_.log_dim(p.a, p.b);
      CompensatedSum inner;
      ctx_.for_each_successor(p, [&](int a, int b) {
        inner.add(std::exp(ctx_.log_dim(a, b) - 0.5 * (T - t) * ctx_.casimir(a, b)));
      });
      return std::exp(-0.5 * t * c + ld) * inner.value() / N * gs[g_index(p)];
    });
  }

  Accumulated sphere_partition(double T) const {
    const auto g0 = gaussian_table(group_, SumKind::sphere_partition, T, 0.0, ctx_.rank(), policy_);
    return sum_pairs(ctx_, policy_.gamma, workers_, [&](const Pair& p) {
      return std::exp(-0.5 * T * ctx_.casimir(p.a, p.b) + 2.0 * ctx_.log_dim(p.a, p.b)) *
             g0[g_index(p)];
    });
  }

 private:
  GroupKind group_;
  TruncationPolicy policy_;
  unsigned workers_;
  PartitionTable table_;
  RankContext ctx_;
};

SumReport ratio_report(const Accumulated& num, const Accumulated& den, double num_tail,
                       double den_tail, std::uint64_t terms) {
  SumReport r;
  const double z = den.total();
  r.value = num.total() / z;
  for (std::size_t c = 0; c < 4; ++c) r.class_subtotals[c] = num.classes[c].value() / z;
  r.tail_bound = std::max(num_tail, r.value * den_tail) / z;
  r.term_count = terms;
  return r;
}

struct Moments {
  SumReport expectation;
  SumReport second_moment;
};

Moments moments(GroupKind group, const SurfaceSpec& spec, int rank,
                const TruncationPolicy& policy, const Execution& exec, bool want_second) {
  validate(spec);
  const Engine engine(group, rank, policy, exec);
  const double T = spec.total_area;
  const double t = spec.loop_area;
  const Accumulated z = engine.partition(spec.genus, T);
  const double z_tail =
      detail::kind_tail(SumKind::partition, group, spec.genus, T, t, rank, policy);
  Moments out;
  out.expectation = ratio_report(
      engine.expectation(spec), z,
      detail::kind_tail(SumKind::expectation, group, spec.genus, T, t, rank, policy), z_tail,
      engine.term_count());
  if (want_second) {
    out.second_moment = ratio_report(
        engine.second_moment(spec), z,
        detail::kind_tail(SumKind::second_moment, group, spec.genus, T, t, rank, policy),
        z_tail, engine.term_count());
  }
  return out;
}

SumReport variance_from(const Moments& m) {
  const SumReport& e = m.expectation;
  const SumReport& s = m.second_moment;
  SumReport v;
  v.value = s.value - e.value * e.value;
  for (std::size_t c = 0; c < 4; ++c) {
    v.class_subtotals[c] = s.class_subtotals[c] - e.value * e.class_subtotals[c];
  }
  v.tail_bound = s.tail_bound + 2.0 * std::fabs(e.value) * e.tail_bound +
                 e.tail_bound * e.tail_bound;
  v.term_count = s.term_count;
  return v;
}

}  // namespace

SumReport partition_function(GroupKind group, int genus, double T, int rank,
                             const TruncationPolicy& policy, const Execution& exec) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  if (!(T > 0.0)) throw DomainError("total area must be positive");
  const Engine engine(group, rank, policy, exec);
  const Accumulated z = engine.partition(genus, T);
  SumReport r;
  r.value = z.total();
  for (std::size_t c = 0; c < 4; ++c) r.class_subtotals[c] = z.classes[c].value();
  r.tail_bound = tail_bound(policy, group, genus, T, rank);
  r.term_count = engine.term_count();
  return r;
}

SumReport wilson_expectation(GroupKind group, const SurfaceSpec& spec, int rank,
                             const TruncationPolicy& policy, const Execution& exec) {
  return moments(group, spec, rank, policy, exec, false).expectation;
}

SumReport wilson_second_moment(GroupKind group, const SurfaceSpec& spec, int rank,
                               const TruncationPolicy& policy, const Execution& exec) {
  return moments(group, spec, rank, policy, exec, true).second_moment;
}

SumReport wilson_variance(GroupKind group, const SurfaceSpec& spec, int rank,
                          const TruncationPolicy& policy, const Execution& exec) {
  return variance_from(moments(group, spec, rank, policy, exec, true));
}

SumReport sphere_wilson(double T, double t, int rank, const TruncationPolicy& policy,
                        GroupKind group, const Execution& exec) {
  if (!(T > 0.0)) throw DomainError("total area must be positive");
  if (!(t > 0.0 && t < T)) throw DomainError("loop area must lie in (0, total area)");
  const Engine engine(group, rank, policy, exec);
  return ratio_report(
      engine.sphere_numerator(T, t), engine.sphere_partition(T),
      detail::kind_tail(SumKind::sphere_numerator, group, 0, T, t, rank, policy),
      detail::kind_tail(SumKind::sphere_partition, group, 0, T, t, rank, policy),
      engine.term_count());
}

double tail_bound(const TruncationPolicy& policy, GroupKind group, int genus, double T,
                  int rank) {
  validate(policy);
  if (genus < 1) throw DomainError("genus must be at least 1");
  if (!(T > 0.0)) throw DomainError("total area must be positive");
  if (rank < 1) throw RankError("rank must be positive");
  return detail::kind_tail(SumKind::partition, group, genus, T, 0.0, rank, policy);
}

std::vector<SweepRow> convergence_sweep(GroupKind group, const SurfaceSpec& spec,
                                        std::span<const int> ranks,
                                        const TruncationPolicy& policy, const Execution& exec) {
  if (ranks.empty()) throw DomainError("convergence_sweep: no ranks given");
  std::vector<SweepRow> rows;
  for (int rank : ranks) {
    const Moments m = moments(group, spec, rank, policy, exec, true);
    rows.push_back({rank, m.expectation, m.second_moment, variance_from(m)});
  }
  return rows;
}

}  // namespace ymheat
