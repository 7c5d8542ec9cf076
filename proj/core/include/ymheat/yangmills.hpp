#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ymheat {

enum class GroupKind { unitary, special_unitary };

struct SurfaceSpec {
  int genus = 1;
  double total_area = 1.0;
  double loop_area = 0.5;
};

/// Largest supported k_max; the pair tables grow like p(k)^2.
inline constexpr int kMaxPartitionSize = 20;

struct TruncationPolicy {
  int k_max = 14;
  int n_max = 12;
  double gamma = 0.3;
  double tail_tol = 1e-6;
};

/// Worker threads for the summation kernels; results do not depend on it.
struct Execution {
  unsigned workers = 1;
};

struct SumReport {
  double value = 0.0;
  double tail_bound = 0.0;
  std::uint64_t term_count = 0;
  std::array<double, 4> class_subtotals{};

  bool within_tolerance(const TruncationPolicy& p) const { return tail_bound <= p.tail_tol; }
};

struct SweepRow {
  int rank = 0;
  SumReport expectation;
  SumReport second_moment;
  SumReport variance;
};

struct LimitTargets {
  double expectation;        // e^{-t/2}
  double second_moment;      // e^{-t}
  double theta;              // theta(T/2)
  double phi;                // phi(e^{-T/2})
  double inv_phi_sq;         // 1 / phi^2
  double theta_over_phi_sq;  // theta / phi^2
};

void validate(const SurfaceSpec& spec);
void validate(const TruncationPolicy& policy);

double theta(double x);
double euler_phi(double s);
LimitTargets limit_targets(double total_area, double loop_area);

SumReport partition_function(GroupKind group, int genus, double total_area, int rank,
                             const TruncationPolicy& policy, const Execution& exec = {});
SumReport wilson_expectation(GroupKind group, const SurfaceSpec& spec, int rank,
                             const TruncationPolicy& policy, const Execution& exec = {});
SumReport wilson_second_moment(GroupKind group, const SurfaceSpec& spec, int rank,
                               const TruncationPolicy& policy, const Execution& exec = {});
SumReport wilson_variance(GroupKind group, const SurfaceSpec& spec, int rank,
                          const TruncationPolicy& policy, const Execution& exec = {});

double plane_wilson(double loop_area);
/// Single surviving character term (1/N) d e^{-c_2 t / 2} for the weight (0,...,0,-1).
double plane_wilson_character(double loop_area, int rank);

SumReport sphere_wilson(double total_area, double loop_area, int rank,
                        const TruncationPolicy& policy,
                        GroupKind group = GroupKind::unitary, const Execution& exec = {});

/// Rigorous bound on the mass of the partition-function terms left out by the policy.
double tail_bound(const TruncationPolicy& policy, GroupKind group, int genus,
                  double total_area, int rank);

std::vector<SweepRow> convergence_sweep(GroupKind group, const SurfaceSpec& spec,
                                        std::span<const int> ranks,
                                        const TruncationPolicy& policy,
                                        const Execution& exec = {});

}  // namespace ymheat
