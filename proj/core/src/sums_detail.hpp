#pragma once

#include "ymheat/yangmills.hpp"

namespace ymheat::detail {

enum class SumKind { partition, expectation, second_moment, sphere_numerator, sphere_partition };

/// Quadratic n-dependence of a unitary summand:
/// exp(offset - (T/2) (n + delta/N + centre)^2).
struct GaussianFactor {
  double half_area;
  double centre;
  double offset;
};

GaussianFactor gaussian_factor(SumKind kind, double total_area, double loop_area, int rank);

/// Sum over |n| <= n_max of the factor at plateau shift delta / N.
double gaussian_sum(const GaussianFactor& g, int delta, int rank, int n_max);

/// Upper bound on the same sum restricted to |n| > n_max.
double gaussian_tail(const GaussianFactor& g, int delta, int rank, int n_max);

/// Rigorous bound on the total mass of summands excluded by the policy for a
/// sum of the given kind (before division by the normalising partition function).
double kind_tail(SumKind kind, GroupKind group, int genus, double total_area,
                 double loop_area, int rank, const TruncationPolicy& policy);

}  // namespace ymheat::detail
