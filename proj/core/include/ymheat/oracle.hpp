#pragma once

#include "ymheat/weights.hpp"
#include "ymheat/yangmills.hpp"

#include <vector>

/// Brute-force character sums over explicit weight tuples. Branching is done
/// directly on tuples and every dimension and Casimir number comes from the
/// explicit Weyl and Casimir formulas. Intended for small ranks only.
namespace ymheat::oracle {

/// All weights whose median decomposition has |alpha|, |beta| <= k_max
/// (and |n| <= n_max for U(N)); SU(N) weights are normalised.
std::vector<ExplicitWeight> enumerate_weights(GroupKind group, int rank,
                                              const TruncationPolicy& policy);

/// Tuples obtained by increasing one part by one.
std::vector<ExplicitWeight> tuple_successors(const ExplicitWeight& w);

/// Tuples obtained by decreasing one part by one.
std::vector<ExplicitWeight> tuple_predecessors(const ExplicitWeight& w);

double partition_function(GroupKind group, int genus, double total_area, int rank,
                          const TruncationPolicy& policy);
double wilson_expectation(GroupKind group, const SurfaceSpec& spec, int rank,
                          const TruncationPolicy& policy);
double wilson_second_moment(GroupKind group, const SurfaceSpec& spec, int rank,
                            const TruncationPolicy& policy);
double sphere_wilson(GroupKind group, double total_area, double loop_area, int rank,
                     const TruncationPolicy& policy);

}  // namespace ymheat::oracle
