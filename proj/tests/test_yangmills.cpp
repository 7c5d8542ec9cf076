#include "ymheat/oracle.hpp"
#include "ymheat/yangmills.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace ymheat;

namespace {

constexpr GroupKind U = GroupKind::unitary;
constexpr GroupKind SU = GroupKind::special_unitary;

const TruncationPolicy kSmall{3, 2};

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_report(const SumReport& a, const SumReport& b) {
  if (!same_bits(a.value, b.value) || !same_bits(a.tail_bound, b.tail_bound)) return false;
  if (a.term_count != b.term_count) return false;
  for (int i = 0; i < 4; ++i) {
    if (!same_bits(a.class_subtotals[i], b.class_subtotals[i])) return false;
  }
  return true;
}

double flat_gauss(double T, int n_max, double shift) {
  double s = 0.0;
  for (int n = -n_max; n <= n_max; ++n) s += std::exp(-0.5 * T * (n + shift) * (n + shift));
  return s;
}

}  // namespace

TEST_SUITE("yangmills") {
  TEST_CASE("theta examples") {
    CHECK(theta(1.0) == doctest::Approx(1.7726372048266521).epsilon(1e-15));
    CHECK(std::fabs(theta(50.0) - 1.0) <= 1e-15);
    double prev = theta(0.1);
    for (double x = 0.2; x < 10.0; x += 0.1) {
      const double v = theta(x);
      CHECK(v > 1.0);
      CHECK(v < prev);
      prev = v;
    }
    CHECK_THROWS_AS(theta(0.0), DomainError);
  }

  TEST_CASE("euler_phi examples") {
    CHECK(euler_phi(std::exp(-1.0)) == doctest::Approx(0.50442865472596640).epsilon(1e-14));
    CHECK(euler_phi(1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    for (double s = 0.05; s < 1.0; s += 0.05) {
      const double v = euler_phi(s);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
    CHECK_THROWS_AS(euler_phi(1.0), DomainError);
    CHECK_THROWS_AS(euler_phi(0.0), DomainError);
  }

  TEST_CASE("limit targets") {
    const LimitTargets l = limit_targets(2.0, 0.7);
    CHECK(l.expectation == doctest::Approx(std::exp(-0.35)).epsilon(1e-15));
    CHECK(l.second_moment == doctest::Approx(std::exp(-0.7)).epsilon(1e-15));
    CHECK(l.theta == doctest::Approx(1.7726372048266521).epsilon(1e-15));
    CHECK(l.inv_phi_sq == doctest::Approx(3.9300719513839796).epsilon(1e-14));
    CHECK(l.theta_over_phi_sq == doctest::Approx(6.9665917586689234).epsilon(1e-14));
  }

  TEST_CASE("plane examples") {
    CHECK(plane_wilson(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(plane_wilson(1e-12) == doctest::Approx(1.0).epsilon(1e-11));
    for (int N : {3, 7, 20}) {
      for (double t : {0.5, 1.0, 2.0}) {
        CHECK(rel_close(plane_wilson_character(t, N), std::exp(-t / 2), 1e-12));
      }
    }
    CHECK_THROWS_AS(plane_wilson(0.0), DomainError);
    CHECK_THROWS_AS(plane_wilson(-1.0), DomainError);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(SurfaceSpec{0, 1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(validate(SurfaceSpec{1, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate(SurfaceSpec{1, -1.0, 0.5}), DomainError);
    CHECK_THROWS_AS(validate(TruncationPolicy{-1, 2}), DomainError);
    CHECK_THROWS_AS(validate(TruncationPolicy{kMaxPartitionSize + 1, 2}), DomainError);
    CHECK_THROWS_AS(validate(TruncationPolicy{3, 2, 0.4}), DomainError);
    CHECK_THROWS_AS(wilson_expectation(U, SurfaceSpec{}, 0, kSmall), RankError);
    CHECK_THROWS_AS(partition_function(U, 0, 1.0, 3, kSmall), DomainError);
    CHECK_THROWS_AS(sphere_wilson(1.0, 1.5, 3, kSmall), DomainError);
    CHECK_THROWS_AS(convergence_sweep(U, SurfaceSpec{}, std::vector<int>{}, kSmall), DomainError);
  }

  TEST_CASE("partition function flat truncations") {
    const TruncationPolicy flat{0, 12};
    for (int g : {1, 2, 3}) {
      CHECK(partition_function(SU, g, 2.0, 10, flat).value == 1.0);
    }
    for (double T : {1.0, 2.0, 5.0}) {
      const SumReport z = partition_function(U, 2, T, 10, flat);
      CHECK(rel_close(z.value, flat_gauss(T, 12, 0.0), 1e-14));
      CHECK(std::fabs(z.value - theta(T / 2)) <= 1e-14);
    }
  }

  TEST_CASE("flat-only expectation and numerator identity") {
    const TruncationPolicy flat{0, 12};
    const double T = 2.0, t = 0.7;
    for (int N : {4, 10, 33}) {
      const SumReport e = wilson_expectation(U, SurfaceSpec{2, T, t}, N, flat);
      double num = 0.0, den = 0.0;
      for (int n = -12; n <= 12; ++n) {
        num += std::exp(-0.5 * T * n * n - t / 2 - t * n / N);
        den += std::exp(-0.5 * T * n * n);
      }
      CHECK(rel_close(e.value, num / den, 1e-13));
      const double shifted =
          std::exp(-t / 2 + t * t / (2 * T * N * N)) * flat_gauss(T, 12, t / (T * N));
      CHECK(rel_close(num, shifted, 1e-12));
    }
  }

  TEST_CASE("flat-only second moment and variance") {
    const TruncationPolicy flat{0, 12};
    for (int N : {3, 8}) {
      const double t = 0.7;
      const SumReport m = wilson_second_moment(U, SurfaceSpec{2, 2.0, t}, N, flat);
      const double n2 = static_cast<double>(N) * N;
      CHECK(rel_close(m.value, (1.0 + (n2 - 1.0) * std::exp(-t)) / n2, 1e-13));
      const SumReport v = wilson_variance(U, SurfaceSpec{3, 60.0, t}, N, flat);
      CHECK(rel_close(v.value, (1.0 - std::exp(-t)) / n2, 1e-9));
    }
  }

  TEST_CASE("small loops are normalised") {
    for (GroupKind g : {U, SU}) {
      for (int N : {3, 8}) {
        const SurfaceSpec s{1, 2.0, 1e-8};
        CHECK(std::fabs(wilson_expectation(g, s, N, TruncationPolicy{6, 4}).value - 1.0) <= 1e-6);
        const SurfaceSpec tiny{2, 2.0, 1e-6};
        CHECK(std::fabs(wilson_variance(g, tiny, N, TruncationPolicy{6, 4}).value) <= 1e-5);
      }
      CHECK(std::fabs(sphere_wilson(2.0, 1e-8, 3, TruncationPolicy{}, g).value - 1.0) <= 1e-6);
    }
  }

  TEST_CASE("small-rank values match the explicit-tuple oracle") {
    const TruncationPolicy p{2, 2};
    for (GroupKind g : {U, SU}) {
      const SurfaceSpec s{1, 2.0, 0.7};
      CHECK(rel_close(wilson_expectation(g, s, 4, p).value,
                      oracle::wilson_expectation(g, s, 4, p), 1e-12));
      CHECK(rel_close(wilson_second_moment(g, s, 4, p).value,
                      oracle::wilson_second_moment(g, s, 4, p), 1e-12));
      CHECK(rel_close(partition_function(g, 1, 2.0, 4, p).value,
                      oracle::partition_function(g, 1, 2.0, 4, p), 1e-12));
      CHECK(rel_close(sphere_wilson(2.0, 0.7, 3, p, g).value,
                      oracle::sphere_wilson(g, 2.0, 0.7, 3, p), 1e-12));
    }
  }

  TEST_CASE("class subtotals add up") {
    const SumReport e = wilson_expectation(SU, SurfaceSpec{1, 2.0, 0.7}, 12, TruncationPolicy{8, 4});
    double s = 0.0;
    for (double c : e.class_subtotals) s += c;
    CHECK(rel_close(s, e.value, 1e-12));
    CHECK(e.class_subtotals[0] > e.class_subtotals[1]);
  }

  TEST_CASE("sphere symmetry under t and T - t") {
    for (GroupKind g : {U, SU}) {
      const SumReport a = sphere_wilson(3.0, 0.8, 3, TruncationPolicy{}, g);
      const SumReport b = sphere_wilson(3.0, 2.2, 3, TruncationPolicy{}, g);
      CHECK(std::fabs(a.value - b.value) <= a.tail_bound + b.tail_bound + 1e-12);
    }
  }

  TEST_CASE("tail bound examples") {
    const TruncationPolicy p{14, 12};
    CHECK(tail_bound(p, SU, 2, 2.0, 40) < 1e-4);
    CHECK(tail_bound(p, U, 2, 2.0, 40) < 1e-4);
    CHECK(tail_bound(TruncationPolicy{20, 12}, SU, 2, 2000.0, 10) == 0.0);
    CHECK(tail_bound(TruncationPolicy{20, 12}, U, 2, 2000.0, 10) == 0.0);
    for (GroupKind g : {U, SU}) {
      double prev = INFINITY;
      for (int k = 0; k <= 16; k += 2) {
        const double b = tail_bound(TruncationPolicy{k, 6}, g, 1, 2.0, 16);
        CHECK(b <= prev);
        prev = b;
      }
      prev = INFINITY;
      for (int n = 0; n <= 8; ++n) {
        const double b = tail_bound(TruncationPolicy{6, n}, g, 1, 2.0, 16);
        CHECK(b <= prev);
        prev = b;
      }
    }
  }

  TEST_CASE("enlarging the policy stays within the tail bound") {
    const TruncationPolicy small{5, 4};
    const TruncationPolicy large{10, 8};
    for (GroupKind g : {U, SU}) {
      const SurfaceSpec s{2, 2.5, 0.9};
      const SumReport a = wilson_expectation(g, s, 6, small);
      const SumReport b = wilson_expectation(g, s, 6, large);
      CHECK(std::fabs(a.value - b.value) <= a.tail_bound);
      const SumReport za = partition_function(g, 1, 2.5, 6, small);
      const SumReport zb = partition_function(g, 1, 2.5, 6, large);
      CHECK(std::fabs(za.value - zb.value) <= za.tail_bound);
      CHECK(b.tail_bound < a.tail_bound);
    }
  }

  TEST_CASE("results do not depend on the worker count") {
    const SurfaceSpec s{1, 2.0, 0.7};
    for (GroupKind g : {U, SU}) {
      const SumReport a = wilson_expectation(g, s, 16, TruncationPolicy{}, Execution{1});
      const SumReport b = wilson_expectation(g, s, 16, TruncationPolicy{}, Execution{3});
      const SumReport c = wilson_expectation(g, s, 16, TruncationPolicy{}, Execution{8});
      CHECK(same_report(a, b));
      CHECK(same_report(a, c));
      const SumReport v1 = wilson_variance(g, s, 9, TruncationPolicy{8, 6}, Execution{1});
      const SumReport v2 = wilson_variance(g, s, 9, TruncationPolicy{8, 6}, Execution{5});
      CHECK(same_report(v1, v2));
    }
  }

  TEST_CASE("convergence sweep") {
    const SurfaceSpec s{2, 2.0, 0.7};
    const std::vector<int> one = {10};
    const auto single = convergence_sweep(U, s, one, kSmall);
    REQUIRE(single.size() == 1);
    CHECK(single[0].rank == 10);
    CHECK(same_report(single[0].expectation, wilson_expectation(U, s, 10, kSmall)));
    CHECK(same_report(single[0].second_moment, wilson_second_moment(U, s, 10, kSmall)));
    CHECK(same_report(single[0].variance, wilson_variance(U, s, 10, kSmall)));

    const std::vector<int> ranks = {8, 16, 32};
    for (GroupKind g : {U, SU}) {
      const auto rows = convergence_sweep(g, s, ranks, TruncationPolicy{});
      REQUIRE(rows.size() == 3);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::fabs(rows[i].expectation.value - std::exp(-0.35)) <
              std::fabs(rows[i - 1].expectation.value - std::exp(-0.35)));
        CHECK(rows[i].variance.value < rows[i - 1].variance.value);
        CHECK(rows[i].variance.value > 0.0);
      }
    }
  }
}
