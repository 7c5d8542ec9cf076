#include "ymheat/oracle.hpp"
#include "ymheat/weights.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace ymheat;

namespace {

ExplicitWeight W(std::vector<long> parts) { return ExplicitWeight(std::move(parts)); }

std::vector<long> zeros(int n) { return std::vector<long>(static_cast<std::size_t>(n), 0); }

std::vector<ExplicitWeight> explicit_list(const std::vector<CompositeWeight>& ws) {
  std::vector<ExplicitWeight> out;
  for (const auto& w : ws) out.push_back(compose(w));
  return out;
}

struct Triple {
  Partition alpha;
  Partition beta;
  long n;
};

bool operator==(const CompositeWeight& w, const Triple& t) {
  return w.alpha() == t.alpha && w.beta() == t.beta && w.n() == t.n;
}

bool same(const std::vector<CompositeWeight>& got, const std::vector<Triple>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!(got[i] == want[i])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("compose examples") {
    CHECK(compose(Partition{}, Partition{}, 2, 3) == W({2, 2, 2}));
    CHECK(compose(Partition{1}, Partition{1}, 0, 4) == W({1, 0, 0, -1}));
    CHECK(compose(Partition{2, 1}, Partition{}, 0, 4) == W({2, 1, 0, 0}));
    CHECK_THROWS_AS(compose(Partition{1, 1}, Partition{1}, 0, 2), RankError);
    CHECK_THROWS_AS(CompositeWeight(Partition{}, Partition{}, 0, 0), RankError);
  }

  TEST_CASE("decompose examples") {
    const auto a = decompose(W({2, 2, 2}));
    CHECK((a.alpha().empty() && a.beta().empty() && a.n() == 2));
    const auto b = decompose(W({1, 0, 0, -1}));
    CHECK((b.alpha() == Partition{1} && b.beta() == Partition{1} && b.n() == 0));
    const auto c = decompose(W({3, 1, 1, 0}));
    CHECK((c.alpha() == Partition{2} && c.beta() == Partition{1} && c.n() == 1));
    CHECK(compose(c) == W({3, 1, 1, 0}));
  }

  TEST_CASE("compose and decompose round trip over small tuples") {
    for (int rank = 1; rank <= 5; ++rank) {
      for (const auto& w :
           oracle::enumerate_weights(GroupKind::unitary, rank, TruncationPolicy{3, 2})) {
        const CompositeWeight c = decompose(w);
        CHECK(compose(c) == w);
        CHECK(canonical_pair(c.alpha(), c.beta(), rank));
      }
    }
  }

  TEST_CASE("shift examples") {
    CHECK(shift(W({1, 0, 0}), 2) == W({3, 2, 2}));
    const auto w = W({4, 1, -2, -2});
    CHECK(shift(shift(w, 5), -5) == w);
    for (int rank = 2; rank <= 8; ++rank) {
      for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
          for (const Partition& alpha : enumerate(a)) {
            for (const Partition& beta : enumerate(b)) {
              if (alpha.length() + beta.length() > rank) continue;
              const auto base = compose(alpha, beta, beta[0], rank);
              CHECK(shift(base, 3 - beta[0]) == compose(alpha, beta, 3, rank));
            }
          }
        }
      }
    }
  }

  TEST_CASE("dim examples") {
    for (int rank : {3, 5, 11}) {
      CHECK(dim(CompositeWeight(Partition{}, Partition{}, 4, rank)) == 1);
      CHECK(dim(CompositeWeight(Partition{1}, Partition{}, -2, rank)) == rank);
      CHECK(dim(CompositeWeight(Partition{1}, Partition{1}, 0, rank)) == rank * rank - 1);
    }
    CHECK(dim_explicit(W(zeros(6))) == 1);
    CHECK(dim_explicit(W({1, 0, 0})) == 3);
    CHECK(dim_explicit(W({1, 0, -1})) == 8);
    CHECK(dim_explicit(W({2, 1, 0})) == 8);
    CHECK(dim_explicit(W({3, 1, 0, 0})) == 45);
  }

  TEST_CASE("log_dim examples") {
    CHECK(log_dim(CompositeWeight(Partition{}, Partition{}, 0, 7)) == 0.0);
    CHECK(log_dim(CompositeWeight(Partition{1}, Partition{}, 0, 7)) ==
          doctest::Approx(std::log(7.0)).epsilon(1e-15));
    for (int rank : {6, 30}) {
      for (int a = 0; a <= 5; ++a) {
        for (const Partition& alpha : enumerate(a)) {
          for (const Partition& beta : enumerate(5 - a)) {
            const CompositeWeight w(alpha, beta, 0, rank);
            CHECK(std::fabs(log_dim(w) - log_big(dim(w))) <= 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("casimir examples") {
    const int N = 6;
    CHECK(casimir_u(CompositeWeight(Partition{}, Partition{}, 3, N)) == 9);
    CHECK(casimir_u(CompositeWeight(Partition{1}, Partition{}, 3, N)) == Rational(9 + 1) + Rational(6, N));
    CHECK(casimir_u(CompositeWeight(Partition{1}, Partition{1}, 0, N)) == 2);
    CHECK(casimir_u_explicit(W(zeros(5))) == 0);
    CHECK(casimir_u_explicit(W({1, 0, 0, 0, 0})) == 1);
    CHECK(casimir_u_explicit(W({1, 0, 0, -1})) == 2);
    CHECK(casimir_su(Partition{}, Partition{}, N) == 0);
    CHECK(casimir_su(Partition{1}, Partition{}, N) == 1 - Rational(1, N * N));
    CHECK(casimir_su(Partition{1}, Partition{1}, N) == 2);
    CHECK(casimir_su_explicit(W(zeros(4))) == 0);
    CHECK(casimir_su_explicit(W({1, 0, 0, 0})) == 1 - Rational(1, 16));
    CHECK(casimir_su_explicit(W({2, 1, 0})) == 2);
    CHECK_THROWS_AS(casimir_su_explicit(W({1, 1, -1})), DomainError);
  }

  TEST_CASE("successors examples") {
    const Partition e;
    CHECK(same(successors(CompositeWeight(e, e, 2, 4)), {{Partition{1}, e, 2}}));
    CHECK(same(successors(CompositeWeight(Partition{1}, e, 0, 4)),
               {{Partition{2}, e, 0}, {Partition{1, 1}, e, 0}}));
    CHECK(same(successors(CompositeWeight(Partition{1}, Partition{1}, 0, 5)),
               {{Partition{2}, Partition{1}, 0}, {Partition{1, 1}, Partition{1}, 0},
                {Partition{1}, e, 0}}));
  }

  TEST_CASE("sim_neighbors examples") {
    const Partition e;
    CHECK(same(sim_neighbors(CompositeWeight(e, e, -1, 5)), {{Partition{1}, Partition{1}, -1}}));
    CHECK(same(sim_neighbors(CompositeWeight(Partition{1}, e, 0, 5)),
               {{Partition{2}, Partition{1}, 0}, {Partition{1, 1}, Partition{1}, 0}}));
    CHECK(same(sim_neighbors(CompositeWeight(Partition{2}, e, 0, 5)),
               {{Partition{3}, Partition{1}, 0}, {Partition{2, 1}, Partition{1}, 0},
                {Partition{1, 1}, e, 0}}));
  }

  TEST_CASE("successors agree with tuple branching") {
    for (int rank = 1; rank <= 6; ++rank) {
      for (const auto& w :
           oracle::enumerate_weights(GroupKind::unitary, rank, TruncationPolicy{3, 1})) {
        auto got = explicit_list(successors(decompose(w)));
        auto want = oracle::tuple_successors(w);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("sim_neighbors agree with tuple branching") {
    for (int rank = 1; rank <= 6; ++rank) {
      for (const auto& w :
           oracle::enumerate_weights(GroupKind::unitary, rank, TruncationPolicy{3, 1})) {
        std::set<ExplicitWeight> want;
        for (const auto& up : oracle::tuple_successors(w)) {
          for (const auto& down : oracle::tuple_predecessors(up)) {
            if (!(down == w)) want.insert(down);
          }
        }
        const auto got = explicit_list(sim_neighbors(decompose(w)));
        CHECK(got.size() == want.size());
        CHECK(std::set<ExplicitWeight>(got.begin(), got.end()) == want);
      }
    }
  }

  TEST_CASE("classify examples") {
    CHECK(classify(CompositeWeight(Partition{}, Partition{}, 7, 9), 0.1) == WeightClass::one);
    CHECK(classify_sizes(3, 1, 16, 0.25) == WeightClass::two);
    CHECK(classify_sizes(1, 3, 16, 0.25) == WeightClass::three);
    CHECK(classify_sizes(3, 5, 16, 0.25) == WeightClass::four);
    CHECK(classify_sizes(2, 2, 16, 0.25) == WeightClass::one);
    CHECK_THROWS_AS(classify_sizes(1, 1, 16, 0.5), DomainError);
    CHECK_THROWS_AS(check_gamma(0.0), DomainError);
  }

  TEST_CASE("q_factor examples") {
    CHECK(q_factor(Partition{}, Partition{3, 1}, 7) == 1);
    CHECK(q_factor(Partition{1}, Partition{1}, 9) == Rational(80, 81));
    // ((2),(1)) at N = 4: d = 10 * 4 * Q must equal the Weyl product for (2,0,0,-1).
    const Rational q = q_factor(Partition{2}, Partition{1}, 4);
    CHECK(q == Rational(9, 10));
    CHECK(dim_explicit(W({2, 0, 0, -1})) == 36);
  }

  TEST_CASE("schur_eval examples") {
    using C = std::complex<double>;
    const std::vector<C> x = {C(0.7, 0.2), C(-1.3, 0.5), C(0.4, -0.9)};
    CHECK(std::abs(schur_eval(W({0, 0, 0}), x) - C(1.0)) < 1e-12);
    CHECK(std::abs(schur_eval(W({1, 0, 0}), x) - (x[0] + x[1] + x[2])) < 1e-12);
    const C e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    CHECK(std::abs(schur_eval(W({1, 1, 0}), x) - e2) < 1e-12);
    const C e3 = x[0] * x[1] * x[2];
    CHECK(std::abs(schur_eval(W({0, 0, -1}), x) - e2 / e3) < 1e-12);
    const std::vector<C> bad = {C(1.0), C(1.0), C(2.0)};
    CHECK_THROWS_AS(schur_eval(W({1, 0, 0}), bad), DomainError);
    CHECK_THROWS_AS(schur_eval(W({1, 0}), x), DomainError);
  }
}
