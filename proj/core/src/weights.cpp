#include "ymheat/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ymheat {

ExplicitWeight::ExplicitWeight(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw RankError("weight rank must be positive");
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("weight parts must be nonincreasing");
    }
  }
}

long ExplicitWeight::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string ExplicitWeight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

CompositeWeight::CompositeWeight(Partition alpha, Partition beta, long n, int rank)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), n_(n), rank_(rank) {
  if (rank_ < 1) throw RankError("rank must be positive");
  if (alpha_.length() + beta_.length() > rank_) {
    throw RankError("rank too small: " + alpha_.to_string() + "," +
                    beta_.to_string() + " needs N >= " +
                    std::to_string(alpha_.length() + beta_.length()) +
                    ", got N = " + std::to_string(rank_));
  }
}

std::string CompositeWeight::to_string() const {
  return "[" + alpha_.to_string() + "," + beta_.to_string() + ",n=" +
         std::to_string(n_) + ",N=" + std::to_string(rank_) + "]";
}

ExplicitWeight compose(const Partition& alpha, const Partition& beta, long n, int rank) {
  const CompositeWeight w(alpha, beta, n, rank);
  return compose(w);
}

ExplicitWeight compose(const CompositeWeight& w) {
  const int N = w.rank();
  std::vector<long> parts(static_cast<std::size_t>(N), w.n());
  for (int i = 0; i < w.alpha().length(); ++i) {
    parts[static_cast<std::size_t>(i)] += w.alpha()[i];
  }
  for (int j = 0; j < w.beta().length(); ++j) {
    parts[static_cast<std::size_t>(N - 1 - j)] -= w.beta()[j];
  }
  return ExplicitWeight(std::move(parts));
}

CompositeWeight decompose(const ExplicitWeight& w) {
  const int N = w.rank();
  const long n = w[median_index(N) - 1];
  std::vector<int> alpha;
  std::vector<int> beta;
  for (int i = 0; i < N && w[i] > n; ++i) alpha.push_back(static_cast<int>(w[i] - n));
  for (int j = N - 1; j >= 0 && w[j] < n; --j) beta.push_back(static_cast<int>(n - w[j]));
  return CompositeWeight(Partition(std::move(alpha)), Partition(std::move(beta)), n, N);
}

ExplicitWeight shift(const ExplicitWeight& w, long m) {
  std::vector<long> parts(w.parts().begin(), w.parts().end());
  for (long& p : parts) p += m;
  return ExplicitWeight(std::move(parts));
}

ExplicitWeight su_normalize(const ExplicitWeight& w) {
  return shift(w, -w[w.rank() - 1]);
}

CompositeWeight su_weight(const Partition& alpha, const Partition& beta, int rank) {
  return CompositeWeight(alpha, beta, beta[0], rank);
}

bool canonical_pair(const Partition& alpha, const Partition& beta, int rank) {
  const int m = median_index(rank);
  return alpha.length() <= m - 1 && beta.length() <= rank - m;
}

Rational content_dim(const Partition& alpha, int rank) {
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < alpha.length(); ++i) {
    for (int j = 0; j < alpha[i]; ++j) {
      num *= rank + j - i;
      den *= hook_length(alpha, i, j);
    }
  }
  return Rational(num, den);
}

double log_content_dim(const Partition& alpha, int rank) {
  double acc = 0.0;
  for (int i = 0; i < alpha.length(); ++i) {
    for (int j = 0; j < alpha[i]; ++j) {
      acc += std::log(static_cast<double>(rank + j - i)) -
             std::log(static_cast<double>(hook_length(alpha, i, j)));
    }
  }
  return acc;
}

namespace {

void check_rank(const Partition& alpha, const Partition& beta, int rank) {
  if (alpha.length() + beta.length() > rank) {
    throw RankError("rank too small: N = " + std::to_string(rank) + " for " +
                    alpha.to_string() + "," + beta.to_string());
  }
}

}  // namespace

Rational q_factor(const Partition& alpha, const Partition& beta, int rank) {
  check_rank(alpha, beta, rank);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= alpha.length(); ++i) {
    for (int j = 1; j <= beta.length(); ++j) {
      const long x = rank + 1 - i - j;
      const long a = alpha[i - 1];
      const long b = beta[j - 1];
      num *= x * (x + a + b);
      den *= (x + a) * (x + b);
    }
  }
  return Rational(num, den);
}

double log_q_factor(const Partition& alpha, const Partition& beta, int rank) {
  check_rank(alpha, beta, rank);
  double acc = 0.0;
  for (int i = 1; i <= alpha.length(); ++i) {
    for (int j = 1; j <= beta.length(); ++j) {
      const double x = rank + 1 - i - j;
      const double a = alpha[i - 1];
      const double b = beta[j - 1];
      acc += std::log1p(-(a * b) / ((x + a) * (x + b)));
    }
  }
  return acc;
}

BigInt dim(const CompositeWeight& w) {
  const Rational d = content_dim(w.alpha(), w.rank()) *
                     content_dim(w.beta(), w.rank()) *
                     q_factor(w.alpha(), w.beta(), w.rank());
  return boost::multiprecision::numerator(d) / boost::multiprecision::denominator(d);
}

BigInt dim_explicit(const ExplicitWeight& w) {
  const int N = w.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      num *= w[i] - w[j] + (j - i);
      den *= j - i;
    }
  }
  return num / den;
}

double log_dim(const CompositeWeight& w) {
  return log_content_dim(w.alpha(), w.rank()) + log_content_dim(w.beta(), w.rank()) +
         log_q_factor(w.alpha(), w.beta(), w.rank());
}

Rational casimir_u(const CompositeWeight& w) {
  const long a = w.alpha().size();
  const long b = w.beta().size();
  const long n = w.n();
  const long k = total_content(w.alpha()) + total_content(w.beta());
  return Rational(a + b + n * n) + Rational(2 * (k + n * (a - b)), w.rank());
}

Rational casimir_u_explicit(const ExplicitWeight& w) {
  const long N = w.rank();
  long acc = 0;
  for (long i = 1; i <= N; ++i) {
    const long p = w[static_cast<int>(i - 1)];
    acc += p * p + (N + 1 - 2 * i) * p;
  }
  return Rational(acc, N);
}

Rational casimir_su(const Partition& alpha, const Partition& beta, int rank) {
  check_rank(alpha, beta, rank);
  const long a = alpha.size();
  const long b = beta.size();
  const long N = rank;
  const long k = total_content(alpha) + total_content(beta);
  return Rational(a + b) + Rational(2 * k, N) - Rational((a - b) * (a - b), N * N);
}

Rational casimir_su_explicit(const ExplicitWeight& w) {
  if (!w.su_normalized()) {
    throw DomainError("casimir_su_explicit: weight " + w.to_string() +
                      " is not SU-normalised");
  }
  const long N = w.rank();
  long squares = 0;
  long linear = 0;
  for (long i = 1; i <= N; ++i) {
    const long p = w[static_cast<int>(i - 1)];
    squares += p * p;
    linear += (N + 1 - 2 * i) * p;
  }
  const long total = w.total();
  return (Rational(squares + linear) - Rational(total * total, N)) / N;
}

std::vector<CompositeWeight> successors(const CompositeWeight& w) {
  // An alpha move that would overflow the rank reproduces a beta removal on
  // the same tuple, so it is skipped rather than reported.
  std::vector<CompositeWeight> out;
  const int N = w.rank();
  for (Partition& a : add_box(w.alpha())) {
    if (a.length() + w.beta().length() <= N) out.emplace_back(std::move(a), w.beta(), w.n(), N);
  }
  for (Partition& b : remove_box(w.beta())) {
    out.emplace_back(w.alpha(), std::move(b), w.n(), N);
  }
  return out;
}

std::vector<CompositeWeight> sim_neighbors(const CompositeWeight& w) {
  std::vector<CompositeWeight> out;
  const int N = w.rank();
  const auto push = [&](const Partition& a, const Partition& b) {
    if (a.length() + b.length() <= N) out.emplace_back(a, b, w.n(), N);
  };
  const auto alpha_up = add_box(w.alpha());
  const auto beta_up = add_box(w.beta());
  for (const Partition& a : alpha_up) {
    for (const Partition& b : beta_up) push(a, b);
  }
  const auto alpha_down = remove_box(w.alpha());
  const auto beta_down = remove_box(w.beta());
  for (const Partition& a : alpha_down) {
    for (const Partition& b : beta_down) push(a, b);
  }
  for (const Partition& a : sim_partitions(w.alpha())) push(a, w.beta());
  for (const Partition& b : sim_partitions(w.beta())) push(w.alpha(), b);
  return out;
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0 / 3.0)) {
    throw DomainError("gamma must lie in (0, 1/3), got " + std::to_string(gamma));
  }
}

WeightClass classify_sizes(int alpha_size, int beta_size, int rank, double gamma) {
  check_gamma(gamma);
  const double threshold = std::pow(static_cast<double>(rank), gamma);
  const bool small_a = alpha_size <= threshold;
  const bool small_b = beta_size <= threshold;
  if (small_a && small_b) return WeightClass::one;
  if (small_b) return WeightClass::two;
  if (small_a) return WeightClass::three;
  return WeightClass::four;
}

WeightClass classify(const CompositeWeight& w, double gamma) {
  return classify_sizes(w.alpha().size(), w.beta().size(), w.rank(), gamma);
}

}  // namespace ymheat
