#pragma once

#include "ymheat/numeric.hpp"
#include "ymheat/partitions.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace ymheat {

/// Highest weight given by its full nonincreasing tuple.
class ExplicitWeight {
 public:
  explicit ExplicitWeight(std::vector<long> parts);

  int rank() const { return static_cast<int>(parts_.size()); }
  std::span<const long> parts() const { return parts_; }
  long operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  long total() const;
  bool su_normalized() const { return parts_.back() == 0; }
  std::string to_string() const;

  friend bool operator==(const ExplicitWeight&, const ExplicitWeight&) = default;
  friend auto operator<=>(const ExplicitWeight&, const ExplicitWeight&) = default;

 private:
  std::vector<long> parts_;
};

/// Highest weight lambda_N(alpha, beta, n): plateau n raised by alpha on the
/// top rows and lowered by reversed beta on the bottom rows. The plateau may
/// be empty, so the rank only has to satisfy l(alpha) + l(beta) <= N.
class CompositeWeight {
 public:
  CompositeWeight(Partition alpha, Partition beta, long n, int rank);

  const Partition& alpha() const { return alpha_; }
  const Partition& beta() const { return beta_; }
  long n() const { return n_; }
  int rank() const { return rank_; }
  bool flat() const { return alpha_.empty() && beta_.empty(); }
  std::string to_string() const;

  friend bool operator==(const CompositeWeight&, const CompositeWeight&) = default;

 private:
  Partition alpha_;
  Partition beta_;
  long n_;
  int rank_;
};

enum class WeightClass { one = 1, two = 2, three = 3, four = 4 };

/// Index of the median part used as plateau by decompose.
inline int median_index(int rank) { return (rank + 2) / 2; }

ExplicitWeight compose(const Partition& alpha, const Partition& beta, long n, int rank);
ExplicitWeight compose(const CompositeWeight& w);
CompositeWeight decompose(const ExplicitWeight& w);
ExplicitWeight shift(const ExplicitWeight& w, long m);

/// SU normalisation: subtract the last part.
ExplicitWeight su_normalize(const ExplicitWeight& w);

/// Composite weight representing the SU(N) weight with plateau beta_1.
CompositeWeight su_weight(const Partition& alpha, const Partition& beta, int rank);

/// True when (alpha, beta) is the canonical median decomposition for rank N.
bool canonical_pair(const Partition& alpha, const Partition& beta, int rank);

/// Dimension of the GL(N) representation with highest weight alpha
/// (product over boxes of (N + content) / hook).
Rational content_dim(const Partition& alpha, int rank);
double log_content_dim(const Partition& alpha, int rank);

Rational q_factor(const Partition& alpha, const Partition& beta, int rank);
double log_q_factor(const Partition& alpha, const Partition& beta, int rank);

BigInt dim(const CompositeWeight& w);
BigInt dim_explicit(const ExplicitWeight& w);
double log_dim(const CompositeWeight& w);

Rational casimir_u(const CompositeWeight& w);
Rational casimir_u_explicit(const ExplicitWeight& w);
Rational casimir_su(const Partition& alpha, const Partition& beta, int rank);
Rational casimir_su_explicit(const ExplicitWeight& w);

/// Weights obtained by adding one box (one part increased by one).
std::vector<CompositeWeight> successors(const CompositeWeight& w);

/// Weights sharing a common successor with w, excluding w itself.
std::vector<CompositeWeight> sim_neighbors(const CompositeWeight& w);

WeightClass classify(const CompositeWeight& w, double gamma);
WeightClass classify_sizes(int alpha_size, int beta_size, int rank, double gamma);
void check_gamma(double gamma);

/// Bialternant evaluation of the Schur function at the points x.
std::complex<double> schur_eval(const ExplicitWeight& w,
                                std::span<const std::complex<double>> x);

}  // namespace ymheat
