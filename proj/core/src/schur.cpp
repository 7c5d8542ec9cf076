#include "ymheat/weights.hpp"

#include <algorithm>
#include <numeric>

namespace ymheat {

namespace {

using Complex = std::complex<double>;

Complex leibniz_det(const std::vector<Complex>& a, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) {
      term *= a[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])];
    }
    total += (inversions % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Complex lu_det(std::vector<Complex> a, int n) {
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a[static_cast<std::size_t>(r * n + col)]) >
          std::abs(a[static_cast<std::size_t>(pivot * n + col)])) {
        pivot = r;
      }
    }
    if (a[static_cast<std::size_t>(pivot * n + col)] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[static_cast<std::size_t>(pivot * n + c)], a[static_cast<std::size_t>(col * n + c)]);
      }
      det = -det;
    }
    const Complex p = a[static_cast<std::size_t>(col * n + col)];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a[static_cast<std::size_t>(r * n + col)] / p;
      for (int c = col; c < n; ++c) {
        a[static_cast<std::size_t>(r * n + c)] -= f * a[static_cast<std::size_t>(col * n + c)];
      }
    }
  }
  return det;
}

Complex ipow(Complex x, long e) {
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= x;
    x *= x;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::complex<double> schur_eval(const ExplicitWeight& w, std::span<const Complex> x) {
  const int n = w.rank();
  if (static_cast<int>(x.size()) != n) {
    throw DomainError("schur_eval: expected " + std::to_string(n) + " points");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)]) {
        throw DomainError("schur_eval: coincident points at indices " +
                          std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  const long low = w[n - 1];
  Complex prefactor = 1.0;
  if (low < 0) {
    Complex prod = 1.0;
    for (const Complex& xi : x) {
      if (xi == 0.0) throw DomainError("schur_eval: zero point in Laurent case");
      prod *= xi;
    }
    prefactor = 1.0 / ipow(prod, -low);
  }
  const long base = low < 0 ? low : 0;
  std::vector<Complex> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i * n + j)] =
          ipow(x[static_cast<std::size_t>(i)], w[j] - base + (n - 1 - j));
    }
  }
  Complex vandermonde = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      vandermonde *= x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
    }
  }
  const Complex num = n <= 5 ? leibniz_det(a, n) : lu_det(std::move(a), n);
  return prefactor * num / vandermonde;
}

}  // namespace ymheat
