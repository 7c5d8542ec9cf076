#include "ymheat/numeric.hpp"

#include <limits>

namespace ymheat {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Keeps the top 64 bits of x and returns them with the dropped exponent.
std::pair<double, long> split_top(const BigInt& x) {
  const long bits = static_cast<long>(boost::multiprecision::msb(x)) + 1;
  if (bits <= 64) return {static_cast<double>(x.convert_to<std::uint64_t>()), 0};
  const long shift = bits - 64;
  const BigInt top = x >> shift;
  return {static_cast<double>(top.convert_to<std::uint64_t>()), shift};
}

}  // namespace

double log_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log_big: argument must be positive");
  const auto [mantissa, shift] = split_top(x);
  return std::log(mantissa) + static_cast<double>(shift) * kLn2;
}

double to_double(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (num == 0) return 0.0;
  const BigInt limit = BigInt(1) << 53;
  const BigInt abs_num = num < 0 ? BigInt(-num) : num;
  if (abs_num < limit && den < limit) {
    return static_cast<double>(num.convert_to<std::int64_t>()) /
           static_cast<double>(den.convert_to<std::int64_t>());
  }
  // Scale so the integer quotient carries at least 64 significant bits.
  const long nb = static_cast<long>(boost::multiprecision::msb(abs_num));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  const long shift = 66 - (nb - db);
  BigInt q = shift >= 0 ? BigInt((abs_num << shift) / den)
                        : BigInt(abs_num / (den << -shift));
  const auto [mantissa, extra] = split_top(q);
  const double mag = std::ldexp(mantissa, static_cast<int>(extra - shift));
  return num < 0 ? -mag : mag;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace ymheat
