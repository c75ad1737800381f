#include "frobsyz/prime_field.hpp"

#include <string>

#include "frobsyz/errors.hpp"

namespace frobsyz {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxCharacteristic || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument,
                "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t exponent) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1U;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in prime field");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_integer(long long value) const noexcept {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

long long PrimeField::centered(Coeff a) const noexcept {
  if (static_cast<std::uint64_t>(a) * 2 > p_) return static_cast<long long>(a) - p_;
  return a;
}

}  // namespace frobsyz
