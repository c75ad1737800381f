#pragma once

#include <cstdint>

namespace frobsyz {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in Z/p for a prime 2 <= p < 2^31. Elements are canonical
/// residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxCharacteristic = (1ULL << 31) - 1;

  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    const std::uint32_t s = a + b;  // both < 2^31, no wrap
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t exponent) const noexcept;
  Coeff inv(Coeff a) const;  // throws on zero
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  Coeff from_integer(long long value) const noexcept;

  /// Representative in (-p/2, p/2] for printing.
  long long centered(Coeff a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace frobsyz
