#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace frobsyz {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector with cached total degree. Unused trailing slots are zero,
/// so comparisons never need the ring's variable count.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::span<const Exponent> exponents);

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, Exponent value);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Support bitmask: bit i set iff the exponent of variable i is positive.
  std::uint32_t support() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; precondition b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

/// Each exponent multiplied by q; throws Overflow past 32-bit exponents.
Monomial scale_exponents(const Monomial& m, std::uint64_t q);

}  // namespace frobsyz

template <>
struct std::hash<frobsyz::Monomial> {
  std::size_t operator()(const frobsyz::Monomial& m) const noexcept { return m.hash(); }
};
