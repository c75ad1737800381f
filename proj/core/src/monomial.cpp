#include "frobsyz/monomial.hpp"

#include <algorithm>
#include <limits>

#include "frobsyz/errors.hpp"

namespace frobsyz {

Monomial::Monomial(std::span<const Exponent> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument, "too many variables in monomial");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = exponents[i];
    degree_ += exponents[i];
  }
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent value) {
  if (i >= kMaxVariables) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = value;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) mask |= 1U << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint64_t s = static_cast<std::uint64_t>(a.exps_[i]) + b.exps_[i];
    if (s > std::numeric_limits<Monomial::Exponent>::max()) {
      throw Error(ErrorKind::Overflow, "monomial exponent overflow");
    }
    r.exps_[i] = static_cast<Monomial::Exponent>(s);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(e);
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(e);
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  return (a.support() & b.support()) == 0;
}

Monomial scale_exponents(const Monomial& m, std::uint64_t q) {
  std::array<Monomial::Exponent, kMaxVariables> e{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint64_t v = static_cast<std::uint64_t>(m[i]) * q;
    if (m[i] != 0 && (q > std::numeric_limits<Monomial::Exponent>::max() ||
                      v > std::numeric_limits<Monomial::Exponent>::max())) {
      throw Error(ErrorKind::Overflow, "Frobenius power exceeds exponent range");
    }
    e[i] = static_cast<Monomial::Exponent>(v);
  }
  return Monomial(e);
}

}  // namespace frobsyz
