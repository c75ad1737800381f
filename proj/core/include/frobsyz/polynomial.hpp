#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobsyz/poly_ring.hpp"

namespace frobsyz {

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of a PolyRing. Terms are kept strictly descending in the ring's
/// term order with no zero coefficients; the homogeneous degree is cached.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, long long value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges duplicate monomials, and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& leading_term() const;

  /// Set iff every term has the same degree; the zero polynomial has none.
  std::optional<std::uint64_t> homogeneous_degree() const noexcept { return degree_; }
  bool is_homogeneous() const noexcept { return terms_.empty() || degree_.has_value(); }
  /// First term whose degree differs from the leading term's, if any.
  std::optional<Term> inhomogeneous_term() const;

  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void refresh_degree() noexcept;

  RingPtr ring_;
  std::vector<Term> terms_;
  std::optional<std::uint64_t> degree_;
};

Polynomial pow(const Polynomial& f, unsigned n);

/// f^(p^e) by the freshman's dream: exponents scale by q = p^e and
/// coefficients are fixed (c^q = c in F_p).
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// p^e as an unsigned 64-bit integer; throws Overflow when it does not fit.
std::uint64_t frobenius_q(std::uint32_t p, unsigned e);

}  // namespace frobsyz
