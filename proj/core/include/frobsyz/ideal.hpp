#pragma once

#include <span>
#include <vector>

#include "frobsyz/groebner.hpp"

namespace frobsyz {

/// Homogeneous ideal of the ambient ring S. The reduced Gröbner basis is
/// computed at construction, so values are immutable and freely shared.
class HomogeneousIdeal {
 public:
  /// Zero generators are dropped; inhomogeneous ones throw NonHomogeneous.
  HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> generators);

  static HomogeneousIdeal zero(RingPtr ring);
  static HomogeneousIdeal unit(RingPtr ring);
  /// The irrelevant ideal (x_1, ..., x_n).
  static HomogeneousIdeal maximal(RingPtr ring);
  /// m^k, generated by all monomials of degree k (m^0 is the unit ideal).
  static HomogeneousIdeal maximal_power(RingPtr ring, unsigned k);
  static HomogeneousIdeal from_monomials(RingPtr ring, std::span<const Monomial> monomials);
  /// Adopts a stored reduced basis after checking it: monic, sorted,
  /// interreduced, Buchberger criterion, every generator reduces to zero,
  /// and basis[k] = sum_l cofactors[k][l] * generators[l]. Throws
  /// EngineInconsistency naming the first failed check.
  static HomogeneousIdeal from_certified_basis(RingPtr ring, std::vector<Polynomial> generators,
                                               const std::vector<Polynomial>& basis,
                                               const std::vector<std::vector<Polynomial>>& cofactors);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }
  /// Reduced basis as polynomials.
  std::vector<Polynomial> basis() const;

  bool is_zero() const noexcept { return gb_.size() == 0; }
  bool is_unit() const noexcept;
  /// True iff the reduced basis consists of monomials.
  bool is_monomial() const noexcept;

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const HomogeneousIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const HomogeneousIdeal& a, const HomogeneousIdeal& b) {
    return a.gb_ == b.gb_;
  }

 private:
  HomogeneousIdeal(RingPtr ring, std::vector<Polynomial> generators, GroebnerBasis gb);

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  GroebnerBasis gb_;
};

HomogeneousIdeal operator+(const HomogeneousIdeal& a, const HomogeneousIdeal& b);
HomogeneousIdeal operator*(const HomogeneousIdeal& a, const HomogeneousIdeal& b);

/// (I : J) = { f : f J ⊆ I }, as the kernel of S -> (S/I)^t, 1 -> (g_1..g_t).
HomogeneousIdeal ideal_quotient(const HomogeneousIdeal& i, const HomogeneousIdeal& j);

inline constexpr int kSaturationCap = 50;

/// (I : J^∞) by iterated quotients until the reduced bases agree; throws
/// SaturationCap if no stabilization within `cap` steps.
HomogeneousIdeal saturation(const HomogeneousIdeal& i, const HomogeneousIdeal& j,
                            int cap = kSaturationCap);

Polynomial to_polynomial(const RingPtr& ring, const FreeVector& v);

/// For each reduced basis element b_k, polynomials c_kl with
/// b_k = sum_l c_kl * g_l over the ideal's generators.
std::vector<std::vector<Polynomial>> basis_cofactors(const HomogeneousIdeal& ideal);

}  // namespace frobsyz
