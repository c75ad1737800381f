#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobsyz/hilbert.hpp"

namespace frobsyz {

/// R = S/I for a proper homogeneous ideal I, with m the irrelevant ideal.
/// Dimension, the saturation (I : m^∞) and the depth-zero flag are computed
/// once at construction.
class QuotientRing {
 public:
  static std::shared_ptr<const QuotientRing> make(HomogeneousIdeal defining_ideal);
  /// The polynomial ring itself (I = 0).
  static std::shared_ptr<const QuotientRing> polynomial(RingPtr ambient);

  const RingPtr& ambient() const noexcept { return ambient_; }
  const HomogeneousIdeal& ideal() const noexcept { return ideal_; }
  const HomogeneousIdeal& maximal() const noexcept { return maximal_; }
  /// (I : m^∞); H⁰_m(R) is this ideal modulo I.
  const HomogeneousIdeal& torsion_ideal() const noexcept { return torsion_; }
  int dimension() const noexcept { return dimension_; }
  bool depth_zero() const noexcept { return depth_zero_; }
  std::size_t num_variables() const noexcept { return ambient_->num_variables(); }

  Polynomial reduce(const Polynomial& f) const { return ideal_.reduce(f); }
  bool is_zero(const Polynomial& f) const { return ideal_.contains(f); }
  /// Componentwise normal form modulo I; result is canonicalized.
  FreeVector reduce(FreeVector v) const;

  /// I + (gens) as an ideal of S.
  HomogeneousIdeal extend(const std::vector<Polynomial>& gens) const;
  /// I + J.
  HomogeneousIdeal extend(const HomogeneousIdeal& j) const;

  /// g·e_c for every basis element g of I and every c < rank.
  std::vector<FreeVector> relations(std::uint32_t rank) const;

  std::string to_string() const;

  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return same_ring(a.ambient_, b.ambient_) && a.ideal_ == b.ideal_;
  }

 private:
  QuotientRing(HomogeneousIdeal ideal);

  RingPtr ambient_;
  HomogeneousIdeal ideal_;
  HomogeneousIdeal maximal_;
  HomogeneousIdeal torsion_;
  int dimension_;
  bool depth_zero_;
};

using QuotientRingPtr = std::shared_ptr<const QuotientRing>;

inline bool same_ring(const QuotientRingPtr& a, const QuotientRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace frobsyz
