#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobsyz/polynomial.hpp"

namespace frobsyz {

struct VecTerm {
  Monomial monomial;
  std::uint32_t component;
  Coeff coeff;

  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Sparse element of a free module S^r over the ambient polynomial ring.
/// Term order is whatever the owner established: ModuleOrder::normalize for
/// Gröbner work, `canonicalize` (component, then descending monomial) at
/// module boundaries.
struct FreeVector {
  std::vector<VecTerm> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const VecTerm& lead() const { return terms.front(); }

  static FreeVector unit(std::uint32_t component);
  static FreeVector from_polynomial(const Polynomial& f, std::uint32_t component = 0);

  /// Coordinate `component` as a polynomial.
  Polynomial entry(const RingPtr& ring, std::uint32_t component) const;
  std::uint32_t max_component() const noexcept;

  friend bool operator==(const FreeVector&, const FreeVector&) = default;
};

/// Sort by component ascending then monomial descending; merge and drop zeros.
void canonicalize(FreeVector& v, const PolyRing& ring);

/// Builds a vector from per-component polynomials (index = component).
FreeVector make_vector(std::span<const Polynomial> entries);

/// Module term order on S^r with degree shifts. Terms compare by elimination
/// block (components below `elimination_block` dominate), then twisted degree
/// (monomial degree + twist of the component), then the ring's term order,
/// then lower component index first.
class ModuleOrder {
 public:
  ModuleOrder(RingPtr ring, std::vector<int> twists, std::uint32_t elimination_block = 0);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<int>& twists() const noexcept { return twists_; }
  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(twists_.size()); }
  std::uint32_t elimination_block() const noexcept { return elim_; }

  long long degree(const VecTerm& t) const noexcept {
    return static_cast<long long>(t.monomial.degree()) + twists_[t.component];
  }

  std::strong_ordering compare(const VecTerm& a, const VecTerm& b) const noexcept {
    if (elim_ != 0) {
      const bool ha = a.component < elim_;
      const bool hb = b.component < elim_;
      if (ha != hb) return ha ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const long long da = degree(a);
    const long long db = degree(b);
    if (da != db) return da <=> db;
    const auto c = ring_->compare(a.monomial, b.monomial);
    if (c != 0) return c;
    return b.component <=> a.component;
  }

  /// Sort descending, merge equal terms, drop zeros. Validates components.
  void normalize(FreeVector& v) const;

  /// Common twisted degree of all terms; nullopt for zero or inhomogeneous.
  std::optional<long long> homogeneous_degree(const FreeVector& v) const;

  /// a - c * m * b for vectors already sorted in this order.
  FreeVector sub_multiple(std::span<const VecTerm> a, Coeff c, const Monomial& m,
                          std::span<const VecTerm> b) const;
  FreeVector add(const FreeVector& a, const FreeVector& b) const;
  FreeVector scale(const FreeVector& a, Coeff c, const Monomial& m) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::uint32_t elim_;
};

}  // namespace frobsyz
