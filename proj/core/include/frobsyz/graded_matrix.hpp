#pragma once

#include <string>
#include <vector>

#include "frobsyz/quotient_ring.hpp"

namespace frobsyz {

/// ⊕ R(-twist_j); the twist of a basis element is its degree.
struct GradedFreeModule {
  QuotientRingPtr ring;
  std::vector<int> twists;

  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(twists.size()); }
  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
    return same_ring(a.ring, b.ring) && a.twists == b.twists;
  }
};

/// Homogeneous map source -> target, stored as one canonical vector per
/// source basis element (the columns), each reduced modulo I. Entry (r, c)
/// has degree twist_source(c) - twist_target(r) or is zero.
class GradedMatrix {
 public:
  /// Reduces columns mod I and checks homogeneity (NonHomogeneous otherwise).
  GradedMatrix(GradedFreeModule source, GradedFreeModule target, std::vector<FreeVector> columns);
  /// Entries given row-major, rows = target rank.
  static GradedMatrix from_entries(GradedFreeModule source, GradedFreeModule target,
                                   const std::vector<std::vector<Polynomial>>& rows);
  static GradedMatrix identity(const GradedFreeModule& module);
  static GradedMatrix zero(GradedFreeModule source, GradedFreeModule target);

  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  const QuotientRingPtr& ring() const noexcept { return source_.ring; }
  std::uint32_t rows() const noexcept { return target_.rank(); }
  std::uint32_t cols() const noexcept { return source_.rank(); }
  const std::vector<FreeVector>& columns() const noexcept { return columns_; }
  const FreeVector& column(std::uint32_t c) const { return columns_.at(c); }

  Polynomial entry(std::uint32_t row, std::uint32_t col) const;
  bool is_zero() const noexcept;
  /// Every nonzero entry has positive degree (image inside m·target).
  bool is_minimal() const noexcept;

  /// Image of a source vector, reduced mod I.
  FreeVector apply(const FreeVector& v) const;

  std::string to_string() const;

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.columns_ == b.columns_;
  }

 private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<FreeVector> columns_;
};

/// a ∘ b; throws InvalidArgument if b's target differs from a's source.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

/// Degree of a nonzero homogeneous vector of a free module with given twists.
long long vector_degree(const FreeVector& v, const std::vector<int>& twists);

}  // namespace frobsyz
