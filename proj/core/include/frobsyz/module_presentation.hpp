#pragma once

#include <optional>
#include <string>

#include "frobsyz/graded_matrix.hpp"

namespace frobsyz {

/// M = coker(A: F1 -> F0) over R, i.e. S^r / (im A + I S^r). The Gröbner
/// basis of the relation module, the dimension, and the length (when
/// finite) are computed at construction.
class ModulePresentation {
 public:
  explicit ModulePresentation(GradedMatrix presentation);

  /// R^r(twists) / (span of the given vectors).
  static ModulePresentation from_relations(const QuotientRingPtr& ring, std::vector<int> twists,
                                           std::vector<FreeVector> relations);
  /// R / J for J = (gens).
  static ModulePresentation quotient(const QuotientRingPtr& ring,
                                     const std::vector<Polynomial>& gens);
  static ModulePresentation free(const QuotientRingPtr& ring, std::vector<int> twists);
  static ModulePresentation zero(const QuotientRingPtr& ring);

  const QuotientRingPtr& ring() const noexcept { return matrix_.ring(); }
  const GradedMatrix& matrix() const noexcept { return matrix_; }
  std::uint32_t num_generators() const noexcept { return matrix_.rows(); }
  const std::vector<int>& generator_twists() const noexcept { return matrix_.target().twists; }
  const GroebnerBasis& groebner() const noexcept { return gb_; }

  /// Krull dimension; -1 for the zero module.
  int dimension() const noexcept { return dimension_; }
  bool is_zero() const noexcept { return dimension_ < 0; }
  bool has_finite_length() const noexcept { return dimension_ <= 0; }
  std::optional<std::uint64_t> length() const noexcept { return length_; }
  /// Throws InfiniteLength when dimension > 0.
  std::uint64_t finite_length() const;
  std::uint64_t hilbert_function(long long degree) const;

  /// Normal form of an element of the cover S^r modulo the relations.
  FreeVector reduce(FreeVector v) const;
  bool is_zero_element(FreeVector v) const;
  /// m^n · M = 0.
  bool annihilated_by_maximal_power(unsigned n) const;
  /// m · M = 0, i.e. M is a k-vector space.
  bool is_vector_space() const { return annihilated_by_maximal_power(1); }

  std::string to_string() const;

 private:
  GradedMatrix matrix_;
  GroebnerBasis gb_;
  int dimension_;
  std::optional<std::uint64_t> length_;
};

/// Gröbner basis of im(columns) + I·S^r under ModuleOrder(ambient, twists).
GroebnerBasis submodule_basis(const QuotientRing& ring, const std::vector<int>& twists,
                              const std::vector<FreeVector>& columns);

}  // namespace frobsyz
