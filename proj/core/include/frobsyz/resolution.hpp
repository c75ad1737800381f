#pragma once

#include <optional>
#include <vector>

#include "frobsyz/complex.hpp"

namespace frobsyz {

inline constexpr int kDefaultStepCap = 12;

/// A minimal homogeneous generating set, chosen among `candidates`, of the
/// image of (candidates + base) in (S/I)^r modulo the span of `base`.
/// Graded Nakayama: walk candidates by degree and keep those not already in
/// the submodule generated so far. Kept vectors are reduced mod I.
std::vector<FreeVector> minimal_generators(const QuotientRing& ring, const std::vector<int>& twists,
                                           std::vector<FreeVector> candidates,
                                           const std::vector<FreeVector>& base = {});

/// ψ with im ψ = ker φ over R; the columns are a minimal generating set.
GradedMatrix syzygy_matrix(const GradedMatrix& phi);

/// Presentation with minimal generators and minimal relations: unit entries
/// are pivoted away, then the relations are minimalized.
GradedMatrix minimal_presentation(const ModulePresentation& m);

struct MinimalResolution {
  FreeComplex complex;
  /// True when some G_j with j <= steps is zero, so the complex (padded with
  /// zero terms) is the whole resolution. Detecting pd = n needs steps > n.
  bool terminated = false;

  std::vector<std::uint32_t> betti() const { return complex.ranks(); }
  /// Index of the last nonzero term when terminated; -1 for M = 0.
  std::optional<int> projective_dimension() const;
};

/// G_0 <- G_1 <- ... <- G_steps with H_0 = M and every entry of positive degree.
MinimalResolution minimal_free_resolution(const ModulePresentation& m, int steps);

/// Syz_i M = im(φ_i) ≅ coker(φ_{i+1}: G_{i+1} -> G_i), for i >= 1.
ModulePresentation syzygy_module(const ModulePresentation& m, int i);
/// Same from a resolution that reaches index i + 1.
ModulePresentation syzygy_module(const MinimalResolution& res, int i);

}  // namespace frobsyz
