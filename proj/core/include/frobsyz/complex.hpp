#pragma once

#include <vector>

#include "frobsyz/module_presentation.hpp"

namespace frobsyz {

/// G_0 <- G_1 <- ... <- G_n of graded free modules; map(j): G_j -> G_{j-1}.
/// Consecutive maps must compose to zero (ComposesNonzero otherwise).
class FreeComplex {
 public:
  explicit FreeComplex(GradedFreeModule g0);
  explicit FreeComplex(std::vector<GradedMatrix> maps);

  const QuotientRingPtr& ring() const noexcept { return terms_.front().ring; }
  /// Index of the last term.
  std::size_t length() const noexcept { return maps_.size(); }
  /// Terms past the end are the zero module.
  GradedFreeModule term(std::size_t j) const;
  /// map(j) for 1 <= j; zero matrices past the end.
  GradedMatrix map(std::size_t j) const;
  const std::vector<GradedMatrix>& maps() const noexcept { return maps_; }
  std::vector<std::uint32_t> ranks() const;

  friend bool operator==(const FreeComplex& a, const FreeComplex& b) {
    return a.terms_ == b.terms_ && a.maps_ == b.maps_;
  }

 private:
  std::vector<GradedFreeModule> terms_;
  std::vector<GradedMatrix> maps_;
};

/// Complex of presented modules C_j = F_j / U_j with maps lifted to the
/// covers: maps[j-1] is F_j -> F_{j-1} and must carry U_j into U_{j-1} + I.
struct PresentedComplex {
  QuotientRingPtr ring;
  std::vector<GradedFreeModule> covers;
  std::vector<std::vector<FreeVector>> relations;
  std::vector<GradedMatrix> maps;

  std::size_t length() const noexcept { return covers.empty() ? 0 : covers.size() - 1; }
  ModulePresentation term(std::size_t j) const;
};

PresentedComplex as_presented(const FreeComplex& g, std::size_t last);
/// G ⊗ N truncated at index `last`: basis e_a ⊗ n_b with twist g_a + u_b,
/// maps φ_j ⊗ id, relations e_a ⊗ (relations of N).
PresentedComplex tensor(const FreeComplex& g, const ModulePresentation& n, std::size_t last);

}  // namespace frobsyz
