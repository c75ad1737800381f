#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "frobsyz/free_vector.hpp"

namespace frobsyz {

/// A Gröbner basis of a submodule of S^r under a fixed ModuleOrder.
/// Elements are monic and sorted in the basis order; when `reduced()` the
/// basis is the unique reduced one, so two reduced bases for the same order
/// are equal iff the submodules are.
class GroebnerBasis {
 public:
  GroebnerBasis(ModuleOrder order, std::vector<FreeVector> elements, bool reduced);

  const ModuleOrder& order() const noexcept { return order_; }
  std::span<const FreeVector> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool reduced() const noexcept { return reduced_; }
  std::uint32_t rank() const noexcept { return order_.rank(); }

  /// Full remainder. `v` must already be normalized in this order.
  FreeVector normal_form(FreeVector v) const;
  bool reduces_to_zero(FreeVector v) const;
  /// Normalizes then reduces; true iff v lies in the submodule.
  bool contains(FreeVector v) const;

  /// Minimal leading monomials, one list per component.
  std::vector<std::vector<Monomial>> leading_monomials() const;

  /// Every S-pair reduces to zero (used to re-verify cached bases).
  bool satisfies_buchberger_criterion() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  const FreeVector* find_reducer(const VecTerm& t) const;

  ModuleOrder order_;
  std::vector<FreeVector> elements_;
  bool reduced_;
  std::vector<std::vector<std::size_t>> by_component_;
};

struct BuchbergerOptions {
  /// Stop after all pairs of twisted degree <= bound have been processed.
  std::optional<long long> degree_bound;
  std::size_t max_basis_size = 200000;
};

/// Incremental homogeneous Buchberger: generators and S-pairs are processed
/// in increasing twisted degree (sugar equals degree for homogeneous input),
/// pairs pruned with the Gebauer–Möller criteria. After `complete(D)` the
/// basis is a Gröbner basis in all degrees <= D.
class GroebnerBuilder {
 public:
  explicit GroebnerBuilder(ModuleOrder order, std::size_t max_basis_size = 200000);

  const ModuleOrder& order() const noexcept { return order_; }

  /// Throws NonHomogeneous for inhomogeneous vectors; zero is ignored.
  void add_generator(FreeVector v);
  void complete(std::optional<long long> degree_bound = std::nullopt);
  bool is_complete() const noexcept;

  /// Membership test valid for vectors of degree <= the completed degree.
  bool reduces_to_zero(FreeVector v) const;
  FreeVector normal_form(FreeVector v) const;

  /// Interreduced, monic, sorted basis. Requires a full `complete()`.
  GroebnerBasis finish() const;

  std::size_t basis_size() const noexcept { return basis_.size(); }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t component;
    long long degree;
  };

  void insert(FreeVector h);
  FreeVector s_polynomial(const Pair& pair) const;
  FreeVector top_reduce(FreeVector v) const;
  const FreeVector* find_reducer(const VecTerm& t) const;
  std::optional<long long> next_degree() const;

  ModuleOrder order_;
  std::size_t max_basis_size_;
  std::vector<FreeVector> basis_;
  std::vector<bool> redundant_;
  std::vector<std::vector<std::size_t>> by_component_;
  std::vector<Pair> pairs_;
  std::vector<std::pair<long long, FreeVector>> pending_;
  long long completed_degree_ = std::numeric_limits<long long>::min();
};

GroebnerBasis buchberger(const ModuleOrder& order, std::vector<FreeVector> generators,
                         const BuchbergerOptions& options = {});

/// Gröbner basis of an ideal of S (rank-one module, zero twist).
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const BuchbergerOptions& options = {});

/// Generators of { a in S^m : sum_j a_j * columns[j] lies in the submodule of
/// S^r spanned by `target_relations` }. Columns live in S^r with
/// `target_twists`; column j must be homogeneous of degree source_twists[j].
/// Computed by elimination: a Gröbner basis of the graph (column_j, e_j) in
/// S^(r+m) with the S^r block dominating; the basis elements supported in the
/// second block are the kernel. Output vectors are canonicalized, not minimal.
std::vector<FreeVector> kernel_modulo(const RingPtr& ring, std::span<const FreeVector> columns,
                                      std::span<const int> source_twists,
                                      std::span<const int> target_twists,
                                      std::span<const FreeVector> target_relations);

}  // namespace frobsyz
