#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobsyz/ideal.hpp"

namespace frobsyz {

/// Monomial submodule of S^r given by minimal generators per component,
/// with the component twists. Everything graded about a submodule is read
/// off its leading-term module, so this is the workhorse for Hilbert
/// functions, dimension, and length.
struct MonomialModule {
  std::size_t num_variables = 0;
  std::vector<std::vector<Monomial>> components;
  std::vector<int> twists;

  static MonomialModule from_basis(const GroebnerBasis& gb);
};

/// dim_k of the degree-d piece of S^r / M.
std::uint64_t hilbert_function(const MonomialModule& m, long long degree);
/// Krull dimension of S^r / M; -1 for the zero module.
int krull_dimension(const MonomialModule& m);
/// Number of standard monomials; nullopt when infinite.
std::optional<std::uint64_t> standard_monomial_count(const MonomialModule& m);
/// Standard monomials of one component (finite case only).
std::vector<Monomial> standard_monomials(const MonomialModule& m, std::uint32_t component);

std::uint64_t hilbert_function(const HomogeneousIdeal& i, long long degree);
/// Krull dimension of S/I; -1 for the unit ideal.
int krull_dimension(const HomogeneousIdeal& i);
/// λ(S/I); throws InfiniteLength when dim S/I > 0.
std::uint64_t length_of_quotient(const HomogeneousIdeal& i);

/// Minimal primes of a monomial ideal, each as a bitmask of variables.
/// Throws NotMonomial otherwise.
std::vector<std::uint32_t> min_primes_monomial(const HomogeneousIdeal& i);
/// Radical of a monomial ideal (squarefree parts of the generators).
HomogeneousIdeal radical_monomial(const HomogeneousIdeal& i);
HomogeneousIdeal prime_from_mask(const RingPtr& ring, std::uint32_t mask);

}  // namespace frobsyz
