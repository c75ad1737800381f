#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobsyz/resolution.hpp"

namespace frobsyz {

/// The ideal (gens)R as an R-module: generators g_i in degree deg g_i,
/// relations the syzygies of (g_1 ... g_t) over R. Generators that vanish
/// mod I are dropped.
ModulePresentation ideal_module(const QuotientRingPtr& ring, const std::vector<Polynomial>& gens);

/// H⁰_m(R) = (I : m^∞)/I.
ModulePresentation local_cohomology_h0(const QuotientRingPtr& ring);

struct SocleProfile {
  ModulePresentation h0;
  /// (I : m)/I.
  ModulePresentation soc;
  std::int64_t t = 0;  // λ(H⁰) - λ(Soc)
  std::int64_t l = 0;  // dim_k Soc
  bool h0_is_vector_space = false;
};

SocleProfile socle(const QuotientRingPtr& ring);

/// M/JM for the ideal J = (gens): the relations of M plus g·e_c.
ModulePresentation quotient_by_ideal(const ModulePresentation& m, const std::vector<Polynomial>& gens);

struct TorTable {
  std::vector<std::uint64_t> lengths;  // λ(Tor_j(M, N)), j = 0..i
};

/// λ(Tor_j(M, N)) for j <= i via H_j(G ⊗ N), G a minimal resolution of M.
/// M must have finite length.
TorTable tor_table(const ModulePresentation& m, const ModulePresentation& n, std::size_t i);
/// Same from a resolution reaching index i + 1 (or terminated).
TorTable tor_table(const MinimalResolution& g, const ModulePresentation& n, std::size_t i);

/// σ_i = Σ_{j<=i} (-1)^(i-j+1) λ(Tor_j) from a table with at least i + 1 entries.
std::int64_t sigma(const TorTable& tor, std::size_t i);
std::int64_t sigma(const ModulePresentation& m, const ModulePresentation& n, std::size_t i);

struct EulerCheck {
  std::int64_t lhs = 0;  // Σ (-1)^i λ(C_i)
  std::int64_t rhs = 0;  // Σ (-1)^i λ(H_i)
  bool equal = false;
};

/// Both alternating sums of a complex of finite-length modules. Throws
/// InfiniteLength if a term has positive dimension.
EulerCheck euler_check(const PresentedComplex& c);

/// One line of an identity chain: every value should agree.
struct IdentityRow {
  std::string name;
  std::size_t j = 0;
  std::vector<std::int64_t> values;
  bool holds = false;
};

struct LemmaAddReport {
  Polynomial y;
  std::uint64_t h0_length = 0;
  /// yM = 0. The j = 1 equality λTor_1(M,R/(y)) = λ(M ⊗ (y)) needs it;
  /// otherwise that row checks λ(M ⊗ (y)) - λ(M) + λ(M/yM) instead.
  bool y_kills_m = false;
  std::vector<IdentityRow> rows;
  bool holds = false;
};

/// For y with (0 : y) = H⁰_m(R) as ideals (HypothesisFails otherwise),
/// computes independently, for j = 1..j_max:
///   λ(M ⊗ (y)) = λ(M/H⁰M)
///   λTor_1(M,R/(y)) = λ(M ⊗ (y)) = λ(M/H⁰M)                         yM = 0
///   λTor_j(M,R/(y)) = λTor_{j-1}(M,(y)) = λTor_{j-1}(M,R/H⁰)       j >= 2
///   λTor_1(M,R/H⁰)  = λ(M ⊗ H⁰) - λ(M) + λ(M/H⁰M)
///   λTor_j(M,R/H⁰)  = λTor_{j-1}(M,H⁰)                              j >= 2
LemmaAddReport lemma_add_check(const ModulePresentation& m, const Polynomial& y,
                               std::size_t j_max = 4);

/// (0 : f) in R, as an ideal of S containing I.
HomogeneousIdeal annihilator_of(const QuotientRing& ring, const Polynomial& f);

}  // namespace frobsyz
