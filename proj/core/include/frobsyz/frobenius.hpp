#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobsyz/rational.hpp"
#include "frobsyz/resolution.hpp"

namespace frobsyz {

/// I^[q] = (g^q : g a generator of I), q = p^e.
HomogeneousIdeal bracket_power(const HomogeneousIdeal& i, unsigned e);

/// Entries raised to the q-th power and reduced mod I; twists scaled by q.
GradedMatrix frobenius_matrix(const GradedMatrix& m, unsigned e);
/// F^e(G). Throws CompositionBroken if the image fails to compose to zero.
FreeComplex frobenius_complex(const FreeComplex& g, unsigned e);

/// 4 for p = 2, 3 for p = 3, 2 otherwise.
unsigned default_e_max(std::uint32_t p) noexcept;

/// Table λ(H_i(F^e(G))) for 0 <= i <= i_max, 0 <= e <= e_max, indexed
/// [i][e]. The complex must reach index i_max + 1 (or be a terminated
/// resolution). Throws InfiniteLength if some homology is not of finite length.
std::vector<std::vector<std::uint64_t>> frobenius_homology_lengths(const FreeComplex& g,
                                                                   std::size_t i_max,
                                                                   unsigned e_max);
std::vector<std::vector<std::uint64_t>> frobenius_homology_lengths(const ModulePresentation& m,
                                                                   std::size_t i_max,
                                                                   unsigned e_max);

enum class Verdict { ExactZero, Decaying, Positive, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct FrobeniusSample {
  unsigned e;
  std::uint64_t length;
  Rational ratio;  // length / p^(e d)
};

struct FBettiEstimate {
  std::size_t i = 0;
  std::uint32_t p = 0;
  int d = 0;
  std::vector<FrobeniusSample> samples;
  Verdict verdict = Verdict::Inconclusive;
};

/// Samples for e = 0..e_max from a row of lengths; verdict from the e >= 1
/// samples:
///   exact-zero   every λ_e = 0;
///   positive     r_emax > 0, every r_e >= r_emax / 2, and the last (up to)
///                three ratios non-decreasing;
///   decaying     the last (up to) three λ_e are positive and grow with
///                slope at most d - 1/2 in log_p, i.e.
///                λ_last^2 <= p^((k-1)(2d-1)) λ_first^2 over k samples;
///   inconclusive otherwise.
FBettiEstimate make_estimate(std::size_t i, std::uint32_t p, int d,
                             const std::vector<std::uint64_t>& lengths);
Verdict decide_verdict(const std::vector<FrobeniusSample>& samples, std::uint32_t p, int d);

FBettiEstimate fbetti_estimate(const ModulePresentation& m, std::size_t i, unsigned e_max);

struct VanishingReport {
  int d = 0;
  bool depth_zero = false;
  std::optional<bool> cohen_macaulay;
  /// Some G_j = 0 within the resolved range.
  bool finite_pd = false;
  std::optional<int> projective_dimension;
  std::size_t i_lo = 1;
  std::size_t i_hi = 1;
  unsigned e_max = 0;
  std::vector<FBettiEstimate> estimates;  // i_lo..i_hi
  /// (a) finite pd: every sampled higher homology is exactly zero.
  std::optional<bool> acyclicity_holds;
  /// (b) infinite pd: every window of d+1 consecutive indices has a positive verdict.
  std::optional<bool> windows_d_plus_one_positive;
  /// (b) for CM rings: every window of d consecutive indices has one.
  std::optional<bool> windows_d_positive;
  std::string conclusion;
};

VanishingReport vanishing_report(const ModulePresentation& m, std::size_t i_lo, std::size_t i_hi,
                                 unsigned e_max, std::uint64_t seed = 0);

struct LimitCheckReport {
  std::size_t i = 0;
  FBettiEstimate estimate;
  /// nilpotent check: verdict is exact-zero or decaying.
  /// minimal-prime check: verdict is not exact-zero or decaying.
  bool consistent = false;
  /// Minimal prime (variable bitmask) witnessing the hypothesis, if used.
  std::optional<std::uint32_t> prime;
};

/// Hypothesis im(φ_{i+1}) ⊆ N(R) G_i with N(R) the nilradical (monomial
/// defining ideal only). Throws NotMonomial / HypothesisFails.
LimitCheckReport nilpotent_limit_check(const FreeComplex& g, std::size_t i, unsigned e_max);

/// One-dimensional rings: hypothesis im(φ_{i+1}) ⊄ p G_i for a minimal
/// prime p (monomial defining ideal). The limit of λ/q should be positive;
/// at finite e only positive or inconclusive verdicts are consistent.
LimitCheckReport minimal_prime_limit_check(const FreeComplex& g, std::size_t i, unsigned e_max);

}  // namespace frobsyz
