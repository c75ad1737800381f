#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobsyz/quotient_ring.hpp"

namespace frobsyz {

/// f is a nonzerodivisor on S/I, i.e. (I : f) = I.
bool is_nonzerodivisor(const HomogeneousIdeal& i, const Polynomial& f);

struct DepthCertificate {
  /// A regular sequence in m on S/I.
  std::vector<Polynomial> sequence;
  /// True when S/(I + sequence) was shown to have depth zero, so the depth
  /// equals the sequence length exactly.
  bool exact = false;
};

/// Greedy regular-sequence search on S/I: at each stage, if the current
/// quotient has depth zero ((J : m) ≠ J) stop exactly; otherwise try the
/// variables, then sums of variables, then seeded random forms of degree
/// 1..max_degree. Searches that run out of candidates return exact = false.
DepthCertificate certify_depth(const HomogeneousIdeal& i, std::uint64_t seed = 0,
                               unsigned max_degree = 3, unsigned random_tries = 40);

/// Cohen–Macaulay test from a certified depth; nullopt when undecided.
std::optional<bool> is_cohen_macaulay(const HomogeneousIdeal& i, std::uint64_t seed = 0);

}  // namespace frobsyz
