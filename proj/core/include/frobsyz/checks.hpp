#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobsyz/tor.hpp"

namespace frobsyz {

enum class HypothesisStatus { Satisfied, Failed, Vacuous };
enum class ConclusionStatus { Verified, Refuted, NotApplicable };
std::string_view to_string(HypothesisStatus s) noexcept;
std::string_view to_string(ConclusionStatus s) noexcept;

/// Dimension and (when finite) length of Syz_i M, plus how a check used it.
struct SyzygyRecord {
  int index = 0;
  int dimension = -1;  // -1 for the zero module
  std::optional<std::uint64_t> length;
  /// "asserted", "informational", "hypothesis", "vacuous".
  std::string role;
};

struct CheckResult {
  std::string name;
  std::string instance;
  HypothesisStatus hypothesis = HypothesisStatus::Failed;
  ConclusionStatus conclusion = ConclusionStatus::NotApplicable;
  std::vector<SyzygyRecord> syzygies;
  std::map<std::string, std::string> witnesses;
  /// Presentation of the offending syzygy when the conclusion is refuted;
  /// its dimension has been recomputed under the other term order.
  std::optional<GradedMatrix> refutation;
};

/// Krull dimension of M recomputed from scratch over the same ring with the
/// other term order (grevlex <-> graded lex).
int independent_dimension(const ModulePresentation& m);

struct ParameterChoice {
  std::vector<Polynomial> elements;
  std::vector<std::uint64_t> degrees;
  bool system_of_parameters = false;
  /// (0 : x_i) = H⁰_m(R) for each element.
  std::vector<bool> annihilator_is_h0;

  bool certified() const;
};

/// Flags for the given elements, each checked by Gröbner computations.
ParameterChoice certify_parameters(const QuotientRingPtr& ring, std::vector<Polynomial> elements);

/// d elements of degree n with dim R/(x_1..x_j) = d - j and (0 : x_j) = H⁰
/// for every j. Tries the n-th powers of the variables first, then seeded
/// random forms; SearchExhausted after `tries` random candidates at a stage.
ParameterChoice choose_parameters(const QuotientRingPtr& ring, unsigned n, unsigned tries = 64,
                                  std::uint64_t seed = 0);

/// Any homogeneous system of parameters (dimension drop only), same search.
std::vector<Polynomial> find_system_of_parameters(const QuotientRingPtr& ring, unsigned n = 1,
                                                  unsigned tries = 64, std::uint64_t seed = 0);

struct GoodColength {
  unsigned n = 0;
  std::uint64_t syzygy_length = 0;
  std::int64_t sigma = 0;
  std::int64_t sigma_next = 0;
  std::uint64_t tor_next = 0;  // λ Tor_{i+1}(M, R/m^n)
};

/// Smallest n <= n_cap with m^n ⊆ Ann M ∩ Ann Syz_{i+1}M,
/// Tor_{i+1}(M, R/m^n) = 0 and σ_i(M, R/m^n) = σ_i(M, R/m^(n+1)) =
/// λ(Syz_{i+1}M). HypothesisFails unless 0 < λ(Syz_{i+1}M) < ∞;
/// CapExceeded if no n <= n_cap works.
GoodColength find_good_colength_ideal(const ModulePresentation& m, std::size_t i,
                                      unsigned n_cap = 8);

/// Every clause in force: l > t (d = 1) or l >= t (d >= 2); Syz_i M of
/// positive dimension for i_lo <= i <= i_hi with i >= d + 2, indices
/// 1..d+1 recorded as informational.
CheckResult check_big_socle(const ModulePresentation& m, int i_lo = 1, int i_hi = 5);

/// d = 2: each nonzero Syz_1, Syz_2, Syz_3 has positive dimension.
CheckResult check_dim2_syzygies(const ModulePresentation& m);

enum class BadToGoodMode { SyzygyOfQuotient, SyzygyOfH0 };

/// Mode SyzygyOfQuotient tests λ(Syz_i R/J) < ∞ for the m-primary ideal J
/// (i >= 3); mode SyzygyOfH0 tests λ(Syz_{i-2} H⁰_m(R)) < ∞ (i >= 4).
/// When the hypothesis holds, verifies Syz_{i+1}M has positive dimension.
CheckResult check_bad_to_good(const ModulePresentation& m, BadToGoodMode mode, int i,
                              const std::vector<Polynomial>& j_gens = {});

/// d = 1 and (0 : x) = (0 : m): for even i in 2..i_max each nonzero
/// Syz_{i+1}M has positive dimension. Odd-side indices are informational.
CheckResult check_even_index(const ModulePresentation& m, const Polynomial& x, int i_max = 6);

/// Syz_5(R/I) has positive dimension for a certified parameter ideal I; for
/// d = 2 also (0 : x_i) = H⁰ and R/H⁰ Cohen–Macaulay (regular sequence
/// search).
CheckResult check_syz5_parameter(const QuotientRingPtr& ring, const std::vector<Polynomial>& params,
                                 std::uint64_t seed = 0);

/// If λ(Syz_{i+1}M) < ∞ (1 <= d <= 2, depth 0, i >= 2), verifies
/// λ(Syz_{i+1}M) = Σ_{j<=i-2} (-1)^(i-j-1) λTor_j(M, H⁰). Vacuous otherwise.
CheckResult check_divide_identity(const ModulePresentation& m, int i);

/// d = 2: if λ(Syz_{i+1}M) < ∞, verifies λ(Syz_{i+1}M) = σ_i(M, R/(x)) for
/// the last element x of a certified parameter choice in a high power of m.
/// Vacuous otherwise.
CheckResult check_dim2_sigma(const ModulePresentation& m, int i, std::uint64_t seed = 0);

}  // namespace frobsyz
