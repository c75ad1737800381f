#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobsyz/checks.hpp"

namespace frobsyz {

enum class SearchModuleKind { ResidueField, MaximalPower, Parameter };

struct SearchModule {
  SearchModuleKind kind = SearchModuleKind::ResidueField;
  unsigned k = 1;  // exponent for MaximalPower

  std::string to_string() const;
};

/// Monomial quotients F_p[x_1..x_n]/I with I generated by an antichain of
/// monomials of degree min_degree..max_degree, up to permutation of the
/// variables, enumerated by number of generators and then lexicographically.
struct FamilySpec {
  std::uint32_t p = 2;
  unsigned num_variables = 2;
  unsigned min_degree = 2;
  unsigned max_degree = 3;
  unsigned max_generators = 3;
  std::optional<int> dimension;
  bool depth_zero_only = true;
  std::size_t max_instances = 24;
  std::vector<SearchModule> modules;

  /// 3 variables, degrees 2..3, <= 4 generators, d = 2, depth 0, 24 rings;
  /// modules k and R/m^2.
  static FamilySpec builtin_dim2();
  /// 2 variables, degree 2, <= 2 generators, d = 1, depth 0; modules k,
  /// R/m^2 and R/(parameter).
  static FamilySpec builtin_dim1();
};

struct SearchBounds {
  int i_max = 4;
};

struct CatalogEntry {
  std::string ring;
  std::string module;
  int d = 0;
  bool depth_zero = false;
  std::optional<int> projective_dimension;
  std::vector<SyzygyRecord> syzygies;
  /// Indices i >= d + 1 with Syz_i of finite nonzero length while the
  /// resolution has not terminated.
  std::vector<int> flagged;
  std::optional<std::string> error;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::size_t rings = 0;

  std::size_t flagged_entries() const;
};

/// The family's defining ideals, deterministic order.
std::vector<HomogeneousIdeal> enumerate_family(const FamilySpec& family);

Catalog search_finite_syzygies(const FamilySpec& family, const SearchBounds& bounds);

}  // namespace frobsyz
