#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "frobsyz/resolution.hpp"

namespace frobsyz {

struct CacheStats {
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t stores = 0;
  std::size_t discarded = 0;
};

/// On-disk store of resolutions and defining-ideal Gröbner bases, one JSON
/// file per entry named by the SHA-256 of the canonical key text. Entries
/// are re-verified on every load; anything that fails is reported on the
/// warning stream, deleted and recomputed. Writes go to a temporary file
/// that is renamed into place.
class Cache {
 public:
  explicit Cache(std::filesystem::path directory, std::ostream* warnings = nullptr);

  static constexpr const char* kEnvironmentVariable = "FROBSYZ_CACHE_DIR";
  /// The directory named by FROBSYZ_CACHE_DIR, if set and non-empty.
  static std::optional<std::filesystem::path> directory_from_environment();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  const CacheStats& stats() const noexcept { return stats_; }

  /// The ideal (generators) of S. A stored basis is adopted only after its
  /// certificate checks (reducedness, Buchberger criterion, membership both
  /// ways via stored cofactors).
  HomogeneousIdeal ideal(const RingPtr& ring, std::vector<Polynomial> generators);

  /// minimal_free_resolution(m, steps). A stored complex is adopted only if
  /// it rebuilds as a complex (consecutive maps compose to zero), every map
  /// is minimal, the first map is the minimal presentation of m, and the
  /// termination flag matches the ranks.
  MinimalResolution resolution(const ModulePresentation& m, int steps);

  /// Hex SHA-256 of the text.
  static std::string digest(std::string_view text);
  static std::string ideal_key(const RingPtr& ring, const std::vector<Polynomial>& generators);
  static std::string resolution_key(const ModulePresentation& m, int steps);
  std::filesystem::path entry_path(const std::string& key_text) const;

 private:
  std::optional<std::string> read(const std::string& key_text);
  void write(const std::string& key_text, const std::string& body);
  void discard(const std::string& key_text, const std::string& reason);

  std::filesystem::path dir_;
  std::ostream* warnings_;
  CacheStats stats_;
  std::size_t temp_counter_ = 0;
};

}  // namespace frobsyz
