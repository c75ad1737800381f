#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobsyz/errors.hpp"
#include "frobsyz/spec_file.hpp"
#include "frobsyz/syzygy_search.hpp"

namespace frobsyz {

std::string_view engine_name() noexcept;
std::string_view engine_version() noexcept;

enum class JobStatus { Ok, HypothesisFails, EngineError, ParseError };
std::string_view to_string(JobStatus s) noexcept;
/// 0, 2, 3, 4.
int exit_code(JobStatus s) noexcept;

/// One job's output. Integers and rationals are decimal strings; flags are
/// JSON booleans; object keys are sorted by construction.
struct ResultDocument {
  JobStatus status = JobStatus::Ok;
  nlohmann::json body = nlohmann::json::object();
};

struct RunOptions {
  /// Default resolution length when a job does not say.
  std::optional<int> steps;
  /// Default e_max for Frobenius jobs; otherwise default_e_max(p).
  std::optional<unsigned> emax;
  /// Seed for randomized searches; otherwise derived from the spec hash.
  std::optional<std::uint64_t> seed;
  bool timing = false;
  Cache* cache = nullptr;
};

inline constexpr int kDefaultResolveSteps = 6;

/// First 8 bytes (big-endian) of the SHA-256 of the canonical spec text.
std::uint64_t spec_seed(const SpecFile& spec);

/// Runs one job. Engine errors become structured records in the document;
/// only programming errors escape as exceptions.
ResultDocument run_job(const SpecFile& spec, const JobDecl& job, const RunOptions& options = {});
ResultDocument run_job(const SpecFile& spec, const std::string& name, const RunOptions& options = {});

/// Document for a spec that failed to parse.
ResultDocument parse_error_document(const ParseError& e);

nlohmann::json to_json(const Catalog& catalog);
nlohmann::json to_json(const CheckResult& result);

enum class Format { Json, Csv, Text };
std::optional<Format> parse_format(std::string_view name);

/// Canonical bytes: JSON is pretty-printed with sorted keys, CSV has one
/// section per table, text is an indented listing.
std::string emit(const ResultDocument& doc, Format format);
std::string emit(const std::vector<ResultDocument>& docs, Format format);
std::string emit_json(const nlohmann::json& value);

}  // namespace frobsyz
