#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frobsyz/module_presentation.hpp"

namespace frobsyz {

class Cache;

/// Items of an ideal expression: canonical polynomials, `m`, `m^k`, or the
/// name of an ideal declared earlier.
struct IdealDecl {
  std::string name;
  std::vector<std::string> items;

  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

enum class ModuleKind { Coker, Quotient, Residue, H0, Socle, Ideal };
std::string_view to_string(ModuleKind kind) noexcept;

struct ModuleDecl {
  std::string name;
  ModuleKind kind = ModuleKind::Residue;
  /// Coker: entries row-major (rows = generators) and generator twists.
  std::vector<std::vector<std::string>> matrix;
  std::vector<int> twists;
  /// Quotient and Ideal: an ideal expression.
  std::vector<std::string> items;

  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

/// `job NAME = op arg... key=value...`. For `verify` the first argument is
/// the check name. Polynomial option values are stored canonical, without
/// the surrounding parentheses.
struct JobDecl {
  std::string name;
  std::string op;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;

  friend bool operator==(const JobDecl&, const JobDecl&) = default;
};

struct SpecFile {
  std::uint32_t p = 0;
  std::vector<std::string> variables;
  TermOrder order = TermOrder::GRevLex;
  std::vector<IdealDecl> ideals;
  std::vector<ModuleDecl> modules;
  std::vector<JobDecl> jobs;

  const JobDecl* find_job(std::string_view name) const;
  const ModuleDecl* find_module(std::string_view name) const;
  const IdealDecl* find_ideal(std::string_view name) const;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws ParseError (line, column) on lexical and syntax errors, a
/// non-prime characteristic, inhomogeneous generators, unknown names and
/// malformed job arguments.
SpecFile parse_spec(std::string_view text);

/// Canonical form: p, vars, order, ideals, modules, jobs, one per line.
std::string print_spec(const SpecFile& spec);
std::string print_job(const JobDecl& job);

/// Parses `op arg... key=value...` against the spec's declarations, as if
/// it were the body of `job <name> = ...`.
JobDecl parse_job(const SpecFile& spec, const std::string& name, std::string_view body);

struct SpecInstance {
  RingPtr ambient;
  QuotientRingPtr ring;
  std::map<std::string, HomogeneousIdeal> ideals;
  std::map<std::string, ModulePresentation> modules;

  const HomogeneousIdeal& ideal(const std::string& name) const;
  const ModulePresentation& module(const std::string& name) const;
  /// Expands an ideal expression into generators of S.
  std::vector<Polynomial> expand(const std::vector<std::string>& items) const;
  Polynomial polynomial(const std::string& text) const;
};

/// Builds the ring, the ideals and every declared module. The defining
/// ideal's Gröbner basis goes through the cache when one is given.
SpecInstance instantiate(const SpecFile& spec, Cache* cache = nullptr);

}  // namespace frobsyz
