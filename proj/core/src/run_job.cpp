#include <chrono>

#include <openssl/evp.h>

#include "frobsyz/cache.hpp"
#include "frobsyz/checks.hpp"
#include "frobsyz/complex.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/frobenius.hpp"
#include "frobsyz/result_document.hpp"
#include "frobsyz/tor.hpp"

#ifndef FROBSYZ_VERSION
#define FROBSYZ_VERSION "0.0.0"
#endif

namespace frobsyz {

using nlohmann::json;

std::string_view engine_name() noexcept { return "frobsyz"; }
std::string_view engine_version() noexcept { return FROBSYZ_VERSION; }

std::string_view to_string(JobStatus s) noexcept {
  switch (s) {
    case JobStatus::Ok: return "ok";
    case JobStatus::HypothesisFails: return "hypothesis-fails";
    case JobStatus::EngineError: return "engine-error";
    case JobStatus::ParseError: return "parse-error";
  }
  return "engine-error";
}

int exit_code(JobStatus s) noexcept {
  switch (s) {
    case JobStatus::Ok: return 0;
    case JobStatus::HypothesisFails: return 2;
    case JobStatus::EngineError: return 3;
    case JobStatus::ParseError: return 4;
  }
  return 3;
}

std::uint64_t spec_seed(const SpecFile& spec) {
  const std::string text = print_spec(spec);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | md[i];
  return seed;
}

namespace {

template <class T>
std::string str(const T& v) {
  if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, BigInt>) {
    return frobsyz::to_string(v);
  } else {
    return std::to_string(v);
  }
}

json opt_str(const std::optional<std::uint64_t>& v) { return v ? json(str(*v)) : json(nullptr); }
json opt_str(const std::optional<int>& v) { return v ? json(str(*v)) : json(nullptr); }

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

json syzygy_rows(const std::vector<SyzygyRecord>& records) {
  json rows = json::array();
  for (const auto& s : records) {
    rows.push_back({{"index", str(s.index)},
                    {"dimension", str(s.dimension)},
                    {"length", opt_str(s.length)},
                    {"role", s.role}});
  }
  return rows;
}

json sample_rows(const FBettiEstimate& est) {
  json rows = json::array();
  for (const auto& s : est.samples) {
    rows.push_back({{"index", str(est.i)}, {"e", str(s.e)}, {"length", str(s.length)},
                    {"ratio", str(s.ratio)}});
  }
  return rows;
}

json identity_rows(const std::vector<IdentityRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json values = json::array();
    for (const auto v : r.values) values.push_back(str(v));
    out.push_back({{"identity", r.name}, {"j", str(r.j)}, {"values", values}, {"holds", r.holds}});
  }
  return out;
}

class Runner {
 public:
  Runner(const SpecFile& spec, const JobDecl& job, const RunOptions& options, json& body)
      : spec_(spec), job_(job), options_(options), body_(body) {}

  json run() {
    const std::uint64_t seed = options_.seed.value_or(spec_seed(spec_));
    seed_ = seed;
    body_["seed"] = str(seed);
    if (job_.op == "search") return search();
    instance_.emplace(instantiate(spec_, options_.cache));
    const auto& ring = instance_->ring;
    body_["ring"] = {{"p", str(ring->ambient()->field().characteristic())},
                     {"variables", ring->ambient()->variables()},
                     {"order", std::string(to_string(ring->ambient()->order()))},
                     {"ideal", strings(ring->ideal().basis())},
                     {"dimension", str(ring->dimension())},
                     {"depth_zero", ring->depth_zero()},
                     {"text", ring->to_string()}};
    const std::string& op = job_.op;
    if (op == "resolve") return resolve();
    if (op == "syzlen") return syzlen();
    if (op == "fbetti") return fbetti();
    if (op == "vanishing") return vanishing();
    if (op == "tor") return tor(false);
    if (op == "sigma") return tor(true);
    if (op == "socle") return socle_profile();
    if (op == "parameters") return parameters();
    if (op == "verify") return verify();
    throw Error(ErrorKind::InvalidArgument, "unknown operation '" + op + "'");
  }

 private:
  const ModulePresentation& module(std::size_t arg) const {
    return instance_->module(job_.args.at(arg));
  }

  unsigned integer(const std::string& key, unsigned fallback) const {
    const auto it = job_.options.find(key);
    return it == job_.options.end() ? fallback : static_cast<unsigned>(std::stoul(it->second));
  }

  std::pair<unsigned, unsigned> range(const std::string& key, unsigned lo, unsigned hi) const {
    const auto it = job_.options.find(key);
    if (it == job_.options.end()) return {lo, hi};
    const auto dots = it->second.find("..");
    const unsigned a = static_cast<unsigned>(std::stoul(it->second.substr(0, dots)));
    const unsigned b =
        dots == std::string::npos ? a : static_cast<unsigned>(std::stoul(it->second.substr(dots + 2)));
    return {a, b};
  }

  unsigned emax() const {
    return integer("emax", options_.emax.value_or(default_e_max(spec_.p)));
  }

  MinimalResolution resolution(const ModulePresentation& m, int steps) const {
    if (options_.cache) return options_.cache->resolution(m, steps);
    return minimal_free_resolution(m, steps);
  }

  json module_echo(std::size_t arg) const {
    return {{"name", job_.args.at(arg)}, {"presentation", module(arg).to_string()}};
  }

  json resolve() {
    const int steps = static_cast<int>(integer("steps", static_cast<unsigned>(
                                                            options_.steps.value_or(kDefaultResolveSteps))));
    const auto res = resolution(module(0), steps);
    json betti = json::array();
    json graded = json::array();
    for (std::size_t j = 0; j <= res.complex.length(); ++j) {
      const auto twists = res.complex.term(j).twists;
      betti.push_back(str(twists.size()));
      std::map<int, std::size_t> counts;
      for (const int t : twists) ++counts[t];
      for (const auto& [deg, n] : counts) {
        graded.push_back({{"index", str(j)}, {"degree", str(deg)}, {"count", str(n)}});
      }
    }
    json maps = json::array();
    for (std::size_t j = 1; j <= res.complex.length(); ++j) {
      maps.push_back({{"index", str(j)}, {"matrix", res.complex.map(j).to_string()}});
    }
    return {{"module", module_echo(0)},
            {"steps", str(steps)},
            {"terminated", res.terminated},
            {"projective_dimension", opt_str(res.projective_dimension())},
            {"betti", betti},
            {"graded_betti", graded},
            {"maps", maps}};
  }

  json syzlen() {
    const auto [lo, hi] = range("i", 1, 3);
    if (lo < 1) throw Error(ErrorKind::InvalidArgument, "syzygy indices start at 1");
    const auto res = resolution(module(0), static_cast<int>(hi) + 1);
    json rows = json::array();
    for (unsigned i = lo; i <= hi; ++i) {
      const auto syz = syzygy_module(res, static_cast<int>(i));
      rows.push_back({{"index", str(i)},
                      {"dimension", str(syz.dimension())},
                      {"length", opt_str(syz.length())},
                      {"finite_length", syz.has_finite_length()}});
    }
    return {{"module", module_echo(0)}, {"syzygies", rows}};
  }

  json fbetti() {
    const auto [lo, hi] = range("i", 0, 2);
    const unsigned e_max = emax();
    const auto& m = module(0);
    const auto res = resolution(m, static_cast<int>(hi) + 1);
    const auto lengths = frobenius_homology_lengths(res.complex, hi, e_max);
    const int d = m.ring()->dimension();
    json samples = json::array();
    json verdicts = json::array();
    for (unsigned i = lo; i <= hi; ++i) {
      const auto est = make_estimate(i, spec_.p, d, lengths[i]);
      for (auto& row : sample_rows(est)) samples.push_back(std::move(row));
      verdicts.push_back({{"index", str(i)}, {"verdict", std::string(to_string(est.verdict))}});
    }
    return {{"module", module_echo(0)}, {"p", str(spec_.p)}, {"d", str(d)}, {"emax", str(e_max)},
            {"samples", samples}, {"verdicts", verdicts}};
  }

  json vanishing() {
    const auto [lo, hi] = range("i", 1, 3);
    const auto rep = vanishing_report(module(0), lo, hi, emax(), seed_);
    json samples = json::array();
    json verdicts = json::array();
    for (const auto& est : rep.estimates) {
      for (auto& row : sample_rows(est)) samples.push_back(std::move(row));
      verdicts.push_back({{"index", str(est.i)}, {"verdict", std::string(to_string(est.verdict))}});
    }
    const auto flag = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return {{"module", module_echo(0)},
            {"d", str(rep.d)},
            {"depth_zero", rep.depth_zero},
            {"cohen_macaulay", flag(rep.cohen_macaulay)},
            {"finite_pd", rep.finite_pd},
            {"projective_dimension", opt_str(rep.projective_dimension)},
            {"emax", str(rep.e_max)},
            {"acyclicity_holds", flag(rep.acyclicity_holds)},
            {"windows_d_plus_one_positive", flag(rep.windows_d_plus_one_positive)},
            {"windows_d_positive", flag(rep.windows_d_positive)},
            {"conclusion", rep.conclusion},
            {"samples", samples},
            {"verdicts", verdicts}};
  }

  json tor(bool with_sigma) {
    const unsigned i = integer("i", with_sigma ? 1 : 3);
    const auto res = resolution(module(0), static_cast<int>(i) + 1);
    const auto table = tor_table(res, module(1), i);
    json rows = json::array();
    for (std::size_t j = 0; j < table.lengths.size(); ++j) {
      rows.push_back({{"j", str(j)}, {"length", str(table.lengths[j])}});
    }
    json out{{"module", module_echo(0)}, {"other", module_echo(1)}, {"i", str(i)}, {"tor", rows}};
    if (with_sigma) out["sigma"] = str(sigma(table, i));
    return out;
  }

  json socle_profile() {
    const auto prof = socle(instance_->ring);
    return {{"h0_length", opt_str(prof.h0.length())},
            {"socle_length", opt_str(prof.soc.length())},
            {"t", str(prof.t)},
            {"l", str(prof.l)},
            {"h0_is_vector_space", prof.h0_is_vector_space}};
  }

  json parameters() {
    const unsigned n = integer("n", 1);
    const auto choice = choose_parameters(instance_->ring, n, 64, seed_);
    json degrees = json::array();
    for (const auto deg : choice.degrees) degrees.push_back(str(deg));
    return {{"n", str(n)},
            {"elements", strings(choice.elements)},
            {"degrees", degrees},
            {"system_of_parameters", choice.system_of_parameters},
            {"annihilator_is_h0", choice.annihilator_is_h0},
            {"certified", choice.certified()}};
  }

  json search() {
    const auto it = job_.options.find("family");
    const std::string name = it == job_.options.end() ? "dim2" : it->second;
    FamilySpec family = name == "dim1" ? FamilySpec::builtin_dim1() : FamilySpec::builtin_dim2();
    family.max_instances = integer("max", static_cast<unsigned>(family.max_instances));
    SearchBounds bounds;
    bounds.i_max = static_cast<int>(integer("imax", static_cast<unsigned>(bounds.i_max)));
    const Catalog catalog = search_finite_syzygies(family, bounds);
    return {{"family", name},
            {"i_max", str(bounds.i_max)},
            {"rings", str(catalog.rings)},
            {"flagged_entries", str(catalog.flagged_entries())},
            {"catalog", to_json(catalog)}};
  }

  json verify() {
    const std::string& check = job_.args.at(0);
    json out = verify_check(check);
    out["check"] = check;
    return out;
  }

  json verify_check(const std::string& check) {
    const auto mod = [&] { return module(1); };
    if (check == "big-socle") {
      const auto [lo, hi] = range("i", 1, 5);
      return to_json(check_big_socle(mod(), static_cast<int>(lo), static_cast<int>(hi)));
    }
    if (check == "dim2") return to_json(check_dim2_syzygies(mod()));
    if (check == "bad-to-good") {
      const auto it = job_.options.find("mode");
      const bool h0 = it != job_.options.end() && it->second == "h0";
      const int i = static_cast<int>(integer("i", h0 ? 4 : 3));
      std::vector<Polynomial> gens;
      if (const auto j = job_.options.find("ideal"); j != job_.options.end()) {
        gens = instance_->ideal(j->second).generators();
      }
      return to_json(check_bad_to_good(
          mod(), h0 ? BadToGoodMode::SyzygyOfH0 : BadToGoodMode::SyzygyOfQuotient, i, gens));
    }
    if (check == "even-index") {
      const auto x = instance_->polynomial(job_.options.at("x"));
      return to_json(check_even_index(mod(), x, static_cast<int>(integer("i", 6))));
    }
    if (check == "syz5") {
      const auto& gens = instance_->ideal(job_.args.at(1)).generators();
      return to_json(check_syz5_parameter(instance_->ring, gens, seed_));
    }
    if (check == "lemma-add") {
      const auto y = instance_->polynomial(job_.options.at("y"));
      const auto rep = lemma_add_check(mod(), y, integer("j", 4));
      return {{"y", rep.y.to_string()},
              {"h0_length", str(rep.h0_length)},
              {"y_kills_m", rep.y_kills_m},
              {"rows", identity_rows(rep.rows)},
              {"holds", rep.holds}};
    }
    if (check == "divide") return to_json(check_divide_identity(mod(), static_cast<int>(integer("i", 2))));
    if (check == "colength") {
      const unsigned i = integer("i", 1);
      const auto g = find_good_colength_ideal(mod(), i, integer("ncap", 8));
      return {{"i", str(i)},
              {"n", str(g.n)},
              {"syzygy_length", str(g.syzygy_length)},
              {"sigma", str(g.sigma)},
              {"sigma_next", str(g.sigma_next)},
              {"tor_next", str(g.tor_next)}};
    }
    if (check == "dim2-sigma") {
      return to_json(check_dim2_sigma(mod(), static_cast<int>(integer("i", 2)), seed_));
    }
    if (check == "euler") {
      const unsigned last = integer("last", 3);
      const auto res = resolution(mod(), static_cast<int>(last));
      const auto e = euler_check(tensor(res.complex, module(2), last));
      return {{"last", str(last)}, {"lhs", str(e.lhs)}, {"rhs", str(e.rhs)}, {"equal", e.equal}};
    }
    if (check == "nilpotent" || check == "minimal-prime") {
      const unsigned i = integer("i", 1);
      const auto res = resolution(mod(), static_cast<int>(i) + 1);
      const auto rep = check == "nilpotent" ? nilpotent_limit_check(res.complex, i, emax())
                                            : minimal_prime_limit_check(res.complex, i, emax());
      json prime = nullptr;
      if (rep.prime) {
        prime = json::array();
        const auto& vars = instance_->ambient->variables();
        for (std::size_t v = 0; v < vars.size(); ++v) {
          if (*rep.prime & (1U << v)) prime.push_back(vars[v]);
        }
      }
      return {{"index", str(rep.i)},
              {"verdict", std::string(to_string(rep.estimate.verdict))},
              {"consistent", rep.consistent},
              {"prime", prime},
              {"samples", sample_rows(rep.estimate)}};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown check '" + check + "'");
  }

  const SpecFile& spec_;
  const JobDecl& job_;
  const RunOptions& options_;
  json& body_;
  std::optional<SpecInstance> instance_;
  std::uint64_t seed_ = 0;
};

JobStatus status_of(ErrorKind kind) {
  if (kind == ErrorKind::HypothesisFails) return JobStatus::HypothesisFails;
  if (kind == ErrorKind::Parse) return JobStatus::ParseError;
  return JobStatus::EngineError;
}

json engine_record() { return {{"name", engine_name()}, {"version", engine_version()}}; }

}  // namespace

json to_json(const CheckResult& r) {
  return {{"name", r.name},
          {"instance", r.instance},
          {"hypothesis", std::string(to_string(r.hypothesis))},
          {"conclusion", std::string(to_string(r.conclusion))},
          {"syzygies", syzygy_rows(r.syzygies)},
          {"witnesses", r.witnesses},
          {"refutation", r.refutation ? json(r.refutation->to_string()) : json(nullptr)}};
}

json to_json(const Catalog& catalog) {
  json out = json::array();
  for (const auto& e : catalog.entries) {
    json flagged = json::array();
    for (const int i : e.flagged) flagged.push_back(str(i));
    out.push_back({{"ring", e.ring},
                   {"module", e.module},
                   {"d", str(e.d)},
                   {"depth_zero", e.depth_zero},
                   {"projective_dimension", opt_str(e.projective_dimension)},
                   {"syzygies", syzygy_rows(e.syzygies)},
                   {"flagged", flagged},
                   {"error", e.error ? json(*e.error) : json(nullptr)}});
  }
  return out;
}

ResultDocument run_job(const SpecFile& spec, const JobDecl& job, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ResultDocument doc;
  json& body = doc.body;
  body["engine"] = engine_record();
  body["job"] = {{"name", job.name}, {"op", job.op}, {"args", job.args}, {"options", job.options},
                 {"statement", print_job(job)}};
  try {
    Runner runner(spec, job, options, body);
    body["result"] = runner.run();
  } catch (const Error& e) {
    doc.status = status_of(e.kind());
    body["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    doc.status = JobStatus::EngineError;
    body["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
  }
  body["status"] = std::string(to_string(doc.status));
  if (options.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    body["timing"] = {{"milliseconds", str(static_cast<long long>(ms))}};
  }
  return doc;
}

ResultDocument run_job(const SpecFile& spec, const std::string& name, const RunOptions& options) {
  const JobDecl* job = spec.find_job(name);
  if (!job) {
    ResultDocument doc;
    doc.status = JobStatus::EngineError;
    doc.body = {{"engine", engine_record()},
                {"job", {{"name", name}}},
                {"error", {{"kind", "InvalidArgument"}, {"message", "no job named '" + name + "'"}}},
                {"status", std::string(to_string(doc.status))}};
    return doc;
  }
  return run_job(spec, *job, options);
}

ResultDocument parse_error_document(const ParseError& e) {
  ResultDocument doc;
  doc.status = JobStatus::ParseError;
  doc.body = {{"engine", engine_record()},
              {"error",
               {{"kind", std::string(to_string(e.kind()))},
                {"message", e.detail()},
                {"line", str(e.line())},
                {"column", str(e.column())}}},
              {"status", std::string(to_string(doc.status))}};
  return doc;
}

}  // namespace frobsyz
