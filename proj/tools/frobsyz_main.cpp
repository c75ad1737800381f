#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "frobsyz/cache.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/result_document.hpp"

namespace {

using namespace frobsyz;

struct Globals {
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::optional<int> steps;
  std::optional<unsigned> emax;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

class Driver {
 public:
  explicit Driver(const Globals& g) : g_(g) {
    format_ = *parse_format(g.format);
    if (!g.no_cache) {
      if (!g.cache_dir.empty()) {
        cache_ = std::make_unique<Cache>(g.cache_dir);
      } else if (const auto dir = Cache::directory_from_environment()) {
        cache_ = std::make_unique<Cache>(*dir);
      }
    }
    options_.steps = g.steps;
    options_.emax = g.emax;
    options_.seed = g.seed;
    options_.timing = g.timing;
    options_.cache = cache_.get();
  }

  int check(const std::string& path) {
    SpecFile spec;
    if (!load(path, spec)) return 4;
    if (format_ == Format::Text) {
      std::cout << print_spec(spec);
      return 0;
    }
    ResultDocument doc;
    nlohmann::json jobs = nlohmann::json::array();
    for (const auto& j : spec.jobs) jobs.push_back(j.name);
    doc.body = {{"engine", {{"name", engine_name()}, {"version", engine_version()}}},
                {"status", "ok"},
                {"canonical", print_spec(spec)},
                {"jobs", jobs}};
    std::cout << emit(doc, format_);
    return 0;
  }

  int run(const std::string& path, const std::vector<std::string>& names) {
    SpecFile spec;
    if (!load(path, spec)) return 4;
    std::vector<ResultDocument> docs;
    if (names.empty()) {
      for (const auto& j : spec.jobs) docs.push_back(run_job(spec, j, options_));
    } else {
      for (const auto& n : names) docs.push_back(run_job(spec, n, options_));
    }
    std::cout << emit(docs, format_);
    int code = 0;
    for (const auto& d : docs) code = std::max(code, exit_code(d.status));
    return code;
  }

  /// A verb with its arguments, run as the job `<verb> = <body>`.
  int adhoc(const std::string& verb, const std::string& path, const std::string& body) {
    SpecFile spec;
    if (!path.empty() && !load(path, spec)) return 4;
    JobDecl job;
    try {
      job = parse_job(spec, verb, body);
    } catch (const ParseError& e) {
      return report(e);
    }
    const ResultDocument doc = run_job(spec, job, options_);
    std::cout << emit(doc, format_);
    return exit_code(doc.status);
  }

 private:
  bool load(const std::string& path, SpecFile& spec) {
    try {
      spec = parse_spec(read_file(path));
      return true;
    } catch (const ParseError& e) {
      report(e);
    } catch (const Error& e) {
      std::cerr << "frobsyz: " << e.what() << "\n";
    }
    return false;
  }

  int report(const ParseError& e) {
    std::cerr << "frobsyz: parse error at " << e.what() << "\n";
    std::cout << emit(parse_error_document(e), format_);
    return 4;
  }

  const Globals& g_;
  Format format_ = Format::Json;
  std::unique_ptr<Cache> cache_;
  RunOptions options_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius Betti numbers, syzygy lengths and Tor sums over graded quotient rings"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (default: $FROBSYZ_CACHE_DIR)");
  app.add_flag("--no-cache", g.no_cache, "Ignore any configured cache");
  app.add_option("--steps", g.steps, "Default resolution length")->check(CLI::Range(0, 64));
  app.add_option("--emax", g.emax, "Default largest Frobenius exponent")->check(CLI::Range(0, 16));
  app.add_option("--seed", g.seed, "Seed for randomized searches (default: spec hash)");
  app.add_flag("--timing", g.timing, "Include wall-clock timing in documents");

  std::string spec_path;
  std::vector<std::string> rest;
  std::string check_name;
  int code = 0;

  auto* check = app.add_subcommand("check", "Parse a spec file and print its canonical form");
  check->add_option("spec", spec_path, "Spec file")->required();
  check->callback([&] { code = Driver(g).check(spec_path); });

  auto* run = app.add_subcommand("run", "Run the jobs of a spec file");
  run->add_option("spec", spec_path, "Spec file")->required();
  run->add_option("jobs", rest, "Job names (default: all)");
  run->callback([&] { code = Driver(g).run(spec_path, rest); });

  for (const char* verb : {"resolve", "syzlen", "fbetti", "tor", "sigma"}) {
    auto* sub = app.add_subcommand(verb, std::string("Run a one-off ") + verb + " job");
    sub->add_option("spec", spec_path, "Spec file")->required();
    sub->add_option("args", rest, "Modules and key=value options");
    sub->callback([&, verb] { code = Driver(g).adhoc(verb, spec_path, std::string(verb) + " " + join(rest)); });
  }

  auto* verify = app.add_subcommand("verify", "Run a verification check");
  verify->add_option("check", check_name, "Check name")->required();
  verify->add_option("spec", spec_path, "Spec file")->required();
  verify->add_option("args", rest, "Modules and key=value options");
  verify->callback([&] {
    code = Driver(g).adhoc("verify", spec_path, "verify " + check_name + " " + join(rest));
  });

  auto* search = app.add_subcommand("search", "Search a built-in monomial family for finite syzygies");
  search->add_option("args", rest, "family=dim1|dim2 imax=N max=N");
  search->callback([&] { code = Driver(g).adhoc("search", "", "search " + join(rest)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }
  return code;
}
