#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "fixtures.hpp"
#include "frobsyz/cache.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/frobenius.hpp"
#include "frobsyz/rational.hpp"
#include "frobsyz/result_document.hpp"
#include "generators.hpp"

namespace frobsyz {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* kE1 =
    "p = 2\nvars = x, y\nideal I = x^2, x*y\nmodule M = quotient y\nmodule K = residue\n"
    "job syz = syzlen M i=2\njob frob = fbetti M i=0..2 emax=3\njob guard = verify dim2 M\n";

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(FROBSYZ_CORPUS_DIR)) {
    if (e.path().extension() == ".frob") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseError(0, 0, "");
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("frobsyz_test_" + name);
  fs::remove_all(dir);
  return dir;
}

// ------------------------------------------------------------ parsing

TEST(SpecParse, TranscribesTheE1Example) {
  const auto spec = parse_spec("p=2; vars=x,y; ideal I = x^2, x*y; module M = quotient y");
  EXPECT_EQ(spec.p, 2u);
  EXPECT_EQ(spec.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(spec.ideals.size(), 1u);
  EXPECT_EQ(spec.ideals[0].items, (std::vector<std::string>{"x^2", "x*y"}));
  ASSERT_EQ(spec.modules.size(), 1u);
  EXPECT_EQ(spec.modules[0].kind, ModuleKind::Quotient);

  const auto inst = instantiate(spec);
  EXPECT_EQ(*inst.ring, *testing::e1_ring());
  const auto& m = inst.module("M");
  EXPECT_EQ(m.length(), std::optional<std::uint64_t>(2));
  EXPECT_EQ(m.groebner(), testing::cyclic(inst.ring, {"y"}).groebner());
}

TEST(SpecParse, RejectsNonPrimeCharacteristic) {
  const auto e = parse_failure("p=4; vars=x");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 3u);
  EXPECT_NE(e.detail().find("not prime"), std::string::npos);
}

TEST(SpecParse, FlagsTheInhomogeneousTerm) {
  const auto e = parse_failure("p=2; vars=x,y; ideal I = x^2 + y");
  EXPECT_NE(e.detail().find("non-homogeneous"), std::string::npos);
  EXPECT_NE(e.detail().find("term 'y'"), std::string::npos);
  EXPECT_EQ(e.column(), 26u);
}

TEST(SpecParse, PositionsPointIntoLaterLines) {
  const auto e = parse_failure("p = 2\nvars = x, y\n\n  ideal I = x^2, x*y^^2\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_GT(e.column(), 14u);
}

TEST(SpecParse, Diagnostics) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"p = 2; vars = x; ideal I = [x", "unclosed"},
      {"p = 2; vars = x; ideal I = x)", "unbalanced"},
      {"p = 2; vars = x; ring R = x", "unknown statement"},
      {"p = 2; vars = x; frob", "expected '='"},
      {"ideal I = x^2", "before polynomials"},
      {"p = 2; vars = x, x", "duplicate variable"},
      {"vars = x, y\njob s = socle", "missing 'p"},
      {"p = 3", "missing 'vars"},
      {"p = 2; vars = m", "reserved"},
      {"p = 2; vars = x; ideal m = x", "reserved"},
      {"p = 2; vars = x; ideal I = J", "unknown ideal"},
      {"p = 2; vars = x; module M = free x", "unknown module kind"},
      {"p = 2; vars = x; module M = residue x", "no arguments"},
      {"p = 2; vars = x,y; module M = coker [[x, y], [x]]", "ragged"},
      {"p = 2; vars = x,y; module M = coker [[x], [y^2]]", "inconsistent"},
      {"p = 2; vars = x,y; module M = coker [[x], [y]] twists 0", "one twist per"},
      {"p = 2; vars = x; job j = syzlen N", "unknown module"},
      {"p = 2; vars = x; module M = residue; job j = syzlen M frob=1", "unknown option"},
      {"p = 2; vars = x; module M = residue; job j = syzlen M i=3..1", "a <= b"},
      {"p = 2; vars = x; module M = residue; job j = syzlen M i=1 i=2", "duplicate option"},
      {"p = 2; vars = x; module M = residue; job j = verify frob M", "unknown check"},
      {"p = 2; vars = x; module M = residue; job j = verify lemma-add M", "requires option 'y'"},
      {"p = 2; vars = x; module M = residue; job j = tor M", "expects 2"},
      {"p = 2; vars = x; module M = residue; job j = resolve M; job j = socle", "duplicate job"},
      {"p = 2; vars = x; job j = search family=dim3", "invalid value"},
      {"p = 2; vars = x; order = lex; ideal I = x; order = grevlex", "before any polynomial"},
  };
  for (const auto& [text, needle] : cases) {
    const auto e = parse_failure(text);
    EXPECT_NE(e.detail().find(needle), std::string::npos) << text << " -> " << e.detail();
  }
}

TEST(SpecParse, CokerCarriesTwistsIntoThePresentation) {
  const auto spec = parse_spec(
      "p = 3; vars = a, b; module N = coker [[a, b^2], [0, a]] twists 0, 1\n");
  const auto inst = instantiate(spec);
  const auto& n = inst.module("N");
  EXPECT_EQ(n.generator_twists(), (std::vector<int>{0, 1}));
  EXPECT_EQ(n.matrix().source().twists, (std::vector<int>{1, 2}));
  EXPECT_FALSE(inst.ring->dimension() != 2);
}

TEST(SpecParse, MissingDefiningIdealMeansThePolynomialRing) {
  const auto inst = instantiate(parse_spec("p = 5; vars = x, y, z"));
  EXPECT_TRUE(inst.ring->ideal().is_zero());
  EXPECT_EQ(inst.ring->dimension(), 3);
}

TEST(SpecParse, IdealItemsExpand) {
  const auto inst =
      instantiate(parse_spec("p = 2; vars = x, y; ideal I = m^3; ideal J = I, m, x^2\n"));
  EXPECT_EQ(inst.ideal("J").generators().size(), 4u + 2u + 1u);
  EXPECT_EQ(inst.ideal("I"), HomogeneousIdeal::maximal_power(inst.ambient, 3));
}

// Hand-rolled generator of canonical specs, built from the printer's
// vocabulary so that print then parse must reproduce the value.
SpecFile random_spec(testing::Rng& rng) {
  const std::vector<std::uint32_t> primes{2, 3, 5, 7};
  const std::vector<std::string> names{"x", "y", "z", "w", "u1"};
  std::uniform_int_distribution<std::size_t> pick_p(0, primes.size() - 1);
  std::uniform_int_distribution<unsigned> small(0, 3);
  SpecFile spec;
  spec.p = primes[pick_p(rng)];
  const unsigned n = 1 + small(rng) % 3;
  spec.variables.assign(names.begin(), names.begin() + n);
  spec.order = small(rng) % 2 ? TermOrder::Lex : TermOrder::GRevLex;
  const RingPtr s = PolyRing::make(spec.p, spec.variables, spec.order);

  const auto poly_item = [&](unsigned degree) {
    Polynomial f(s);
    while (f.is_zero()) f = testing::random_homogeneous(s, rng, degree);
    return f.to_string();
  };
  IdealDecl i{"I", {}};
  for (unsigned k = small(rng); k > 0; --k) i.items.push_back(poly_item(2 + small(rng) % 2));
  if (small(rng) == 0) i.items.push_back("m^" + std::to_string(3 + small(rng)));
  if (!i.items.empty()) spec.ideals.push_back(i);
  IdealDecl j{"J", {"m"}};
  if (!i.items.empty()) j.items.push_back("I");
  j.items.push_back(poly_item(1));
  spec.ideals.push_back(j);

  const std::vector<ModuleKind> kinds{ModuleKind::Coker, ModuleKind::Quotient, ModuleKind::Residue,
                                      ModuleKind::H0, ModuleKind::Socle, ModuleKind::Ideal};
  const unsigned modules = 1 + small(rng);
  for (unsigned k = 0; k < modules; ++k) {
    ModuleDecl m;
    m.name = "M" + std::to_string(k);
    m.kind = kinds[(small(rng) + small(rng)) % kinds.size()];
    if (m.kind == ModuleKind::Coker) {
      const unsigned rows = 1 + small(rng) % 2;
      const unsigned cols = 1 + small(rng) % 3;
      for (unsigned r = 0; r < rows; ++r) m.twists.push_back(static_cast<int>(small(rng) % 2));
      for (unsigned r = 0; r < rows; ++r) m.matrix.emplace_back();
      for (unsigned c = 0; c < cols; ++c) {
        const int degree = 2 + static_cast<int>(small(rng) % 2);
        for (unsigned r = 0; r < rows; ++r) {
          const int d = degree - m.twists[r];
          m.matrix[r].push_back(testing::random_homogeneous(s, rng, static_cast<unsigned>(d)).to_string());
        }
      }
    } else if (m.kind == ModuleKind::Quotient || m.kind == ModuleKind::Ideal) {
      m.items = {small(rng) % 2 ? "J" : "m^2", poly_item(1 + small(rng) % 2)};
    }
    spec.modules.push_back(m);
  }

  const auto module_name = [&] { return "M" + std::to_string(small(rng) % modules); };
  const unsigned jobs = small(rng) + 1;
  for (unsigned k = 0; k < jobs; ++k) {
    JobDecl job;
    job.name = "job" + std::to_string(k);
    switch (small(rng) + 4 * (small(rng) % 2)) {
      case 0: job.op = "syzlen"; job.args = {module_name()}; job.options["i"] = "1..3"; break;
      case 1: job.op = "fbetti"; job.args = {module_name()}; job.options["emax"] = "2"; break;
      case 2: job.op = "tor"; job.args = {module_name(), module_name()}; job.options["i"] = "2"; break;
      case 3: job.op = "verify"; job.args = {"lemma-add", module_name()}; job.options["y"] = poly_item(1); break;
      case 4: job.op = "verify"; job.args = {"syz5", "J"}; break;
      case 5: job.op = "search"; job.options = {{"family", "dim1"}, {"imax", "3"}}; break;
      case 6: job.op = "verify"; job.args = {"bad-to-good", module_name()};
              job.options = {{"mode", "h0"}, {"ideal", "J"}, {"i", "4"}}; break;
      default: job.op = "socle"; break;
    }
    spec.jobs.push_back(job);
  }
  return spec;
}

TEST(SpecParse, ParseInvertsPrintOnGeneratedSpecs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    testing::Rng rng(seed);
    const SpecFile spec = random_spec(rng);
    const std::string text = print_spec(spec);
    SpecFile back;
    ASSERT_NO_THROW(back = parse_spec(text)) << text;
    EXPECT_EQ(back, spec) << text;
    EXPECT_EQ(print_spec(back), text);
  }
}

TEST(SpecParse, PrintIsIdempotentOnLooseInput) {
  const std::vector<std::string> inputs = {
      "p=3;vars=a,b # two variables\nideal I = b*a+a^2 ,  2*b^2 - b^2\n"
      "module M=quotient  m^2 , a\njob j=syzlen   M   i=2..2",
      "p = 2\n\n# comment line\nvars = x,y;;  ideal I = (x+y)^2 ; module N = coker [ x , y ]\n"
      "job t = tor N N i=1 ; job s = verify lemma-add N j=2 y=( x + y )",
      "p = 5; vars = s, t; order = lex; module K = residue\n"
      "module C = coker [[s, t],\n                 [t, -s]]\njob r = resolve C",
  };
  for (const auto& in : inputs) {
    const std::string once = print_spec(parse_spec(in));
    EXPECT_EQ(print_spec(parse_spec(once)), once) << in;
  }
  const auto spec = parse_spec(inputs[0]);
  EXPECT_EQ(spec.ideals[0].items, (std::vector<std::string>{"a^2 + a*b", "b^2"}));
  EXPECT_EQ(spec.jobs[0].options.at("i"), "2");
}

// ------------------------------------------------------------ documents

TEST(RunJob, SyzlenOnE1GivesTheFiniteSecondSyzygy) {
  const auto doc = run_job(parse_spec(kE1), "syz");
  ASSERT_EQ(doc.status, JobStatus::Ok) << emit(doc, Format::Json);
  const auto& row = doc.body["result"]["syzygies"][0];
  EXPECT_EQ(row["index"], "2");
  EXPECT_EQ(row["dimension"], "0");
  EXPECT_EQ(row["length"], "1");
}

TEST(RunJob, GuardFailureIsStructuredWithExitCodeTwo) {
  const auto doc = run_job(parse_spec(kE1), "guard");
  EXPECT_EQ(doc.status, JobStatus::HypothesisFails);
  EXPECT_EQ(exit_code(doc.status), 2);
  EXPECT_EQ(doc.body["error"]["kind"], "HypothesisFails");
  EXPECT_EQ(doc.body["status"], "hypothesis-fails");
  EXPECT_FALSE(doc.body.contains("result"));
}

TEST(RunJob, EngineErrorsAndParseErrorsGetTheirExitCodes) {
  const auto spec = parse_spec(kE1);
  EXPECT_EQ(exit_code(run_job(spec, "missing").status), 3);
  const auto bad = run_job(parse_spec("p = 2; vars = x; ideal I = x^0"), parse_job(SpecFile{}, "s", "socle"));
  EXPECT_EQ(exit_code(bad.status), 3);
  const auto doc = parse_error_document(parse_failure("p=4"));
  EXPECT_EQ(exit_code(doc.status), 4);
  EXPECT_EQ(doc.body["error"]["line"], "1");
}

TEST(RunJob, FrobeniusTableMatchesDirectEstimates) {
  const auto doc = run_job(parse_spec(kE1), "frob");
  ASSERT_EQ(doc.status, JobStatus::Ok);
  const auto m = testing::cyclic(testing::e1_ring(), {"y"});
  std::size_t row = 0;
  for (std::size_t i = 0; i <= 2; ++i) {
    const auto est = fbetti_estimate(m, i, 3);
    EXPECT_EQ(doc.body["result"]["verdicts"][i]["verdict"], std::string(to_string(est.verdict)));
    for (const auto& s : est.samples) {
      const auto& r = doc.body["result"]["samples"][row++];
      EXPECT_EQ(r["e"], std::to_string(s.e));
      EXPECT_EQ(std::stoull(r["length"].get<std::string>()), s.length);
      // ratio = length / 2^e exactly (d = 1), and it parses back.
      EXPECT_EQ(parse_rational(r["ratio"]), Rational(s.length, BigInt(1) << s.e));
    }
  }
  EXPECT_EQ(row, doc.body["result"]["samples"].size());
}

TEST(RunJob, SeedComesFromTheSpecUnlessGiven) {
  const auto spec = parse_spec(kE1);
  const auto a = run_job(spec, "syz");
  EXPECT_EQ(a.body["seed"], std::to_string(spec_seed(spec)));
  RunOptions opts;
  opts.seed = 17;
  EXPECT_EQ(run_job(spec, "syz", opts).body["seed"], "17");
  const auto other = parse_spec(std::string(kE1) + "job extra = socle\n");
  EXPECT_NE(spec_seed(other), spec_seed(spec));
}

TEST(RunJob, TimingOnlyWhenRequested) {
  const auto spec = parse_spec(kE1);
  EXPECT_FALSE(run_job(spec, "syz").body.contains("timing"));
  RunOptions opts;
  opts.timing = true;
  EXPECT_TRUE(run_job(spec, "syz", opts).body.contains("timing"));
}

TEST(RunJob, NoFloatingPointAnywhere) {
  for (const auto& path : corpus()) {
    const auto spec = parse_spec(read(path));
    for (const auto& job : spec.jobs) {
      const auto doc = run_job(spec, job);
      std::vector<const json*> stack{&doc.body};
      while (!stack.empty()) {
        const json* v = stack.back();
        stack.pop_back();
        EXPECT_FALSE(v->is_number()) << path << " " << job.name;
        if (v->is_structured()) {
          for (const auto& x : *v) stack.push_back(&x);
        }
      }
    }
  }
}

TEST(Emit, SameDocumentTwiceIsByteIdentical) {
  const auto spec = parse_spec(kE1);
  for (const auto f : {Format::Json, Format::Csv, Format::Text}) {
    EXPECT_EQ(emit(run_job(spec, "frob"), f), emit(run_job(spec, "frob"), f));
  }
}

TEST(Emit, EmptyCatalogIsAnEmptyArray) {
  EXPECT_EQ(emit_json(to_json(Catalog{})), "[]\n");
  EXPECT_TRUE(json::parse(emit_json(to_json(Catalog{}))).is_array());
}

TEST(Emit, RationalsUseLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 1)), "6");
  EXPECT_EQ(to_string(Rational(14, 8)), "7/4");
  ResultDocument doc;
  doc.body["ratios"] = json::array({to_string(Rational(6, 1)), to_string(Rational(14, 8))});
  EXPECT_NE(emit(doc, Format::Json).find("\"7/4\""), std::string::npos);
  EXPECT_EQ(parse_rational("7/4"), Rational(14, 8));
}

TEST(Emit, CsvHasOneSectionPerTable) {
  const auto out = emit(run_job(parse_spec(kE1), "frob"), Format::Csv);
  EXPECT_EQ(out.rfind("# fields\npath,value\n", 0), 0u);
  EXPECT_NE(out.find("\n# result.samples\ne,index,length,ratio\n"), std::string::npos);
  EXPECT_NE(out.find("\n# result.verdicts\nindex,verdict\n"), std::string::npos);
  EXPECT_NE(out.find("ring.text,\"F_2[x,y]/(x^2, x*y)\""), std::string::npos);
}

TEST(Emit, TextListsTheFields) {
  const auto out = emit(run_job(parse_spec(kE1), "syz"), Format::Text);
  EXPECT_NE(out.find("status: ok\n"), std::string::npos);
  EXPECT_NE(out.find("- dimension=0  finite_length=true  index=2  length=1"), std::string::npos);
}

// ------------------------------------------------------------ cache

TEST(Cache, SecondRunHitsAndMatches) {
  const auto dir = fresh_dir("hit");
  const auto spec = parse_spec(kE1);
  std::ostringstream warnings;
  Cache cache(dir, &warnings);
  RunOptions opts;
  opts.cache = &cache;
  const auto first = emit(run_job(spec, "syz", opts), Format::Json);
  EXPECT_EQ(cache.stats().hits, 0u);
  EXPECT_EQ(cache.stats().stores, 2u);  // the ideal and the resolution
  const auto second = emit(run_job(spec, "syz", opts), Format::Json);
  EXPECT_EQ(cache.stats().hits, 2u);
  EXPECT_EQ(first, second);
  EXPECT_EQ(first, emit(run_job(spec, "syz"), Format::Json));
  EXPECT_TRUE(warnings.str().empty());
}

TEST(Cache, TransparentOverTheCorpus) {
  const auto dir = fresh_dir("corpus");
  std::ostringstream warnings;
  Cache cache(dir, &warnings);
  RunOptions opts;
  opts.cache = &cache;
  std::size_t jobs = 0;
  for (const auto& path : corpus()) {
    const auto spec = parse_spec(read(path));
    for (const auto& job : spec.jobs) {
      const auto plain = emit(run_job(spec, job), Format::Json);
      EXPECT_EQ(emit(run_job(spec, job, opts), Format::Json), plain) << path << " " << job.name;
      EXPECT_EQ(emit(run_job(spec, job, opts), Format::Json), plain) << path << " " << job.name;
      ++jobs;
    }
  }
  EXPECT_GE(jobs, 20u);
  EXPECT_GT(cache.stats().hits, 0u);
  EXPECT_EQ(cache.stats().discarded, 0u);
  EXPECT_TRUE(warnings.str().empty());
}

TEST(Cache, TamperedEntriesAreDiscardedAndRecomputed) {
  const auto m = testing::cyclic(testing::e1_ring(), {"y"});
  const auto truth = minimal_free_resolution(m, 4);
  const auto dir = fresh_dir("tamper");
  std::ostringstream warnings;
  Cache cache(dir, &warnings);
  cache.resolution(m, 4);
  const auto path = cache.entry_path(Cache::resolution_key(m, 4));
  ASSERT_TRUE(fs::exists(path));
  const std::string original = read(path);

  const auto tamper = [&](const std::function<void(json&)>& edit) {
    json j = json::parse(original);
    edit(j);
    std::ofstream(path, std::ios::binary | std::ios::trunc) << j.dump();
  };
  const std::vector<std::function<void(json&)>> edits = {
      // φ_2 column no longer composes to zero with φ_1.
      [](json& j) { j["maps"][1]["columns"][0][0] = "x + y"; },
      // a different first map: H_0 is no longer M.
      [](json& j) { j["maps"][0]["columns"][0][0] = "x"; },
      // a unit entry.
      [](json& j) { j["maps"][2]["columns"][0][0] = "1"; },
      [](json& j) { j["terminated"] = true; },
      [](json& j) { j["maps"].erase(3); },
      [](json& j) { j["key"] = "something else"; },
  };
  std::size_t discarded = 0;
  for (const auto& edit : edits) {
    tamper(edit);
    const auto res = cache.resolution(m, 4);
    EXPECT_EQ(cache.stats().discarded, ++discarded);
    EXPECT_EQ(res.complex, truth.complex);
    EXPECT_EQ(read(path), original);  // rewritten by the recomputation
  }
  std::ofstream(path, std::ios::binary | std::ios::trunc) << "{\"kind\": \"resol";
  EXPECT_EQ(cache.resolution(m, 4).complex, truth.complex);
  EXPECT_EQ(cache.stats().discarded, discarded + 1);
  EXPECT_NE(warnings.str().find("discarding cache entry"), std::string::npos);
  const auto hits = cache.stats().hits;
  EXPECT_EQ(cache.resolution(m, 4).complex, truth.complex);
  EXPECT_EQ(cache.stats().hits, hits + 1);
}

TEST(Cache, TamperedIdealBasisIsDiscarded) {
  const auto s = testing::poly_ring(3, {"x", "y", "z"});
  const auto gens = testing::polys(s, {"x^2 - y*z", "x*y", "z^3"});
  const HomogeneousIdeal truth(s, gens);
  const auto dir = fresh_dir("ideal");
  std::ostringstream warnings;
  Cache cache(dir, &warnings);
  EXPECT_EQ(cache.ideal(s, gens), truth);
  EXPECT_EQ(cache.ideal(s, gens), truth);
  EXPECT_EQ(cache.stats().hits, 1u);
  const auto path = cache.entry_path(Cache::ideal_key(s, gens));
  json j = json::parse(read(path));
  j["basis"].erase(j["basis"].size() - 1);
  std::ofstream(path, std::ios::binary | std::ios::trunc) << j.dump();
  EXPECT_EQ(cache.ideal(s, gens), truth);
  EXPECT_EQ(cache.stats().discarded, 1u);
}

TEST(Cache, DirectoryFromEnvironment) {
  ::setenv(Cache::kEnvironmentVariable, "/tmp/frobsyz-env", 1);
  EXPECT_EQ(Cache::directory_from_environment(), fs::path("/tmp/frobsyz-env"));
  ::setenv(Cache::kEnvironmentVariable, "", 1);
  EXPECT_FALSE(Cache::directory_from_environment());
  ::unsetenv(Cache::kEnvironmentVariable);
  EXPECT_FALSE(Cache::directory_from_environment());
}

TEST(CertifiedBasis, AcceptsTheComputedCertificate) {
  testing::Rng rng(5);
  for (int round = 0; round < 10; ++round) {
    const auto s = testing::poly_ring(round % 2 ? 3 : 2, {"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_homogeneous(s, rng, 2 + k % 2));
    const HomogeneousIdeal ideal(s, gens);
    const auto back =
        HomogeneousIdeal::from_certified_basis(s, gens, ideal.basis(), basis_cofactors(ideal));
    EXPECT_EQ(back, ideal);
    EXPECT_EQ(back.generators(), ideal.generators());
  }
}

TEST(CertifiedBasis, RejectsBrokenCertificates) {
  const auto s = testing::poly_ring(2, {"x", "y"});
  const auto gens = testing::polys(s, {"x^2", "x*y + y^2"});
  const HomogeneousIdeal ideal(s, gens);
  const auto basis = ideal.basis();
  const auto cof = basis_cofactors(ideal);
  const auto rejects = [&](const std::vector<Polynomial>& b,
                           const std::vector<std::vector<Polynomial>>& c) {
    try {
      HomogeneousIdeal::from_certified_basis(s, gens, b, c);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::EngineInconsistency;
    }
    return false;
  };
  ASSERT_EQ(basis.size(), 3u);  // y^3 comes from the S-pair
  auto short_basis = basis;
  short_basis.pop_back();
  auto short_cof = cof;
  short_cof.pop_back();
  EXPECT_TRUE(rejects(short_basis, short_cof));
  auto wrong = cof;
  wrong[0][0] = wrong[0][0] + Polynomial::constant(s, 1);
  EXPECT_TRUE(rejects(basis, wrong));
  auto swapped = basis;
  std::swap(swapped[0], swapped[1]);
  auto swapped_cof = cof;
  std::swap(swapped_cof[0], swapped_cof[1]);
  EXPECT_TRUE(rejects(swapped, swapped_cof));
  EXPECT_FALSE(rejects(basis, cof));
  EXPECT_TRUE(rejects({Polynomial::constant(s, 1)}, {{Polynomial(s), Polynomial(s)}}));
}

}  // namespace
}  // namespace frobsyz
