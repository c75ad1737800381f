#include "frobsyz/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>
#include <unistd.h>

#include "frobsyz/errors.hpp"
#include "frobsyz/parse_polynomial.hpp"

namespace frobsyz {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "frobsyz-cache 1";

std::string ring_line(const PolyRing& ring) {
  std::string s = "p=" + std::to_string(ring.field().characteristic()) + " vars=";
  for (std::size_t i = 0; i < ring.variables().size(); ++i) {
    s += (i ? "," : "") + ring.variables()[i];
  }
  return s + " order=" + std::string(to_string(ring.order()));
}

std::vector<std::string> strings(const std::vector<Polynomial>& polys) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

std::vector<Polynomial> polynomials(const RingPtr& ring, const json& list) {
  std::vector<Polynomial> out;
  for (const auto& s : list) out.push_back(parse_polynomial(ring, s.get<std::string>()));
  return out;
}

json encode_matrix(const GradedMatrix& a) {
  const auto& ambient = a.ring()->ambient();
  json columns = json::array();
  for (const auto& col : a.columns()) {
    json entries = json::array();
    for (std::uint32_t r = 0; r < a.rows(); ++r) entries.push_back(col.entry(ambient, r).to_string());
    columns.push_back(std::move(entries));
  }
  return json{{"source", a.source().twists}, {"columns", std::move(columns)}};
}

GradedMatrix decode_matrix(const QuotientRingPtr& ring, const json& j, const GradedFreeModule& target) {
  GradedFreeModule source{ring, j.at("source").get<std::vector<int>>()};
  const auto& cols = j.at("columns");
  if (cols.size() != source.rank()) throw Error(ErrorKind::InvalidArgument, "column count");
  std::vector<FreeVector> columns;
  for (const auto& c : cols) {
    if (c.size() != target.rank()) throw Error(ErrorKind::InvalidArgument, "row count");
    const auto entries = polynomials(ring->ambient(), c);
    FreeVector v = make_vector(entries);
    canonicalize(v, *ring->ambient());
    columns.push_back(std::move(v));
  }
  return GradedMatrix(std::move(source), target, std::move(columns));
}

}  // namespace

Cache::Cache(std::filesystem::path directory, std::ostream* warnings)
    : dir_(std::move(directory)), warnings_(warnings ? warnings : &std::cerr) {}

std::optional<std::filesystem::path> Cache::directory_from_environment() {
  const char* v = std::getenv(kEnvironmentVariable);
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::string Cache::digest(std::string_view text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::EngineInconsistency, "SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string Cache::ideal_key(const RingPtr& ring, const std::vector<Polynomial>& generators) {
  std::string s = std::string(kFormat) + "\nideal\n" + ring_line(*ring) + "\n";
  for (const auto& g : generators) s += g.to_string() + "\n";
  return s;
}

std::string Cache::resolution_key(const ModulePresentation& m, int steps) {
  const auto& ring = *m.ring();
  std::string s = std::string(kFormat) + "\nresolution\n" + ring_line(*ring.ambient()) + "\n";
  s += "I=" + ring.ideal().to_string() + "\n";
  s += m.to_string() + "\nsource";
  for (const int t : m.matrix().source().twists) s += " " + std::to_string(t);
  return s + "\nsteps=" + std::to_string(steps) + "\n";
}

std::filesystem::path Cache::entry_path(const std::string& key_text) const {
  return dir_ / (digest(key_text) + ".json");
}

std::optional<std::string> Cache::read(const std::string& key_text) {
  std::ifstream in(entry_path(key_text), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Cache::write(const std::string& key_text, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto final_path = entry_path(key_text);
  auto temp = final_path;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(temp_counter_++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) {
      *warnings_ << "frobsyz: warning: cannot write cache entry " << temp.string() << "\n";
      std::filesystem::remove(temp, ec);
      return;
    }
  }
  std::filesystem::rename(temp, final_path, ec);
  if (ec) {
    *warnings_ << "frobsyz: warning: cannot install cache entry " << final_path.string() << "\n";
    std::filesystem::remove(temp, ec);
    return;
  }
  ++stats_.stores;
}

void Cache::discard(const std::string& key_text, const std::string& reason) {
  const auto path = entry_path(key_text);
  *warnings_ << "frobsyz: warning: discarding cache entry " << path.filename().string() << ": "
             << reason << "\n";
  std::error_code ec;
  std::filesystem::remove(path, ec);
  ++stats_.discarded;
}

HomogeneousIdeal Cache::ideal(const RingPtr& ring, std::vector<Polynomial> generators) {
  const std::string key = ideal_key(ring, generators);
  if (const auto body = read(key)) {
    try {
      const json j = json::parse(*body);
      if (j.at("kind") != "ideal" || j.at("key") != key) throw Error(ErrorKind::InvalidArgument, "key mismatch");
      const auto basis = polynomials(ring, j.at("basis"));
      std::vector<std::vector<Polynomial>> cofactors;
      for (const auto& row : j.at("cofactors")) cofactors.push_back(polynomials(ring, row));
      HomogeneousIdeal out = HomogeneousIdeal::from_certified_basis(ring, generators, basis, cofactors);
      ++stats_.hits;
      return out;
    } catch (const std::exception& e) {
      discard(key, e.what());
    }
  }
  ++stats_.misses;
  HomogeneousIdeal out(ring, std::move(generators));
  json cof = json::array();
  for (const auto& row : basis_cofactors(out)) cof.push_back(strings(row));
  const json j{{"kind", "ideal"}, {"key", key}, {"basis", strings(out.basis())}, {"cofactors", cof}};
  write(key, j.dump() + "\n");
  return out;
}

MinimalResolution Cache::resolution(const ModulePresentation& m, int steps) {
  if (steps < 0) throw Error(ErrorKind::InvalidArgument, "resolution steps must be >= 0");
  const std::string key = resolution_key(m, steps);
  if (const auto body = read(key)) {
    try {
      const json j = json::parse(*body);
      if (j.at("kind") != "resolution" || j.at("key") != key) {
        throw Error(ErrorKind::InvalidArgument, "key mismatch");
      }
      const auto& ring = m.ring();
      GradedFreeModule target{ring, j.at("g0").get<std::vector<int>>()};
      std::vector<GradedMatrix> maps;
      for (const auto& jm : j.at("maps")) {
        maps.push_back(decode_matrix(ring, jm, target));
        target = maps.back().source();
      }
      if (maps.size() != static_cast<std::size_t>(steps)) {
        throw Error(ErrorKind::InvalidArgument, "stored resolution has the wrong length");
      }
      const GradedMatrix phi1 = minimal_presentation(m);
      bool terminated = false;
      if (steps == 0) {
        if (!(target == phi1.target())) throw Error(ErrorKind::InvalidArgument, "G_0 does not match M");
        terminated = phi1.target().rank() == 0 || phi1.cols() == 0;
      } else {
        if (!(maps.front() == phi1)) throw Error(ErrorKind::InvalidArgument, "H_0 does not match M");
        for (const auto& a : maps) {
          if (!a.is_minimal()) throw Error(ErrorKind::InvalidArgument, "map is not minimal");
          terminated = terminated || a.cols() == 0;
        }
      }
      if (terminated != j.at("terminated").get<bool>()) {
        throw Error(ErrorKind::InvalidArgument, "termination flag does not match the ranks");
      }
      MinimalResolution res{steps == 0 ? FreeComplex(target) : FreeComplex(std::move(maps)), terminated};
      ++stats_.hits;
      return res;
    } catch (const std::exception& e) {
      discard(key, e.what());
    }
  }
  ++stats_.misses;
  MinimalResolution res = minimal_free_resolution(m, steps);
  json maps = json::array();
  for (const auto& a : res.complex.maps()) maps.push_back(encode_matrix(a));
  const json j{{"kind", "resolution"},
               {"key", key},
               {"g0", res.complex.term(0).twists},
               {"terminated", res.terminated},
               {"maps", std::move(maps)}};
  write(key, j.dump() + "\n");
  return res;
}

}  // namespace frobsyz
