#include <set>

#include "frobsyz/result_document.hpp"

namespace frobsyz {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

std::string emit_json(const json& value) { return value.dump(2) + "\n"; }

namespace {

std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_row(const json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items()) {
    if (is_scalar(x)) continue;
    if (!x.is_array()) return false;
    for (const auto& y : x) {
      if (!is_scalar(y)) return false;
    }
  }
  return true;
}

std::string csv_cell(const std::string& s) {
  const bool quote = s.find_first_of(",\"\n\r") != std::string::npos ||
                     (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!quote) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct CsvWriter {
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::pair<std::string, std::string>> tables;

  void walk(const json& v, const std::string& path) {
    if (v.is_object()) {
      for (const auto& [k, x] : v.items()) walk(x, path.empty() ? k : path + "." + k);
      return;
    }
    if (v.is_array()) {
      const bool rows = !v.empty() && std::all_of(v.begin(), v.end(), is_flat_row);
      const bool scalars = std::all_of(v.begin(), v.end(), is_scalar);
      if (rows) {
        table(v, path);
      } else if (scalars) {
        fields.emplace_back(path, scalar_text(v));
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) walk(v[i], path + "[" + std::to_string(i) + "]");
      }
      return;
    }
    fields.emplace_back(path, scalar_text(v));
  }

  void table(const json& rows, const std::string& path) {
    std::set<std::string> keys;
    for (const auto& r : rows) {
      for (const auto& [k, x] : r.items()) keys.insert(k);
    }
    std::string s;
    bool first = true;
    for (const auto& k : keys) {
      s += (first ? "" : ",") + csv_cell(k);
      first = false;
    }
    s += "\n";
    for (const auto& r : rows) {
      first = true;
      for (const auto& k : keys) {
        s += (first ? "" : ",") + csv_cell(r.contains(k) ? scalar_text(r[k]) : "");
        first = false;
      }
      s += "\n";
    }
    tables.emplace_back(path, std::move(s));
  }

  std::string str() const {
    std::string s = "# fields\npath,value\n";
    for (const auto& [p, v] : fields) s += csv_cell(p) + "," + csv_cell(v) + "\n";
    for (const auto& [p, t] : tables) s += "\n# " + p + "\n" + t;
    return s;
  }
};

void text_lines(const json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [k, x] : v.items()) {
    if (x.is_object()) {
      out += pad + k + ":\n";
      text_lines(x, indent + 1, out);
    } else if (x.is_array() && !x.empty() && is_flat_row(x.front())) {
      out += pad + k + ":\n";
      for (const auto& row : x) {
        std::string line;
        for (const auto& [rk, rv] : row.items()) {
          line += (line.empty() ? "" : "  ") + rk + "=" + (rv.is_null() ? "-" : scalar_text(rv));
        }
        out += pad + "  - " + line + "\n";
      }
    } else if (x.is_array() && !std::all_of(x.begin(), x.end(), is_scalar)) {
      out += pad + k + ":\n";
      for (const auto& item : x) {
        out += pad + "  -\n";
        text_lines(item, indent + 2, out);
      }
    } else {
      out += pad + k + ": " + (x.is_null() ? "-" : scalar_text(x)) + "\n";
    }
  }
}

}  // namespace

std::string emit(const ResultDocument& doc, Format format) {
  switch (format) {
    case Format::Json: return emit_json(doc.body);
    case Format::Csv: {
      CsvWriter w;
      w.walk(doc.body, "");
      return w.str();
    }
    case Format::Text: {
      std::string out;
      text_lines(doc.body, 0, out);
      return out;
    }
  }
  return emit_json(doc.body);
}

std::string emit(const std::vector<ResultDocument>& docs, Format format) {
  if (format == Format::Json) {
    json all = json::array();
    for (const auto& d : docs) all.push_back(d.body);
    return emit_json(all);
  }
  std::string out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out += "\n";
    if (docs.size() > 1) {
      const auto& job = docs[i].body.value("job", json::object());
      out += (format == Format::Csv ? "## job " : "== job ") + job.value("name", std::string()) + "\n";
    }
    out += emit(docs[i], format);
  }
  return out;
}

}  // namespace frobsyz
