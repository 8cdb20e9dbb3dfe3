#include "km/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace km {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + s + "' (text, tsv or json)");
}

void Report::claim(Table& t, const std::string& what, bool ok, const std::string& detail) {
  t.rows.push_back({ok ? "PASS" : "FAIL", what, detail});
  failures += !ok;
}

std::string format_double(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

namespace {

std::string render_text(const Report& r) {
  std::ostringstream out;
  std::size_t w = 0;
  for (const auto& [k, v] : r.fields) w = std::max(w, k.size());
  for (const auto& [k, v] : r.fields) out << k << std::string(w - k.size() + 2, ' ') << v << '\n';
  for (const Table& t : r.tables) {
    if (!r.fields.empty() || &t != &r.tables.front()) out << '\n';
    if (!t.title.empty()) out << t.title << '\n';
    std::vector<std::size_t> widths(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) widths[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size()) s += std::string(widths[c] - cells[c].size() + 2, ' ');
      }
      out << s << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
  return out.str();
}

std::string render_tsv(const Report& r) {
  std::ostringstream out;
  for (const auto& [k, v] : r.fields) out << k << '\t' << v << '\n';
  for (const Table& t : r.tables) {
    if (!t.title.empty()) out << "# " << t.title << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "\t" : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
      out << '\n';
    }
  }
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["fields"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.fields) j["fields"][k] = v;
  j["tables"] = nlohmann::ordered_json::array();
  for (const Table& t : r.tables) {
    nlohmann::ordered_json tj;
    tj["title"] = t.title;
    tj["columns"] = t.columns;
    tj["rows"] = t.rows;
    j["tables"].push_back(std::move(tj));
  }
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::text: return render_text(r);
    case Format::tsv: return render_tsv(r);
    case Format::json: return render_json(r);
  }
  return "";
}

}  // namespace km
