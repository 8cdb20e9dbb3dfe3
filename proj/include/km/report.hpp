// Report types shared by the command-line tools, rendered as plain text, TSV
// or JSON.  Field and row order is preserved so identical inputs give
// byte-identical output.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace km {

enum class Format { text, tsv, json };
Format parse_format(const std::string& s);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;
  int failures = 0;

  void field(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  /// A pass/fail line; failures are counted.
  void claim(Table& t, const std::string& what, bool ok, const std::string& detail);
};

std::string render(const Report& r, Format f);

/// Fixed-precision decimal formatting used by every report.
std::string format_double(double x, int digits = 10);

}  // namespace km
