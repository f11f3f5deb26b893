#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwh/common.hpp"

namespace dwh {

// CSV with '#'-prefixed header lines echoing the resolved configuration;
// numbers at 17 significant digits, '.' decimal, comma separated.
class CsvWriter {
 public:
  CsvWriter(std::string path, const std::vector<std::string>& header_lines,
            const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void close();
  ~CsvWriter();

 private:
  struct Impl;
  Impl* impl_;
};

std::string format_g17(double v);

// Key-value configuration with [section] headers. Every physical quantity
// carries an explicit unit: `key = value unit`. Unknown keys and units are
// rejected.
struct ConfigEntry {
  double value = 0.0;
  std::string unit;  // "" for dimensionless
};

class RunConfig {
 public:
  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_string(const std::string& text);

  std::optional<ConfigEntry> get(const std::string& section,
                                 const std::string& key) const;
  double require(const std::string& section, const std::string& key,
                 const std::string& unit) const;
  // one "section.key = value unit" line per entry, sorted
  std::vector<std::string> echo_lines() const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, ConfigEntry> entries_;  // "section.key"
};

}  // namespace dwh
