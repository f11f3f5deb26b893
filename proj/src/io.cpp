#include "dwh/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace dwh {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CsvWriter::Impl {
  std::ofstream out;
  size_t n_columns = 0;
  std::string path;
};

CsvWriter::CsvWriter(std::string path,
                     const std::vector<std::string>& header_lines,
                     const std::vector<std::string>& columns)
    : impl_(new Impl) {
  impl_->path = path;
  impl_->out.open(path, std::ios::binary);  // LF line endings everywhere
  if (!impl_->out) throw numeric_error("cannot open output file " + path);
  for (const auto& line : header_lines) impl_->out << "# " << line << "\n";
  impl_->n_columns = columns.size();
  for (size_t i = 0; i < columns.size(); ++i)
    impl_->out << (i ? "," : "") << columns[i];
  impl_->out << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != impl_->n_columns)
    throw domain_error("row", "column count mismatch");
  for (size_t i = 0; i < values.size(); ++i)
    impl_->out << (i ? "," : "") << format_g17(values[i]);
  impl_->out << "\n";
}

void CsvWriter::close() {
  if (impl_ && impl_->out.is_open()) impl_->out.close();
}

CsvWriter::~CsvWriter() {
  close();
  delete impl_;
}

namespace {

const std::set<std::string>& unit_whitelist() {
  static const std::set<std::string> units = {
      "",        "Hz",  "rad/s", "nm", "m", "kg", "amu",
      "a_z",     "hbar_omega_z", "J_units", "s", "1_over_J"};
  return units;
}

const std::set<std::string>& key_whitelist() {
  static const std::set<std::string> keys = {
      "trap.mass",         "trap.omega_z",   "trap.omega_rho",
      "trap.eta",          "trap.lambda",    "trap.target_J",
      "potential.kind",    "potential.a_s",  "potential.r0",
      "potential.kappa",   "potential.Lambda",
      "model.U",           "model.U_i",      "model.I",
      "model.K",           "model.J",
      "dynamics.t_max",    "dynamics.dt",
      "sweep.start",       "sweep.stop",     "sweep.step",
      "output.precision",
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::parse_string(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw domain_error("config", "malformed section at line " +
                                         std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config",
                         "missing '=' at line " + std::to_string(lineno));
    const std::string key = section + "." + trim(line.substr(0, eq));
    if (!key_whitelist().count(key))
      throw domain_error("config", "unknown key '" + key + "'");
    std::istringstream rhs(trim(line.substr(eq + 1)));
    ConfigEntry entry;
    std::string unit;
    if (!(rhs >> entry.value))
      throw domain_error("config", "non-numeric value for '" + key + "'");
    rhs >> unit;
    if (!unit_whitelist().count(unit))
      throw domain_error("config", "unknown unit '" + unit + "' for '" + key + "'");
    entry.unit = unit;
    cfg.entries_[key] = entry;
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("config", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

std::optional<ConfigEntry> RunConfig::get(const std::string& section,
                                          const std::string& key) const {
  const auto it = entries_.find(section + "." + key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double RunConfig::require(const std::string& section, const std::string& key,
                          const std::string& unit) const {
  const auto e = get(section, key);
  if (!e) throw domain_error("config", "missing " + section + "." + key);
  if (e->unit != unit)
    throw domain_error("config", section + "." + key + " must carry unit '" +
                                     unit + "'");
  return e->value;
}

std::vector<std::string> RunConfig::echo_lines() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) {
    std::string line = k + " = " + format_g17(v.value);
    if (!v.unit.empty()) line += " " + v.unit;
    out.push_back(line);
  }
  return out;
}

}  // namespace dwh
