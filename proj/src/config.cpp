#include "zetanu/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace zetanu {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const std::string t = trim(v);
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    fail(Errc::invalid_argument, key + ": not a number: '" + v + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const std::string t = trim(v);
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    fail(Errc::invalid_argument, key + ": not an integer: '" + v + "'");
  }
  return out;
}

std::vector<double> split_numbers(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
  return out;
}

}  // namespace

void Config::validate() const {
  if (em_truncation < 0 || em_truncation > 1'000'000) fail(Errc::invalid_argument, "em_truncation out of range");
  if (!(grid_h >= 1e-6 && grid_h <= 0.1)) fail(Errc::invalid_argument, "grid_h must lie in [1e-6, 0.1]");
  if (!census_rect.valid()) fail(Errc::invalid_argument, "census_rect must be a nonempty rectangle");
  if (std::max(std::abs(census_rect.t_min), std::abs(census_rect.t_max)) > kMaxImag) {
    fail(Errc::invalid_argument, "census_rect exceeds the supported |t| range");
  }
  if (output_dir.empty()) fail(Errc::invalid_argument, "output_dir must not be empty");
  if (jobs < 0 || jobs > 1024) fail(Errc::invalid_argument, "jobs out of range");
}

Rectangle parse_rect(const std::string& text) {
  const std::vector<double> v = split_numbers("rect", text);
  if (v.size() != 4) fail(Errc::invalid_argument, "rect: expected a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<double, double> parse_pair(const std::string& text) {
  const std::vector<double> v = split_numbers("pair", text);
  if (v.size() != 2) fail(Errc::invalid_argument, "expected two comma-separated numbers");
  return {v[0], v[1]};
}

Config parse_config(const std::string& text, Config cfg) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(Errc::invalid_argument, "config line " + std::to_string(lineno) + ": missing '='");
    const std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (key == "em_truncation") cfg.em_truncation = to_int(key, val);
    else if (key == "grid_h") cfg.grid_h = to_double(key, val);
    else if (key == "census_rect") cfg.census_rect = parse_rect(val);
    else if (key == "output_dir") cfg.output_dir = val;
    else if (key == "jobs") cfg.jobs = to_int(key, val);
    else fail(Errc::invalid_argument, "config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

}  // namespace zetanu
