#pragma once

#include <map>
#include <optional>
#include <string>

#include "zetanu/types.hpp"

namespace zetanu {

/// Flat key=value settings. Lines starting with '#' and blank lines are ignored.
struct Config {
  int em_truncation = 0;  // 0: automatic
  double grid_h = 0.1;
  Rectangle census_rect{-4.0, 4.3, 0.01, 100.0};
  std::string output_dir = ".";
  int jobs = 0;  // 0: OpenMP default

  /// Throws invalid_argument naming the offending key.
  void validate() const;
};

/// Applies key=value pairs on top of `base`. Unknown keys are rejected.
Config parse_config(const std::string& text, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// "a,b,c,d" -> sigma_min, sigma_max, t_min, t_max.
Rectangle parse_rect(const std::string& text);

/// "x,y" -> pair of doubles.
std::pair<double, double> parse_pair(const std::string& text);

}  // namespace zetanu
