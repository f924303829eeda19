#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "truncvar/path.hpp"

namespace truncvar::cli {

/// Summary printed by every subcommand as `key=value` lines.
struct RunReport {
  std::string command;
  // input digest
  std::size_t samples = 0;
  double domain_start = 0.0;
  double domain_end = 0.0;
  double osc_norm = 0.0;
  double total_variation = 0.0;

  std::vector<double> levels;
  std::vector<std::pair<std::string, std::string>> payload;
  double wall_ms = 0.0;

  void digest(const SampledPath& path);
  void add(std::string key, double value);
  void add(std::string key, std::string value);

  void render(std::ostream& out) const;
};

/// Inverse of RunReport::render: every key in order of appearance.
std::vector<std::pair<std::string, std::string>> parse_report(const std::string& text);

/// Convenience lookup on a parsed report; throws std::out_of_range if absent.
std::string report_value(const std::vector<std::pair<std::string, std::string>>& report,
                         const std::string& key);

}  // namespace truncvar::cli
