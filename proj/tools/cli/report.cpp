#include "report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "csv_io.hpp"

namespace truncvar::cli {

void RunReport::digest(const SampledPath& path) {
  samples = path.size();
  domain_start = path.domain_start();
  domain_end = path.domain_end();
  osc_norm = truncvar::osc_norm(path);
  total_variation = truncvar::total_variation(path);
}

void RunReport::add(std::string key, double value) {
  payload.emplace_back(std::move(key), format_double(value));
}

void RunReport::add(std::string key, std::string value) {
  payload.emplace_back(std::move(key), std::move(value));
}

void RunReport::render(std::ostream& out) const {
  out << "command=" << command << '\n';
  if (samples > 0) {
    out << "samples=" << samples << '\n'
        << "domain_start=" << format_double(domain_start) << '\n'
        << "domain_end=" << format_double(domain_end) << '\n'
        << "osc_norm=" << format_double(osc_norm) << '\n'
        << "total_variation=" << format_double(total_variation) << '\n';
  }
  if (levels.size() == 1) {
    out << "level=" << format_double(levels.front()) << '\n';
  } else if (!levels.empty()) {
    out << "levels=" << levels.size() << '\n'
        << "level_min=" << format_double(levels.front()) << '\n'
        << "level_max=" << format_double(levels.back()) << '\n';
  }
  for (const auto& [key, value] : payload) out << key << '=' << value << '\n';
  out << "wall_ms=" << format_double(wall_ms) << '\n';
}

std::vector<std::pair<std::string, std::string>> parse_report(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return out;
}

std::string report_value(const std::vector<std::pair<std::string, std::string>>& report,
                         const std::string& key) {
  for (const auto& [k, v] : report) {
    if (k == key) return v;
  }
  throw std::out_of_range("report has no key '" + key + "'");
}

}  // namespace truncvar::cli
