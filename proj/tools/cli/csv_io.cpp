#include "csv_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

namespace truncvar::cli {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_double(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw CliError(ExitCode::MalformedInput, "not a number: '" + std::string(field) + "'");
  }
  return value;
}

SampledPath read_path_csv(std::istream& in) {
  std::vector<double> times;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!seen_content) {
      seen_content = true;
      if (row == "time,value") continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
      throw CliError(ExitCode::MalformedInput,
                     "line " + std::to_string(line_no) + ": expected two columns time,value");
    }
    try {
      times.push_back(parse_double(row.substr(0, comma)));
      values.push_back(parse_double(row.substr(comma + 1)));
    } catch (const CliError& e) {
      throw CliError(ExitCode::MalformedInput,
                     "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw CliError(ExitCode::IoFailure, "read error");
  try {
    return make_path(std::move(times), std::move(values));
  } catch (const Error& e) {
    throw CliError(ExitCode::MalformedInput, e.what());
  }
}

SampledPath read_path_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw CliError(ExitCode::IoFailure, "cannot open '" + file.string() + "'");
  return read_path_csv(in);
}

void write_path_csv(std::ostream& out, const SampledPath& path) {
  out << "time,value\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    out << format_double(path.time(i)) << ',' << format_double(path.value(i)) << '\n';
  }
}

namespace {

std::ofstream open_output(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw CliError(ExitCode::IoFailure, "cannot write '" + file.string() + "'");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
  out.flush();
  if (!out) throw CliError(ExitCode::IoFailure, "write to '" + file.string() + "' failed");
}

}  // namespace

void write_path_file(const std::filesystem::path& file, const SampledPath& path) {
  auto out = open_output(file);
  write_path_csv(out, path);
  finish(out, file);
}

void write_columns_file(const std::filesystem::path& file, std::span<const std::string> header,
                        std::span<const std::vector<double>> columns) {
  auto out = open_output(file);
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      out << (k ? "," : "") << format_double(columns[k][r]);
    }
    out << '\n';
  }
  finish(out, file);
}

}  // namespace truncvar::cli
