#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "truncvar/path.hpp"

namespace truncvar::cli {

enum class ExitCode : int {
  Success = 0,
  BadUsage = 2,
  MalformedInput = 3,
  NumericDomain = 4,
  IoFailure = 5,
};

class CliError : public std::runtime_error {
public:
  CliError(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ExitCode code() const noexcept { return code_; }

private:
  ExitCode code_;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

/// Strict parse of a whole field (surrounding blanks allowed).
/// Throws CliError(MalformedInput) on anything else.
double parse_double(std::string_view field);

/// Reads `time,value` rows. A leading `time,value` header is optional, blank
/// lines are ignored, CRLF endings are accepted. Rows must already be
/// time-sorted; unsorted or malformed input raises MalformedInput.
SampledPath read_path_csv(std::istream& in);
SampledPath read_path_file(const std::filesystem::path& file);

void write_path_csv(std::ostream& out, const SampledPath& path);
void write_path_file(const std::filesystem::path& file, const SampledPath& path);

/// Writes a header line and rows of equal-length numeric columns.
void write_columns_file(const std::filesystem::path& file, std::span<const std::string> header,
                        std::span<const std::vector<double>> columns);

}  // namespace truncvar::cli
