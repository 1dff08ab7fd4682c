#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isospec::cli {

/// Filesystem failure; maps to exit status 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numbers go out as %.16e (17 significant digits, round-trip exact).
std::string format_number(double x);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<double>& values);
  /// Row whose leading fields are already text (indices, labels).
  void row(const std::vector<std::string>& prefix, const std::vector<double>& values);
  void text_row(const std::vector<std::string>& fields);
  /// Flushes and closes; throws IoError if anything failed.
  void close();

  const std::filesystem::path& path() const { return path_; }
  std::size_t rows() const { return rows_; }
  const std::vector<std::string>& header() const { return header_; }

 private:
  std::filesystem::path path_;
  std::vector<std::string> header_;
  std::ofstream out_;
  std::string line_;
  std::size_t rows_ = 0;
};

std::string sha256_file(const std::filesystem::path& path);

void ensure_directory(const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace isospec::cli
