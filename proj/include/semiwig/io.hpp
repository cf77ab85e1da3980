#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace semiwig {

// 17 significant digits, round-trips every double
std::string format_number(double v);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);
  std::size_t rows() const { return rows_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::string& text() const { return text_; }

 private:
  std::vector<std::string> header_;
  std::string text_;
  std::size_t rows_ = 0;
};

// temp file in the same directory, then rename over the target
void atomic_write(const std::filesystem::path& path, const std::string& content);

// writes <dir>/<stem>.csv and the sibling <dir>/<stem>.meta.json; returns the csv path
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem, const CsvTable& table,
                                  nlohmann::json meta);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace semiwig
