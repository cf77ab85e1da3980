#include "semiwig/io.hpp"

#include <cstdio>
#include <fstream>
#include <unistd.h>

#include "semiwig/error.hpp"

namespace semiwig {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  for (std::size_t i = 0; i < header_.size(); ++i) text_ += (i ? "," : "") + header_[i];
  text_ += '\n';
}

void CsvTable::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  row(cells);
}

void CsvTable::row(const std::vector<std::string>& cells) {
  if (cells.size() != header_.size()) throw Error(Errc::domain, "csv row width differs from header");
  for (std::size_t i = 0; i < cells.size(); ++i) text_ += (i ? "," : "") + cells[i];
  text_ += '\n';
  ++rows_;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::config, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(Errc::config, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(Errc::config, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem, const CsvTable& table,
                                  nlohmann::json meta) {
  std::filesystem::path csv = dir / (stem + ".csv");
  meta["columns"] = table.header();
  meta["rows"] = table.rows();
  meta["version"] = std::string("semiwig ") + kVersion;
  atomic_write(csv, table.text());
  atomic_write(dir / (stem + ".meta.json"), meta.dump(2) + "\n");
  return csv;
}

}  // namespace semiwig
