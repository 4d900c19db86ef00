#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace alpha_channel::cli {

/// Comma-separated table with `#` comment lines, a header row and LF endings.
class CsvTable {
 public:
  CsvTable(const RunConfig& cfg, const std::string& command, std::vector<std::string> columns);

  void comment(const std::string& line);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);

  [[nodiscard]] std::string render() const;
  [[nodiscard]] std::string number(double v) const;
  [[nodiscard]] std::size_t rows() const { return rows_.size(); }

 private:
  int precision_;
  std::vector<std::string> comments_;
  std::vector<std::string> columns_;
  std::vector<std::string> rows_;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::string out_dir;
  bool color;
};

/// Writes `name`.csv into io.out_dir, or the CSV to io.out when no directory
/// was given and `to_stdout` is set.
void emit(const Io& io, const std::string& name, const CsvTable& table, bool to_stdout);

/// Plain-text table with aligned columns.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

std::string status_word(bool pass, bool color);

}  // namespace alpha_channel::cli
