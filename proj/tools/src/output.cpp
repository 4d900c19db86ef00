#include "output.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <fmt/format.h>

#include "alpha_channel/errors.hpp"

namespace alpha_channel::cli {

CsvTable::CsvTable(const RunConfig& cfg, const std::string& command,
                   std::vector<std::string> columns)
    : precision_(cfg.output.precision), columns_(std::move(columns)) {
  comments_.push_back("alpha-channel " + command);
  comments_.push_back("config_hash=" + cfg.hash());
}

void CsvTable::comment(const std::string& line) { comments_.push_back(line); }

std::string CsvTable::number(double v) const { return fmt::format("{:.{}g}", v, precision_); }

void CsvTable::row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (const double v : values) cells.push_back(number(v));
  row(cells);
}

void CsvTable::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size()) {
    throw Error(fmt::format("CSV row has {} cells, header has {}", cells.size(), columns_.size()));
  }
  rows_.push_back(fmt::format("{}", fmt::join(cells, ",")));
}

std::string CsvTable::render() const {
  std::string text;
  for (const auto& c : comments_) text += "# " + c + "\n";
  text += fmt::format("{}\n", fmt::join(columns_, ","));
  for (const auto& r : rows_) text += r + "\n";
  return text;
}

void emit(const Io& io, const std::string& name, const CsvTable& table, bool to_stdout) {
  if (io.out_dir.empty()) {
    if (to_stdout) io.out << table.render();
    return;
  }
  const std::filesystem::path dir(io.out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / (name + ".csv");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError(fmt::format("cannot write '{}'", path.string()));
  file << table.render();
  io.err << "wrote " << path.string() << "\n";
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += fmt::format("{:<{}}", cells[c], width[c]);
      if (c + 1 < cells.size()) s += "  ";
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string status_word(bool pass, bool color) {
  if (!color) return pass ? "PASS" : "FAIL";
  return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

}  // namespace alpha_channel::cli
