#include "covlab/report.hpp"

#include <fstream>

#include "covlab/errors.hpp"

namespace covlab {

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  emit(header);
}

void CsvWriter::row(std::vector<std::string> cells) {
  if (cells.size() != width_) throw Error("csv row width mismatch");
  emit(cells);
}

void CsvWriter::emit(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      out_ += '"';
      for (char ch : c) {
        if (ch == '"') out_ += '"';
        out_ += ch;
      }
      out_ += '"';
    } else {
      out_ += c;
    }
  }
  out_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write report file: " + path);
  f << out_;
}

}  // namespace covlab
