#pragma once

#include <string>
#include <vector>

namespace covlab {

// Deterministic CSV assembly: '\n' endings, RFC-4180 quoting, fixed column
// count per writer.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(std::vector<std::string> cells);
  const std::string& str() const { return out_; }
  void write_file(const std::string& path) const;

 private:
  void emit(const std::vector<std::string>& cells);
  std::size_t width_;
  std::string out_;
};

}  // namespace covlab
