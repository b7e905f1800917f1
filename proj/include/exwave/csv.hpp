#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace exwave {

// Shortest-round-trip is not guaranteed by printf, so 17 significant digits
// are always written. Output is locale-independent.
std::string format_double(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<std::string_view> columns);

  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((write_cell(cells, first)), ...);
    out_ << '\n';
    ++rows_;
  }

  std::size_t rows() const { return rows_; }

 private:
  void separator(bool& first) {
    if (!first) out_ << ',';
    first = false;
  }
  void write_cell(double v, bool& first) {
    separator(first);
    out_ << format_double(v);
  }
  void write_cell(int v, bool& first) {
    separator(first);
    out_ << v;
  }
  void write_cell(std::string_view v, bool& first) {
    separator(first);
    out_ << v;
  }
  void write_cell(const std::string& v, bool& first) { write_cell(std::string_view(v), first); }
  void write_cell(const char* v, bool& first) { write_cell(std::string_view(v), first); }

  std::ostream& out_;
  std::size_t rows_ = 0;
};

}  // namespace exwave
