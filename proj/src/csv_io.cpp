#include "rct/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

namespace rct {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

double parse_cell(std::string_view cell, const std::string& path,
                  std::size_t line_no, std::size_t col_no) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw FormatError("non-numeric cell at line " + std::to_string(line_no) +
                      ", column " + std::to_string(col_no) + " in " + path);
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

void write_dataset_csv(const std::string& path, const Matrix& x,
                       const Vector& y) {
  require_shape(x.rows() == y.size(), "dataset rows must match y length");
  std::string body;
  body.reserve(static_cast<std::size_t>(x.rows()) *
                   (static_cast<std::size_t>(x.cols()) + 1) * 20 +
               16);
  for (Index j = 0; j < x.cols(); ++j) {
    body += 'x';
    body += std::to_string(j + 1);
    body += ',';
  }
  body += "y\n";
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) {
      body += format_double(x(i, j));
      body += ',';
    }
    body += format_double(y(i));
    body += '\n';
  }
  write_text_file(path, body);
}

TableData read_dataset_csv(const std::string& path) {
  const std::string body = read_text_file(path);
  std::vector<std::string_view> lines;
  for (std::string_view rest = body; !rest.empty();) {
    const std::size_t pos = rest.find('\n');
    const std::string_view line =
        strip_cr(pos == std::string_view::npos ? rest : rest.substr(0, pos));
    if (!line.empty()) lines.push_back(line);
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (lines.empty()) throw FormatError("empty dataset file: " + path);

  const std::vector<std::string_view> header = split(lines[0], ',');
  std::ptrdiff_t y_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "y") {
      if (y_col >= 0) throw FormatError("duplicate y column in " + path);
      y_col = static_cast<std::ptrdiff_t>(c);
    }
  }
  if (y_col < 0) throw FormatError("missing y column in " + path);
  if (header.size() < 2) {
    throw FormatError("expected at least one predictor column in " + path);
  }

  const Index n = static_cast<Index>(lines.size()) - 1;
  if (n == 0) throw FormatError("no data rows in " + path);
  const Index p = static_cast<Index>(header.size()) - 1;
  TableData table;
  table.x.resize(n, p);
  table.y.resize(n);
  for (Index i = 0; i < n; ++i) {
    const std::size_t line_no = static_cast<std::size_t>(i) + 2;
    const std::vector<std::string_view> cells = split(lines[i + 1], ',');
    if (cells.size() != header.size()) {
      throw FormatError("expected " + std::to_string(header.size()) +
                        " fields, got " + std::to_string(cells.size()) +
                        " at line " + std::to_string(line_no) + " in " + path);
    }
    Index feature = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const double v = parse_cell(cells[c], path, line_no, c + 1);
      if (static_cast<std::ptrdiff_t>(c) == y_col) {
        table.y(i) = v;
      } else {
        table.x(i, feature++) = v;
      }
    }
  }
  return table;
}

void write_groups_file(const std::string& path,
                       const std::vector<std::vector<Index>>& blocks) {
  std::string body;
  for (const std::vector<Index>& block : blocks) {
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k > 0) body += ' ';
      body += std::to_string(block[k]);
    }
    body += '\n';
  }
  write_text_file(path, body);
}

std::vector<std::vector<Index>> read_groups_file(const std::string& path) {
  const std::string body = read_text_file(path);
  std::vector<std::vector<Index>> blocks;
  std::size_t line_no = 0;
  for (std::string_view rest = body; !rest.empty();) {
    const std::size_t pos = rest.find('\n');
    const std::string_view line =
        strip_cr(pos == std::string_view::npos ? rest : rest.substr(0, pos));
    ++line_no;
    if (!line.empty()) {
      std::vector<Index> block;
      for (std::string_view token : split(line, ' ')) {
        if (token.empty()) continue;
        long long value = 0;
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() ||
            value < 0) {
          throw FormatError("bad group index at line " +
                            std::to_string(line_no) + " in " + path);
        }
        block.push_back(static_cast<Index>(value));
      }
      if (!block.empty()) blocks.push_back(std::move(block));
    }
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  return blocks;
}

}  // namespace rct
