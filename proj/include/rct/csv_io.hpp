#pragma once

#include <string>
#include <vector>

#include "rct/common.hpp"

namespace rct {

// Decimal text with 17 significant digits; round-trips any finite double.
std::string format_double(double value);

struct TableData {
  Matrix x;
  Vector y;
};

// Header "x1,...,xp,y", one observation per row, cells from format_double.
void write_dataset_csv(const std::string& path, const Matrix& x,
                       const Vector& y);

// Strict reader for the same layout: a header naming a "y" column is
// mandatory, every other column is a predictor in file order.  Malformed
// cells raise FormatError with the 1-based line and column.
TableData read_dataset_csv(const std::string& path);

// One line per group: space-separated 0-based column indices.
void write_groups_file(const std::string& path,
                       const std::vector<std::vector<Index>>& blocks);
std::vector<std::vector<Index>> read_groups_file(const std::string& path);

// Whole-file helpers; binary mode, so payload bytes are written verbatim.
void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);

}  // namespace rct
