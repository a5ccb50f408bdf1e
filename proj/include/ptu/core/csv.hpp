#pragma once

#include <string>

#include "ptu/core/matrix.hpp"

namespace ptu {

// Comma-separated numeric matrix, one matrix row per line, no header.
// Lines starting with '#' are skipped. Parsing is locale-independent
// (dot decimal separator); non-numeric or non-finite tokens and ragged
// rows raise ParseError with the offending line number.
Matrix read_matrix_csv(const std::string& path);

// Values are written in shortest round-trip form, so reading the file back
// reproduces the matrix bit-exactly.
void write_matrix_csv(const Matrix& m, const std::string& path);

// Formats one value the way write_matrix_csv does.
std::string format_value(double v);

}  // namespace ptu
