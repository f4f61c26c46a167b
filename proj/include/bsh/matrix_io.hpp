#pragma once

#include "bsh/int_matrix.hpp"

#include <string>

namespace bsh {

// Text format: "<rows> <cols>" then one row per line of decimal integers; a row made only of
// '+'/'-' characters is read as ±1 entries. Output is always decimal.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

IntMatrix load_matrix(const std::string& path);
void save_matrix(const IntMatrix& m, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace bsh
