#pragma once
//
// Matrix documents: {"rows": r, "cols": c, "data": [[re, im], ...]} in
// row-major order. Numbers are written with 17 significant digits so a
// write/read cycle reproduces every bit.
//

#include <filesystem>
#include <string>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad {

// Throws ParseError naming the offending field.
CMat parse_matrix(std::string_view text);
CMat read_matrix(const std::filesystem::path& path);

std::string format_matrix(const CMat& a);
void write_matrix(const std::filesystem::path& path, const CMat& a);

}  // namespace numrad
