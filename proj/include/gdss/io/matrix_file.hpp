#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gdss/mcda/model.hpp"

namespace gdss::io {

/// Plain-text performance matrix:
///
///   # comments and blank lines are ignored
///   action  NUISANCES:max  BRUIT:max  COST:min
///   729     1.00           0.99       1867
///
/// The header lists criteria as name:max or name:min, optionally preceded by
/// a corner cell. Each following row starts with the action label. Tokens
/// are separated by whitespace, commas or semicolons.
mcda::PerformanceMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const mcda::PerformanceMatrix& matrix);

/// Whole-file helpers; unreadable files raise Error(Io) naming the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace gdss::io
