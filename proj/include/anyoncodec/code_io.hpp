#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anyoncodec/binary_code.hpp"

namespace anyoncodec {

/// Contents of a code file: the "n k" header, k generator rows, and the
/// optional "# ambient=<n>" directive.
struct CodeFile {
  BinaryCode code;
  std::optional<std::size_t> ambient;
};

/// Parses the textual code format. Whitespace inside and between rows is
/// ignored, '#' starts a comment. Errors carry 1-based line/column.
CodeFile parse_code_file(std::string_view text);
CodeFile read_code_file(const std::string& path);

/// Writes "n k" followed by one row per generator. `comments` lines are
/// emitted first, each prefixed with "# ".
void write_code_file(std::ostream& out, std::size_t length, const std::vector<BitVector>& rows,
                     const std::vector<std::string>& comments = {});
/// Writes the canonical (RREF basis) form of `code`.
void write_canonical(std::ostream& out, const BinaryCode& code, const std::vector<std::string>& comments = {});
std::string to_code_file_string(const BinaryCode& code, const std::vector<std::string>& comments = {});

}  // namespace anyoncodec
