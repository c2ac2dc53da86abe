#include "anyoncodec/code_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "anyoncodec/errors.hpp"

namespace anyoncodec {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::optional<std::size_t> parse_ambient_directive(std::string_view comment, std::size_t line, std::size_t column) {
  std::size_t i = 0;
  while (i < comment.size() && is_space(comment[i])) ++i;
  constexpr std::string_view kKey = "ambient=";
  if (comment.substr(i, kKey.size()) != kKey) return std::nullopt;
  i += kKey.size();
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(comment.data() + i, comment.data() + comment.size(), value);
  if (ec != std::errc() || ptr == comment.data() + i) {
    throw ParseError(line, column + i, "malformed ambient directive");
  }
  return value;
}

std::size_t parse_count(const Token& tok, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(tok.line, tok.column, std::string("expected ") + what + ", got '" + tok.text + "'");
  }
  return value;
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
  std::optional<std::size_t> ambient;
  // Header tokens are split on whitespace; rows are read as one bit-string per
  // line with internal whitespace dropped.
  std::vector<Token> header;
  std::vector<Token> rows;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      if (auto a = parse_ambient_directive(line.substr(hash + 1), line_no, hash + 2)) {
        if (ambient && *ambient != *a) throw ParseError(line_no, hash + 1, "conflicting ambient directives");
        ambient = a;
      }
      line = line.substr(0, hash);
    }

    if (header.size() < 2) {
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (header.size() == 2) {
          throw ParseError(line_no, start + 1, "unexpected token after the 'n k' header");
        }
        header.push_back({std::string(line.substr(start, i - start)), line_no, start + 1});
      }
    } else {
      Token row{"", line_no, 0};
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (is_space(line[i])) continue;
        if (line[i] != '0' && line[i] != '1') {
          throw ParseError(line_no, i + 1, std::string("expected '0' or '1', got '") + line[i] + "'");
        }
        if (row.column == 0) row.column = i + 1;
        row.text.push_back(line[i]);
      }
      if (!row.text.empty()) rows.push_back(std::move(row));
    }

    if (end == text.size()) break;
    pos = end + 1;
  }

  if (header.size() < 2) throw ParseError(line_no, 1, "missing 'n k' header");
  const std::size_t n = parse_count(header[0], "length n");
  const std::size_t k = parse_count(header[1], "row count k");
  if (n == 0) throw ParseError(header[0].line, header[0].column, "length must be at least 1");
  if (rows.size() != k) {
    const std::size_t where = rows.size() > k ? rows[k].line : line_no;
    throw ParseError(where, 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()));
  }

  std::vector<BitVector> gens;
  gens.reserve(k);
  for (const auto& row : rows) {
    if (row.text.size() != n) {
      throw ParseError(row.line, row.column,
                       "row has " + std::to_string(row.text.size()) + " bits, expected " + std::to_string(n));
    }
    gens.push_back(BitVector::from_string(row.text));
  }
  if (ambient && *ambient != n) {
    throw InputError("ambient directive " + std::to_string(*ambient) + " disagrees with length " + std::to_string(n));
  }
  return {BinaryCode(n, std::move(gens)), ambient};
}

CodeFile read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str());
}

void write_code_file(std::ostream& out, std::size_t length, const std::vector<BitVector>& rows,
                     const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << length << ' ' << rows.size() << '\n';
  for (const auto& r : rows) out << r.to_string() << '\n';
}

void write_canonical(std::ostream& out, const BinaryCode& code, const std::vector<std::string>& comments) {
  write_code_file(out, code.length(), code.basis(), comments);
}

std::string to_code_file_string(const BinaryCode& code, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_canonical(out, code, comments);
  return out.str();
}

}  // namespace anyoncodec
