#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "anyoncodec/code_io.hpp"
#include "anyoncodec/errors.hpp"
#include "oracle.hpp"

using namespace anyoncodec;

TEST(CodeIo, ParsesHeaderRowsAndComments) {
  const CodeFile f = parse_code_file("# a comment\n4 2  # trailing\n11 00\n\n0 0 1 1\n");
  EXPECT_EQ(f.code.length(), 4u);
  EXPECT_EQ(f.code.dimension(), 2u);
  EXPECT_EQ(f.code.generators()[0].to_string(), "1100");
  EXPECT_EQ(f.code.generators()[1].to_string(), "0011");
  EXPECT_FALSE(f.ambient);
}

TEST(CodeIo, AmbientDirective) {
  const CodeFile f = parse_code_file("# ambient=6\n6 1\n111100\n");
  EXPECT_EQ(f.ambient, 6u);
  EXPECT_THROW(parse_code_file("# ambient=8\n6 1\n111100\n"), InputError);
  EXPECT_THROW(parse_code_file("# ambient=x\n6 1\n111100\n"), ParseError);
}

TEST(CodeIo, ZeroRows) {
  const CodeFile f = parse_code_file("5 0\n");
  EXPECT_EQ(f.code.length(), 5u);
  EXPECT_EQ(f.code.dimension(), 0u);
}

TEST(CodeIo, ErrorsCarryPosition) {
  try {
    parse_code_file("3 1\n1x0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  try {
    parse_code_file("3 2\n110\n1100\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_code_file("3 2\n110\n"), ParseError);
  EXPECT_THROW(parse_code_file(""), ParseError);
  EXPECT_THROW(parse_code_file("0 0\n"), ParseError);
  EXPECT_THROW(parse_code_file("a 1\n1\n"), ParseError);
  EXPECT_THROW(read_code_file("/nonexistent/file.code"), InputError);
}

TEST(CodeIo, RoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 70;
    std::vector<BitVector> rows;
    const std::size_t k = rng() % 6;
    for (std::size_t r = 0; r < k; ++r) {
      BitVector v(n);
      for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
      rows.push_back(v);
    }
    const BinaryCode code(n, rows);
    const CodeFile back = parse_code_file(to_code_file_string(code, {"round trip", "ambient=" + std::to_string(n)}));
    EXPECT_EQ(back.code, code);
    EXPECT_EQ(back.code.basis(), code.basis());
    EXPECT_EQ(back.ambient, n);

    std::ostringstream raw;
    write_code_file(raw, n, rows);
    EXPECT_EQ(parse_code_file(raw.str()).code.generators(), rows);
  }
}
