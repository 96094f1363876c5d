#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "vframe/errors.hpp"
#include "vframe/text_format.hpp"

namespace vframe {
namespace {

std::string parse_error_of(std::string_view text, bool structure) {
  try {
    if (structure) {
      parse_structure_text(text);
    } else {
      parse_code_text(text);
    }
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

bool contains_text(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CodeText, CommentsAndBlankLinesIgnored) {
  const ParsedCode p = parse_code_text("# header\n\n1100\n  0011  \n# tail\n");
  EXPECT_EQ(p.code.length(), 4u);
  EXPECT_EQ(p.code.dimension(), 2u);
  ASSERT_EQ(p.rows.size(), 2u);
  EXPECT_EQ(p.rows[0].line, 3u);
  EXPECT_EQ(p.rows[1].line, 4u);
}

TEST(CodeText, Diagnostics) {
  EXPECT_TRUE(contains_text(parse_error_of("1100\n110\n", false), "line 2"));
  const std::string bad_char = parse_error_of("1100\n\n10x0\n", false);
  EXPECT_TRUE(contains_text(bad_char, "line 3")) << bad_char;
  EXPECT_TRUE(contains_text(bad_char, "x")) << bad_char;
  EXPECT_FALSE(parse_error_of("# nothing\n", false).empty());
}

TEST(CodeText, ParseErrorCarriesPosition) {
  try {
    parse_code_text("11\n1a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
}

TEST(StructureText, Sections) {
  const ParsedStructure p = parse_structure_text("[C]\n1111\n\n[D]\n1100\n0110\n0011\n");
  EXPECT_EQ(p.codes.frame_length(), 4u);
  EXPECT_EQ(p.codes.c().dimension(), 1u);
  EXPECT_EQ(p.codes.d().dimension(), 3u);
  EXPECT_EQ(p.d_rows.front().line, 5u);
  EXPECT_FALSE(p.decomposition.has_value());
}

TEST(StructureText, EmptySectionGivesZeroCode) {
  const ParsedStructure p = parse_structure_text("[D]\n11\n[C]\n");
  EXPECT_EQ(p.codes.c(), LinearCode::zero(2));
}

TEST(StructureText, Diagnostics) {
  EXPECT_TRUE(contains_text(parse_error_of("1111\n[C]\n1111\n[D]\n1111\n", true), "line 1"));
  EXPECT_TRUE(contains_text(parse_error_of("[C]\n11\n[C]\n11\n[D]\n11\n", true), "line 3"));
  EXPECT_TRUE(contains_text(parse_error_of("[C]\n11\n[E]\n", true), "line 3"));
  EXPECT_FALSE(parse_error_of("[C]\n11\n", true).empty());
  EXPECT_FALSE(parse_error_of("[C]\n[D]\n", true).empty());
  EXPECT_TRUE(contains_text(parse_error_of("[C]\n11\n[D]\n1111\n", true), "line 4"));
}

TEST(StructureText, Decomposition) {
  const ParsedStructure p = parse_structure_text(
      "[C]\n11\n[D]\n11\n[decomposition]\n0,0 : 1\n1/2,1/2 : 1\n1/16,1/16 : 3\n");
  ASSERT_TRUE(p.decomposition.has_value());
  ASSERT_EQ(p.decomposition->entries().size(), 3u);
  EXPECT_EQ(p.decomposition->entries()[2].multiplicity, 3);
  EXPECT_EQ(p.decomposition->entries()[2].label,
            FrameModuleLabel({IsingLabel::kSixteenth, IsingLabel::kSixteenth}));
}

TEST(StructureText, DecompositionDiagnostics) {
  const std::string head = "[C]\n11\n[D]\n11\n[decomposition]\n";
  EXPECT_TRUE(contains_text(parse_error_of(head + "0,1/3 : 1\n", true), "line 6"));
  EXPECT_TRUE(contains_text(parse_error_of(head + "0,0 1\n", true), "line 6"));
  EXPECT_TRUE(contains_text(parse_error_of(head + "0,0 : 1\n0 : 1\n", true), "line 7"));
  try {
    parse_structure_text(head + "0,0 : 1\n0,0 : 1\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(contains_text(e.what(), "line 7")) << e.what();
  }
}

TEST(StructureText, RenderParseRoundTrip) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 * (1 + trial % 20);
    const StructureCodes s = testing::random_valid_pair(rng, n, trial % 6, trial % 4);
    EXPECT_EQ(parse_structure_text(render_structure(s)).codes, s);
    EXPECT_EQ(parse_code_text(render_code(s.d())).code, s.d());
  }
  const FrameDecomposition d(2, {{FrameModuleLabel({IsingLabel::kSixteenth, IsingLabel::kSixteenth}), 2}});
  const LinearCode c = LinearCode::full_space(2);
  const StructureCodes n2(c, c);
  const ParsedStructure back = parse_structure_text(render_structure(n2, d));
  ASSERT_TRUE(back.decomposition.has_value());
  EXPECT_EQ(back.decomposition->entries()[0].multiplicity, 2);
}

TEST(ValidateParsed, OddGeneratorNamesItsLine) {
  const ParsedStructure p = parse_structure_text("[C]\n1100\n1000\n[D]\n");
  const ValidationReport r = validate_parsed(p);
  EXPECT_FALSE(r.ok());
  for (const auto& c : r.checks) {
    if (c.name == kCheckCEven) {
      EXPECT_FALSE(c.passed);
      EXPECT_TRUE(contains_text(c.detail, "line 3")) << c.detail;
      EXPECT_TRUE(contains_text(c.detail, "1000")) << c.detail;
    }
  }
}

TEST(WeightEnumeratorText, Rendering) {
  EXPECT_EQ(to_string(weight_enumerator(reed_muller(1, 4))), "1 + 30*w^8 + w^16");
  EXPECT_EQ(to_string(weight_enumerator(LinearCode::zero(3))), "1");
  EXPECT_EQ(to_string(weight_enumerator(LinearCode::full_space(2))), "1 + 2*w + w^2");
}

}  // namespace
}  // namespace vframe
