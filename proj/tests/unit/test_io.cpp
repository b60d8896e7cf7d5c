#include <gtest/gtest.h>

#include "equichain/errors.hpp"
#include "equichain/homology.hpp"
#include "equichain/io.hpp"
#include "fixtures.hpp"

using namespace equichain;
using namespace equichain::testing;

namespace {

const char* kLens = R"({
  "group": "cyclic:3",
  "name": "lens",
  "degrees": [
    {"rank": 1},
    {"rank": 1, "differential": [[[[1, 1], [-1, 0]]]]},
    {"rank": 1, "differential": [[[[1, 0], [1, 1], [1, 2]]]]}
  ]
})";

void expect_same_boundaries(const ChainComplex& a, const ChainComplex& b, int top) {
  for (int n = 0; n <= top; ++n) {
    auto ba = a.module_basis(n), bb = b.module_basis(n);
    ASSERT_EQ(ba.size(), bb.size()) << "degree " << n;
    EXPECT_EQ(quotient_by_group(a, top - 1).d, quotient_by_group(b, top - 1).d);
  }
}

}  // namespace

TEST(GroupDocument, ParsesAndChecksAxioms) {
  GroupRef g = parse_group_document(R"({"order": 2, "identity": 0, "mul": [[0, 1], [1, 0]]})");
  EXPECT_EQ(resolve_group(g)->order(), 2);
  EXPECT_EQ(parse_group_document(serialize_group(g)), g);
  try {
    parse_group_document(R"({"order": 3, "identity": 0, "mul": [[0, 1, 2], [1, 0, 2], [2, 2, 0]]})");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("triple"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_group_document(R"({"order": 2, "mul": [[0, 1], [1, 0]]})"), InvalidInput);
  EXPECT_THROW(parse_group_document("{"), InvalidInput);
  EXPECT_EQ(parse_group_document(R"("symmetric:3")").spec, "symmetric:3");
  EXPECT_THROW(group_ref("dihedral:4"), InvalidInput);
}

TEST(ComplexDocument, ParseBuildSerialize) {
  ComplexDocument doc = parse_complex_document(kLens);
  EXPECT_EQ(doc.ranks, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(doc.differentials[1][0][0], (EntryTerms{{-1, 0}, {1, 1}}));
  EXPECT_EQ(parse_complex_document(serialize_complex(doc)), doc);
  auto complex = build_complex(doc);
  ChainMatrices q = quotient_by_group(*complex, 1);
  EXPECT_EQ(q.d[1], IntegerMatrix::from_rows({{0}}));
  EXPECT_EQ(q.d[2], IntegerMatrix::from_rows({{3}}));
}

TEST(ComplexDocument, EntriesAreNormalized) {
  ComplexDocument doc = parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": 1},
      {"rank": 1, "differential": [[[[1, 1], [2, 0], [-1, 1], [-2, 0]]]]}]})");
  EXPECT_TRUE(doc.differentials[1][0][0].empty());
  ComplexDocument absent = parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": 1}, {"rank": 2}]})");
  EXPECT_EQ(absent.differentials[1], (std::vector<std::vector<EntryTerms>>(1, std::vector<EntryTerms>(2))));
}

TEST(ComplexDocument, RejectsMalformedInput) {
  EXPECT_THROW(parse_complex_document(R"({"degrees": [{"rank": 1}]})"), InvalidInput);
  EXPECT_THROW(parse_complex_document(R"({"group": "cyclic:2", "degrees": []})"), InvalidInput);
  EXPECT_THROW(parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": -1}]})"), InvalidInput);
  EXPECT_THROW(parse_complex_document(
                   R"({"group": "cyclic:2", "degrees": [{"rank": 1}, {"rank": 1, "differential": [[[[1, 5]]]]}]})"),
               InvalidInput);
  EXPECT_THROW(parse_complex_document(
                   R"({"group": "cyclic:2", "degrees": [{"rank": 2}, {"rank": 1, "differential": [[[]]]}]})"),
               InvalidInput);
  try {
    parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": 1}, {"rank": 1, "differential": [[[1]]]}]})");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("degrees[1].differential[0][0]"), std::string::npos) << e.what();
  }
}

TEST(ComplexDocument, SquareZeroViolationIsAValidationError) {
  ComplexDocument doc = parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": 1},
      {"rank": 1, "differential": [[[[1, 1], [-1, 0]]]]}, {"rank": 1, "differential": [[[[1, 0]]]]}]})");
  EXPECT_THROW(build_complex(doc), ValidationError);
}

TEST(ComplexDocument, BigCoefficientsSurviveRoundTrip) {
  ComplexDocument doc = parse_complex_document(R"({"group": "cyclic:2", "degrees": [{"rank": 1},
      {"rank": 1, "differential": [[[["123456789012345678901234567890", 1]]]]}]})");
  EXPECT_EQ(doc.differentials[1][0][0][0].first, Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_complex_document(serialize_complex(doc)), doc);
}

TEST(Builtins, RoundTripThroughDocuments) {
  struct Case {
    std::string name;
    std::string group;
    int top;
  };
  for (const auto& c : {Case{"lens:3:2", "cyclic:3", 3}, Case{"circle:2", "cyclic:2", 1},
                        Case{"bar:cyclic:2", "cyclic:2", 3}, Case{"bar:symmetric:3", "symmetric:3", 2}}) {
    auto ex = builtin_example(c.name);
    ASSERT_TRUE(ex) << c.name;
    ComplexDocument doc = document_from_complex(*ex->module, c.top, group_ref(c.group));
    EXPECT_EQ(parse_complex_document(serialize_complex(doc)), doc) << c.name;
    auto rebuilt = build_complex(doc);
    EXPECT_EQ(document_from_complex(*rebuilt, c.top, group_ref(c.group)).differentials, doc.differentials);
    expect_same_boundaries(*ex->module, *rebuilt, c.top);
  }
  EXPECT_FALSE(builtin_example("lens:1:2"));
  EXPECT_FALSE(builtin_example("circle:x"));
  EXPECT_FALSE(builtin_example("bar:cyclic:0"));
  EXPECT_FALSE(builtin_example("torus"));
}
