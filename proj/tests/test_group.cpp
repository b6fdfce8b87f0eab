#include <gtest/gtest.h>

#include "incgrade/errors.hpp"
#include "incgrade/group.hpp"

using namespace incgrade;

namespace {

void expect_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (GroupElement a = 0; a < n; ++a) {
    EXPECT_EQ(g.multiply(a, g.identity()), a);
    EXPECT_EQ(g.multiply(g.identity(), a), a);
    EXPECT_EQ(g.multiply(a, g.inverse(a)), g.identity());
    for (GroupElement b = 0; b < n; ++b)
      for (GroupElement c = 0; c < n; ++c)
        EXPECT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
  }
}

}  // namespace

TEST(Specs, Cyclic) {
  const auto c3 = group_from_spec("C3");
  EXPECT_EQ(c3.names(), (std::vector<std::string>{"1", "h", "h^2"}));
  const auto h = c3.parse_element("h");
  EXPECT_EQ(c3.name(c3.multiply(h, h)), "h^2");
  EXPECT_EQ(c3.name(c3.inverse(h)), "h^2");
  EXPECT_EQ(group_from_spec("C1").order(), 1u);
}

TEST(Specs, KleinFour) {
  const auto v = group_from_spec("C2xC2");
  EXPECT_EQ(v.order(), 4u);
  expect_group_axioms(v);
  for (GroupElement a = 0; a < 4; ++a) EXPECT_EQ(v.multiply(a, a), v.identity());
}

TEST(Specs, SymmetricIsNonAbelian) {
  const auto s3 = group_from_spec("S3");
  EXPECT_EQ(s3.order(), 6u);
  expect_group_axioms(s3);
  const auto a = s3.parse_element("(12)"), b = s3.parse_element("(23)");
  EXPECT_NE(s3.multiply(a, b), s3.multiply(b, a));
  // (12)(23) applies (23) first: 1->1->2, 2->3->3, 3->2->1.
  EXPECT_EQ(s3.name(s3.multiply(a, b)), "(123)");
  expect_group_axioms(group_from_spec("S4"));
}

TEST(Specs, CayleyTableJson) {
  const auto g = group_from_spec(R"({"elements": ["e", "a"], "table": [["e", "a"], ["a", "e"]]})");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.name(g.multiply(1, 1)), "e");
  const auto h = group_from_spec(R"({"elements": ["e", "a"], "table": [[0, 1], [1, 0]]})");
  EXPECT_EQ(g, h);
}

TEST(Specs, Rejections) {
  EXPECT_THROW(group_from_spec("Q8"), InputError);
  EXPECT_THROW(group_from_spec("C0"), InputError);
  // Not a group: no identity.
  EXPECT_THROW(group_from_spec(R"({"elements": ["a", "b"], "table": [[1, 1], [1, 1]]})"), InvalidGroupError);
  // Closure.
  EXPECT_THROW(group_from_spec(R"({"elements": ["a"], "table": [[3]]})"), InvalidGroupError);
  // Latin square but not associative.
  EXPECT_THROW(group_from_spec(
                   R"({"elements": ["0","1","2","3","4"], "table": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})"),
               InvalidGroupError);
  EXPECT_THROW(group_from_spec("C3").parse_element("g"), InputError);
}

TEST(Split, TopLevel) {
  EXPECT_EQ(split_top_level("1, (1,h), h^2"), (std::vector<std::string>{"1", "(1,h)", "h^2"}));
}
