#include <gtest/gtest.h>

#include "iinf/error.hpp"
#include "iinf/oracle.hpp"
#include "iinf/selfmap.hpp"
#include "window_model.hpp"

using iinf::ErrorKind;
using iinf::FinSet;
using iinf::PartialSelfmap;
using iinf::parse;

namespace {

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (iinf::Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST(Make, EmptyDataIsIdentity) {
  EXPECT_TRUE(PartialSelfmap::make({}, {}).is_identity());
  EXPECT_EQ(PartialSelfmap::make({}, {}), PartialSelfmap::identity());
}

TEST(Make, StripsFixedPairs) {
  auto a = PartialSelfmap::make({{1, 1}, {2, 3}}, FinSet{3});
  EXPECT_EQ(format(a), "{2>3, -3}");
  EXPECT_EQ(a.moved().size(), 1U);
}

TEST(Make, Errors) {
  EXPECT_EQ(error_of([] { PartialSelfmap::make({{1, 2}}, {}); }),
            ErrorKind::TargetIsFixed);
  EXPECT_EQ(error_of([] { PartialSelfmap::make({{1, 2}, {1, 3}}, {}); }),
            ErrorKind::NonInjective);
  EXPECT_EQ(error_of([] { PartialSelfmap::make({{1, 3}, {2, 3}}, {}); }),
            ErrorKind::NonInjective);
  EXPECT_EQ(error_of([] { PartialSelfmap::make({{1, 2}}, FinSet{1}); }),
            ErrorKind::SourceIsHole);
}

TEST(Apply, Examples) {
  EXPECT_EQ(parse("{1>2,2>1}").apply(1), 2U);
  EXPECT_EQ(parse("{-3}").apply(3), std::nullopt);
  EXPECT_EQ(parse("{-3}").apply(7), 7U);
}

TEST(Compose, Examples) {
  auto t = parse("{1>2,2>1}");
  EXPECT_EQ(t * t, PartialSelfmap::identity());
  EXPECT_EQ(parse("{-1}") * parse("{-2}"), parse("{-1,-2}"));
  EXPECT_EQ(parse("{1>3,-3}") * parse("{3>1,-1}"), parse("{-3}"));
}

TEST(Compose, LeftToRight) {
  // x(ab) = (xa)b: 1 -> 2 under a, then 2 -> 3 under b.
  auto a = parse("{1>2, 2>1}");
  auto b = parse("{2>3, 3>2}");
  EXPECT_EQ((a * b).apply(1), 3U);
  EXPECT_EQ((b * a).apply(1), 2U);
}

TEST(Compose, AgreesWithArrayModel) {
  auto w = iinf::enumerate_window(FinSet::range(0, 3));
  for (auto const& a : w) {
    for (auto const& b : w) {
      EXPECT_EQ(model::from(a * b, 4),
                model::compose(model::from(a, 4), model::from(b, 4)));
    }
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(parse("{1>2,2>1}")), parse("{1>2,2>1}"));
  EXPECT_EQ(invert(parse("{1>3,-3}")), parse("{3>1,-1}"));
  EXPECT_TRUE(invert(PartialSelfmap::identity()).is_identity());
}

TEST(Invert, AgreesWithArrayModel) {
  for (auto const& a : iinf::enumerate_window(FinSet::range(0, 4))) {
    EXPECT_EQ(model::from(invert(a), 5), model::invert(model::from(a, 5)));
  }
}

TEST(Corank, Examples) {
  EXPECT_EQ(PartialSelfmap::identity().corank(), 0U);
  EXPECT_EQ(parse("{-1,-2}").corank(), 2U);
  auto a = parse("{1>3,-3}");
  EXPECT_EQ(a.corank(), 1U);
  EXPECT_EQ(a.ran_complement(), FinSet{1});
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(parse("{-5}").is_idempotent());
  EXPECT_FALSE(parse("{1>2,2>1}").is_idempotent());
  EXPECT_FALSE(parse("{1>3,-3}").is_permutation_of_domain());
  EXPECT_TRUE(parse("{1>2,2>3,3>1,-7}").is_permutation_of_domain());
  EXPECT_TRUE(PartialSelfmap::identity().support().empty());
  EXPECT_EQ(parse("{1>3,-3}").support(), (FinSet{1, 3}));
}

TEST(Text, Examples) {
  EXPECT_EQ(parse("{1>2, 2>1}"), PartialSelfmap::make({{1, 2}, {2, 1}}, {}));
  EXPECT_TRUE(parse("id").is_identity());
  EXPECT_TRUE(parse(" { } ").is_identity());
  EXPECT_EQ(format(PartialSelfmap::make({{2, 3}}, FinSet{3})), "{2>3, -3}");
  EXPECT_EQ(format(parse("{-3, 4>2, 2>3}")), "{2>3, 4>2, -3}");
  EXPECT_EQ(format(PartialSelfmap::identity()), "id");
}

TEST(Text, SyntaxErrors) {
  for (char const* bad :
       {"", "{", "{1>}", "{1 2}", "{-1,-1}", "{1>2,2>1} x", "ident", "{+1}"}) {
    EXPECT_EQ(error_of([&] { parse(bad); }), ErrorKind::SyntaxError) << bad;
  }
  EXPECT_EQ(error_of([] { parse("{1>2}"); }), ErrorKind::TargetIsFixed);
}

TEST(Text, ErrorMessageNamesKindAndPosition) {
  try {
    parse("{1>x}");
    FAIL();
  } catch (iinf::Error const& e) {
    std::string msg = e.what();
    EXPECT_EQ(msg.rfind("SyntaxError: ", 0), 0U) << msg;
    EXPECT_NE(msg.find("position 3"), std::string::npos) << msg;
  }
}

TEST(Properties, RoundTripAndInverseAxiomsOnWindow) {
  for (auto const& a : iinf::enumerate_window(FinSet::range(0, 4))) {
    EXPECT_EQ(parse(format(a)), a);
    EXPECT_EQ(a * invert(a) * a, a);
    EXPECT_EQ(invert(a) * a * invert(a), invert(a));
  }
}

TEST(Properties, HashIsConsistentWithEquality) {
  std::hash<PartialSelfmap> h;
  EXPECT_EQ(h(parse("{2>1,1>2}")), h(parse("{1>2,2>1}")));
}
