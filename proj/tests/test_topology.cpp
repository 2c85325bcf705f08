#include <gtest/gtest.h>

#include "iinf/error.hpp"
#include "iinf/oracle.hpp"
#include "iinf/topology.hpp"

using namespace iinf;

namespace {

PartialSelfmap const id = PartialSelfmap::identity();
PartialSelfmap const swap12 = parse("{1>2,2>1}");

}  // namespace

TEST(Nbhd, ConstraintMustLieInDomain) {
  try {
    Nbhd(Flavor::F, parse("{-1}"), FinSet{1});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstraintOutsideDomain);
  }
  EXPECT_EQ(to_string(Nbhd(Flavor::WF, parse("{-1}"), FinSet{2, 3})),
            "WF({-1}; {2,3})");
}

TEST(Member, Examples) {
  EXPECT_TRUE(member(Nbhd(Flavor::F, id, FinSet{3}), swap12));
  EXPECT_FALSE(member(Nbhd(Flavor::F, id, FinSet{1}), swap12));
  EXPECT_TRUE(member(Nbhd(Flavor::WF, id, {}), parse("{-1}")));
  EXPECT_FALSE(member(Nbhd(Flavor::WF, parse("{-1}"), {}), id));
  // WF agreement requires the constraint to stay in the member's domain.
  EXPECT_FALSE(member(Nbhd(Flavor::WF, id, FinSet{1}), parse("{-1}")));
}

TEST(Disjoint, Examples) {
  EXPECT_TRUE(disjoint(Nbhd(Flavor::F, id, FinSet{1}),
                       Nbhd(Flavor::F, swap12, FinSet{1})));
  EXPECT_TRUE(disjoint(Nbhd(Flavor::F, id, {}),
                       Nbhd(Flavor::F, parse("{-1}"), {})));
  Nbhd a(Flavor::WF, id, FinSet{2});
  Nbhd b(Flavor::WF, parse("{-1}"), FinSet{2});
  EXPECT_FALSE(disjoint(a, b));
  auto w = common_member(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(member(a, *w) && member(b, *w));
}

TEST(Disjoint, InjectivityClash) {
  // Forced 2 -> 2 and 1 -> 2 cannot both hold in an injective map.
  EXPECT_TRUE(disjoint(Nbhd(Flavor::F, id, FinSet{2}),
                       Nbhd(Flavor::F, swap12, FinSet{1})));
  EXPECT_TRUE(disjoint(Nbhd(Flavor::WF, id, FinSet{2}),
                       Nbhd(Flavor::WF, swap12, FinSet{1})));
}

TEST(Disjoint, FlavorMismatch) {
  try {
    disjoint(Nbhd(Flavor::F, id, {}), Nbhd(Flavor::WF, id, {}));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FlavorMismatch);
  }
}

TEST(Disjoint, FCommonMemberCompletesBijection) {
  Nbhd a(Flavor::F, parse("{1>3,-3}"), FinSet{1});
  Nbhd b(Flavor::F, parse("{1>3,4>5,5>4,-3}"), FinSet{4});
  auto w = common_member(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(member(a, *w));
  EXPECT_TRUE(member(b, *w));
}

TEST(Separate, Examples) {
  EXPECT_EQ(separate(id, swap12, Flavor::F),
            std::pair(FinSet{1}, FinSet{1}));
  EXPECT_EQ(separate(id, parse("{-1}"), Flavor::F),
            std::pair(FinSet{}, FinSet{}));
  EXPECT_EQ(separate(parse("{-1}"), parse("{-2}"), Flavor::WF),
            std::pair(FinSet{2}, FinSet{1}));
  try {
    separate(id, id, Flavor::WF);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EqualElements);
  }
}

TEST(Separate, WFStrictContainment) {
  // dom {-1,-2} inside dom {-1}: a point of dom a and 2 from dom b \ dom a.
  auto a = parse("{-1,-2}");
  auto b = parse("{-1}");
  auto [f1, f2] = separate(a, b, Flavor::WF);
  EXPECT_EQ(f2, FinSet{2});
  EXPECT_TRUE(disjoint(Nbhd(Flavor::WF, a, f1), Nbhd(Flavor::WF, b, f2)));
}

TEST(Continuity, Examples) {
  EXPECT_EQ(continuity_witness(id, id, FinSet{1, 2}),
            std::pair(FinSet{1, 2}, FinSet{1, 2}));
  EXPECT_EQ(continuity_witness(parse("{1>3,-3}"), parse("{3>1,-1}"), FinSet{1}),
            std::pair(FinSet{1}, FinSet{3}));
  EXPECT_THROW(continuity_witness(id, parse("{-1}"), FinSet{1}), Error);
}

TEST(Continuity, ImageConstraintAloneIsNotEnough) {
  // With the plain image witness ({}, {}) the product (1 2) * {-1} of members
  // leaves U_{-1}({}); the returned witness pins the point sent into the hole.
  auto a = id;
  auto b = parse("{-1}");
  auto bad = swap12 * b;
  EXPECT_FALSE(member(Nbhd(Flavor::F, a * b, {}), bad));
  auto [f1, f2] = continuity_witness(a, b, {});
  EXPECT_EQ(f1, FinSet{1});
  EXPECT_FALSE(member(Nbhd(Flavor::F, a, f1), swap12));
}

TEST(Inversion, Examples) {
  EXPECT_EQ(inversion_witness(id, FinSet{5}), FinSet{5});
  EXPECT_EQ(inversion_witness(parse("{1>3,-3}"), FinSet{1}), FinSet{3});
  EXPECT_THROW(inversion_witness(parse("{-1}"), FinSet{1}), Error);
}

// In the WF flavor inversion has no witness at all: for g = {-0} and any
// constraint f, the member {z>0, -0} with z outside f has an inverse whose
// domain contains 0, outside dom g^-1.
TEST(Inversion, WFCounterexample) {
  auto g = parse("{-0}");
  for (FinSet f : {FinSet{}, FinSet{1}, FinSet{1, 2, 3}}) {
    Point z = f.empty() ? 1 : f.back() + 1;
    auto mu = PartialSelfmap::make({{z, 0}}, FinSet{0});
    ASSERT_TRUE(member(Nbhd(Flavor::WF, g, f), mu));
    for (FinSet target : {FinSet{}, inversion_witness(g, f), FinSet{z}}) {
      EXPECT_FALSE(member(Nbhd(Flavor::WF, invert(g), target), invert(mu)));
    }
  }
}

TEST(Refine, UnionOfConstraints) {
  Nbhd a(Flavor::WF, id, FinSet{2});
  Nbhd b(Flavor::WF, parse("{-1}"), FinSet{3});
  EXPECT_EQ(refine(a, b), (FinSet{2, 3}));
}

TEST(Flavor, Text) {
  EXPECT_EQ(parse_flavor("WF"), Flavor::WF);
  EXPECT_EQ(to_string(Flavor::F), "F");
  EXPECT_THROW(parse_flavor("G"), Error);
}

TEST(TopologySuite, PropertiesOnWindowOfThree) {
  Report r = verify(Suite::topology, FinSet::range(0, 3));
  for (auto const& p : r.results) {
    if (p.id == "topology.inversion.WF") {
      // Known to fail, see Inversion.WFCounterexample.
      EXPECT_FALSE(p.passed);
      continue;
    }
    EXPECT_TRUE(p.passed) << p.id << ": " << p.counterexample;
  }
  EXPECT_GE(r.find("topology.continuity.F")->checked, 1000U);
  EXPECT_GE(r.find("topology.inversion.F")->checked, 1000U);
}
