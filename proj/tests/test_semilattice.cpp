#include <gtest/gtest.h>

#include "iinf/error.hpp"
#include "iinf/green.hpp"
#include "iinf/oracle.hpp"
#include "iinf/semilattice.hpp"

using namespace iinf;

TEST(Join, Examples) {
  FinSet a{1, 4};
  EXPECT_EQ(join(FinSet{1}, FinSet{2}), (FinSet{1, 2}));
  EXPECT_EQ(join(a, FinSet{}), a);
  EXPECT_EQ(join(a, a), a);
}

TEST(Idempotents, Correspondence) {
  EXPECT_EQ(to_idempotent(FinSet{3}), parse("{-3}"));
  EXPECT_EQ(from_idempotent(PartialSelfmap::identity()), FinSet{});
  EXPECT_EQ(from_idempotent(parse("{-2,-7}")), (FinSet{2, 7}));
  try {
    from_idempotent(parse("{1>2,2>1}"));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIdempotent);
  }
}

TEST(FSolver, Examples) {
  EXPECT_EQ(f_solver(FinSet{1}, FinSet{1, 2}),
            (std::vector<FinSet>{FinSet{1, 2}, FinSet{2}}));
  EXPECT_TRUE(f_solver(FinSet{1, 2}, FinSet{1}).empty());
  EXPECT_EQ(f_solver(FinSet{}, FinSet{}), std::vector<FinSet>{FinSet{}});
  EXPECT_EQ(f_solver(FinSet{1, 2}, FinSet{1, 2, 3}).size(), 4U);
}

TEST(UpSet, Examples) {
  auto up = up_set(parse("{-1,-2}"));
  std::vector<PartialSelfmap> expected{PartialSelfmap::identity(),
                                       parse("{-1}"), parse("{-1,-2}"),
                                       parse("{-2}")};
  EXPECT_EQ(up, expected);
  EXPECT_EQ(up_set(PartialSelfmap::identity()).size(), 1U);
  EXPECT_THROW(up_set(parse("{1>2,2>1}")), Error);
}

TEST(MaximalChain, Examples) {
  std::vector<PartialSelfmap> expected{parse("{-1,-2}"), parse("{-1}"),
                                       PartialSelfmap::identity()};
  EXPECT_EQ(maximal_chain_up(parse("{-1,-2}")), expected);
  EXPECT_EQ(maximal_chain_up(PartialSelfmap::identity()).size(), 1U);
}

TEST(DownSet, Examples) {
  std::vector<PartialSelfmap> expected{PartialSelfmap::identity(),
                                       parse("{-1}")};
  EXPECT_EQ(down_set_in_window(PartialSelfmap::identity(), FinSet{1}),
            expected);
  auto below = down_set_in_window(parse("{-5}"), FinSet{1, 2});
  EXPECT_EQ(below.size(), 4U);
  for (auto const& g : below) {
    EXPECT_TRUE(nat_leq(g, parse("{-5}")));
  }
}

TEST(SemilatticeSuite, AllPropertiesHoldOnWindowOfFour) {
  Report r = verify(Suite::semilattice, FinSet::range(0, 4));
  for (auto const& p : r.results) {
    EXPECT_TRUE(p.passed) << p.id << ": " << p.counterexample;
  }
  EXPECT_EQ(r.find("semilattice.f_solver")->checked, 16U * 16U);
}
