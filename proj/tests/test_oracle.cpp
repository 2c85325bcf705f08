#include <gtest/gtest.h>

#include <algorithm>
#include "json.hpp"
#include <set>

#include "iinf/error.hpp"
#include "iinf/oracle.hpp"
#include "window_model.hpp"

using namespace iinf;

TEST(Enumerate, Counts) {
  std::vector<std::size_t> expected{1, 2, 7, 34, 209, 1546};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    auto w = enumerate_window(FinSet::range(0, static_cast<Point>(n)));
    EXPECT_EQ(w.size(), expected[n]) << n;
    EXPECT_EQ(window_count(n), expected[n]) << n;
    EXPECT_EQ(model::all(n).size(), expected[n]) << n;
  }
  EXPECT_EQ(window_count(6), 13327U);
}

TEST(Enumerate, DistinctAndSupportedInWindow) {
  FinSet w{2, 5, 9};
  auto xs = enumerate_window(w);
  std::set<PartialSelfmap> seen(xs.begin(), xs.end());
  EXPECT_EQ(seen.size(), xs.size());
  EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
  for (auto const& x : xs) {
    EXPECT_TRUE(x.support().is_subset_of(w)) << format(x);
  }
}

TEST(Enumerate, WindowTooLarge) {
  try {
    enumerate_window(FinSet::range(0, 7));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooLarge);
  }
  EXPECT_EQ(enumerate_window(FinSet::range(0, 2), 2).size(), 7U);
  EXPECT_THROW(enumerate_window(FinSet::range(0, 3), 2), Error);
}

TEST(Suite, Names) {
  EXPECT_EQ(parse_suite("green"), Suite::green);
  EXPECT_EQ(parse_suite("all"), Suite::all);
  EXPECT_FALSE(parse_suite("nope").has_value());
  EXPECT_EQ(to_string(Suite::semilattice), "semilattice");
}

TEST(Verify, TinyWindowsAreFastAndOnlyWFInversionFails) {
  for (Point n : {0, 1, 2}) {
    Report r = verify(Suite::all, FinSet::range(0, n));
    for (auto const& p : r.results) {
      if (p.id == "topology.inversion.WF" && n > 0) {
        EXPECT_FALSE(p.passed);
        continue;
      }
      EXPECT_TRUE(p.passed) << n << " " << p.id << ": " << p.counterexample;
    }
  }
}

TEST(Verify, CoreAndOracleSuitesOnWindowOfFour) {
  for (Suite s : {Suite::core, Suite::oracle}) {
    Report r = verify(s, FinSet::range(0, 4));
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_FALSE(r.results.empty());
  }
}

TEST(Verify, SamplingIsSeedDeterministic) {
  VerifyOptions o;
  o.triple_exhaustive_max = 2;
  o.samples = 500;
  o.seed = 7;
  Report a = verify(Suite::core, FinSet::range(0, 3), o);
  Report b = verify(Suite::core, FinSet::range(0, 3), o);
  EXPECT_EQ(to_json(a), to_json(b));
  bool any_sampled = std::any_of(a.results.begin(), a.results.end(),
                                 [](auto const& p) { return p.sampled; });
  EXPECT_TRUE(any_sampled);
}

TEST(Report, JsonFields) {
  Report r = verify(Suite::semilattice, FinSet::range(0, 2));
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["suite"], "semilattice");
  EXPECT_EQ(j["elements"], 7);
  EXPECT_EQ(j["passed"], true);
  ASSERT_FALSE(j["properties"].empty());
  for (auto const& p : j["properties"]) {
    EXPECT_TRUE(p.contains("id"));
    EXPECT_TRUE(p.contains("claim"));
    EXPECT_TRUE(p.contains("universe_size"));
    EXPECT_EQ(p["outcome"], "pass");
  }
}

TEST(Report, FailureCarriesCounterexample) {
  Report r = verify(Suite::topology, FinSet::range(0, 1));
  auto const* p = r.find("topology.inversion.WF");
  ASSERT_NE(p, nullptr);
  EXPECT_FALSE(p->passed);
  EXPECT_FALSE(p->counterexample.empty());
  EXPECT_FALSE(r.passed());
  EXPECT_NE(to_text(r).find("counterexample"), std::string::npos);
  EXPECT_EQ(r.find("no.such.property"), nullptr);
}
