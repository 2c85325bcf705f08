// Element arithmetic laws and the window model itself.

#include <algorithm>
#include <set>

#include "iinf/selfmap.hpp"
#include "oracle_detail.hpp"

namespace iinf::detail {

namespace {

// a restricted to the window, as an array of window positions (-1 = undefined).
std::vector<int> restrict_to(FinSet const& w, PartialSelfmap const& a) {
  std::vector<int> out(w.size(), -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (auto y = a.apply(w[i])) {
      auto pos = std::lower_bound(w.begin(), w.end(), *y) - w.begin();
      out[i] = static_cast<int>(pos);
    }
  }
  return out;
}

}  // namespace

void check_core(Checker& c) {
  auto const& u = c.universe();

  c.each("core.canonical_form",
         "stored data has no fixed pairs, moved points are in the domain, "
         "targets are sources or holes, and |holes| = |range complement|",
         [&](std::size_t i) {
           auto const& a = u[i];
           FinSet src = a.sources();
           bool ok = src.size() == a.moved().size() &&
                     src.intersect(a.holes()).empty() &&
                     a.targets().is_subset_of(src.unite(a.holes())) &&
                     a.holes().size() == a.ran_complement().size();
           for (auto const& [x, y] : a.moved()) {
             ok = ok && x != y;
           }
           return ok;
         });

  c.each("core.round_trip", "parse(format(a)) = a", [&](std::size_t i) {
    return parse(format(u[i])) == u[i];
  });

  c.each("core.inverse_axioms",
         "a a^-1 a = a and a^-1 a a^-1 = a^-1, with a a^-1 the idempotent "
         "on dom a",
         [&](std::size_t i) {
           auto const& a = u[i];
           PartialSelfmap inv = invert(a);
           PartialSelfmap e = compose(a, inv);
           return compose(e, a) == a && compose(compose(inv, a), inv) == inv &&
                  e.is_idempotent() && e.holes() == a.holes();
         });

  c.triples("core.associativity", "(ab)c = a(bc)",
            [&](std::size_t i, std::size_t j, std::size_t k) {
              return compose(compose(u[i], u[j]), u[k]) ==
                     compose(u[i], compose(u[j], u[k]));
            });

  c.pairs("core.corank_product", "corank(ab) >= max(corank a, corank b)",
          [&](std::size_t i, std::size_t j) {
            return compose(u[i], u[j]).corank() >=
                   std::max(u[i].corank(), u[j].corank());
          });

  c.pairs("core.pointwise_composition",
          "ab agrees with applying a then b on both supports and three "
          "fresh points",
          [&](std::size_t i, std::size_t j) -> Verdict {
            auto const& a = u[i];
            auto const& b = u[j];
            PartialSelfmap ab = compose(a, b);
            FinSet probe = a.support().unite(b.support()).unite(u.window());
            Point fresh = probe.empty() ? 0 : probe.back() + 1;
            probe = probe.unite(FinSet{fresh, fresh + 1, fresh + 2});
            for (Point x : probe) {
              std::optional<Point> chained;
              if (auto y = a.apply(x)) {
                chained = b.apply(*y);
              }
              if (ab.apply(x) != chained) {
                return "differs at " + std::to_string(x);
              }
            }
            return std::nullopt;
          });
}

void check_oracle(Checker& c) {
  auto const& u = c.universe();
  FinSet const& w = u.window();

  {
    PropertyResult& r = c.open("oracle.distinct",
                               "enumerated elements are pairwise distinct and "
                               "supported in the window");
    std::set<PartialSelfmap> seen;
    for (auto const& a : u.elems()) {
      ++r.checked;
      if (!seen.insert(a).second) {
        Checker::fail(r, "duplicate " + format(a));
        break;
      }
      if (!a.support().is_subset_of(w)) {
        Checker::fail(r, format(a) + " leaves the window");
        break;
      }
    }
  }

  {
    PropertyResult& r = c.open(
        "oracle.count_formula",
        "|enumerate_window| = sum_k C(n,k)^2 k! for n = 0..5");
    for (std::size_t n = 0; n <= 5 && r.passed; ++n) {
      ++r.checked;
      auto count = enumerate_window(FinSet::range(0, n)).size();
      if (count != window_count(n)) {
        Checker::fail(r, "n=" + std::to_string(n) + " enumerated " +
                             std::to_string(count));
      }
    }
  }

  c.each("oracle.closed_under_inverse", "a^-1 lies in the window",
         [&](std::size_t i) { return u.index_of(invert(u[i])).has_value(); });

  c.pairs("oracle.closed_under_product", "ab lies in the window",
          [&](std::size_t i, std::size_t j) {
            return u.index_of(compose(u[i], u[j])).has_value();
          });

  c.pairs("oracle.restriction_isomorphism",
          "restricting to the window turns composition into composition of "
          "partial injections of the window",
          [&](std::size_t i, std::size_t j) {
            auto ra = restrict_to(w, u[i]);
            auto rb = restrict_to(w, u[j]);
            std::vector<int> expected(w.size(), -1);
            for (std::size_t x = 0; x < w.size(); ++x) {
              if (ra[x] >= 0) {
                expected[x] = rb[static_cast<std::size_t>(ra[x])];
              }
            }
            return restrict_to(w, compose(u[i], u[j])) == expected;
          });
}

}  // namespace iinf::detail
