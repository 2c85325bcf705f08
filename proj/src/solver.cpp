#include "iinf/solver.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

namespace iinf {

namespace {

void sort_by_text(std::vector<PartialSelfmap>& xs) {
  std::vector<std::pair<std::string, PartialSelfmap>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) {
    keyed.emplace_back(format(x), std::move(x));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](auto const& l, auto const& r) { return l.first < r.first; });
  xs.clear();
  for (auto& [_, x] : keyed) {
    xs.push_back(std::move(x));
  }
}

// Calls `emit(pairs, unused)` once per partial injection from `from` into
// `to`; `unused` are the points of `from` left out of the domain.
void for_each_partial_injection(
    FinSet const& from, FinSet const& to,
    std::function<void(std::vector<PointPair> const&,
                       std::vector<Point> const&)> const& emit) {
  std::vector<PointPair> pairs;
  std::vector<Point> unused;
  std::vector<bool> taken(to.size(), false);
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == from.size()) {
      emit(pairs, unused);
      return;
    }
    unused.push_back(from[i]);
    step(i + 1);
    unused.pop_back();
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!taken[j]) {
        taken[j] = true;
        pairs.emplace_back(from[i], to[j]);
        step(i + 1);
        pairs.pop_back();
        taken[j] = false;
      }
    }
  };
  step(0);
}

}  // namespace

std::vector<PartialSelfmap> solve_left(PartialSelfmap const& a,
                                       PartialSelfmap const& b) {
  if (!a.holes().is_subset_of(b.holes())) {
    return {};
  }
  // Off supp(a) u supp(b) both a and b fix points, so x does too.
  FinSet rest = a.support().unite(b.support());
  std::vector<PointPair> forced;
  std::vector<Point> excluded;
  for (Point p : rest) {
    auto ap = a.apply(p);
    if (!ap) {
      continue;
    }
    if (auto bp = b.apply(p)) {
      forced.emplace_back(*ap, *bp);
    } else {
      excluded.push_back(*ap);
    }
  }

  std::vector<PartialSelfmap> out;
  for_each_partial_injection(
      a.ran_complement(), b.ran_complement(),
      [&](std::vector<PointPair> const& free,
          std::vector<Point> const& unused) {
        std::vector<PointPair> pairs = forced;
        pairs.insert(pairs.end(), free.begin(), free.end());
        std::vector<Point> holes = excluded;
        holes.insert(holes.end(), unused.begin(), unused.end());
        out.push_back(
            PartialSelfmap::make(std::move(pairs), FinSet(std::move(holes))));
      });
  sort_by_text(out);
  return out;
}

std::vector<PartialSelfmap> solve_right(PartialSelfmap const& c,
                                        PartialSelfmap const& d) {
  std::vector<PartialSelfmap> out = solve_left(invert(c), invert(d));
  for (auto& x : out) {
    x = invert(x);
  }
  sort_by_text(out);
  return out;
}

std::uint64_t partial_injection_count(std::uint64_t m, std::uint64_t n) {
  // sum_k C(m,k) C(n,k) k!, accumulated term by term:
  // term(k+1) = term(k) * (m-k)(n-k) / (k+1)
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::uint64_t k = 0; k <= std::min(m, n); ++k) {
    total += term;
    term = term * (m - k) * (n - k) / (k + 1);
  }
  return total;
}

std::uint64_t fiber_count(PartialSelfmap const& a, PartialSelfmap const& b) {
  if (!a.holes().is_subset_of(b.holes())) {
    return 0;
  }
  return partial_injection_count(a.corank(), b.corank());
}

}  // namespace iinf
