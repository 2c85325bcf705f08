#include "iinf/semilattice.hpp"

#include <algorithm>
#include <cstdint>

#include "iinf/error.hpp"

namespace iinf {

namespace {

void require_idempotent(PartialSelfmap const& e) {
  if (!e.is_idempotent()) {
    throw Error(ErrorKind::NotIdempotent, format(e) + " is not idempotent");
  }
}

// Subsets of `s`, each united with `base`, sorted.
std::vector<FinSet> subsets_over(FinSet const& base, FinSet const& s) {
  std::vector<FinSet> out;
  std::uint64_t count = std::uint64_t{1} << s.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Point> picked;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1U) {
        picked.push_back(s[i]);
      }
    }
    out.push_back(base.unite(FinSet(std::move(picked))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FinSet join(FinSet const& a, FinSet const& b) {
  return a.unite(b);
}

PartialSelfmap to_idempotent(FinSet const& a) {
  return PartialSelfmap::make({}, a);
}

FinSet from_idempotent(PartialSelfmap const& e) {
  require_idempotent(e);
  return e.holes();
}

std::vector<FinSet> f_solver(FinSet const& a, FinSet const& b) {
  if (!a.is_subset_of(b)) {
    return {};
  }
  return subsets_over(b.minus(a), a);
}

std::vector<PartialSelfmap> up_set(PartialSelfmap const& e) {
  require_idempotent(e);
  std::vector<PartialSelfmap> out;
  for (auto const& h : subsets_over({}, e.holes())) {
    out.push_back(to_idempotent(h));
  }
  return out;
}

std::vector<PartialSelfmap> maximal_chain_up(PartialSelfmap const& e) {
  require_idempotent(e);
  std::vector<Point> holes = e.holes().elems();
  std::vector<PartialSelfmap> chain{e};
  while (!holes.empty()) {
    holes.pop_back();
    chain.push_back(to_idempotent(FinSet(holes)));
  }
  return chain;
}

std::vector<PartialSelfmap> down_set_in_window(PartialSelfmap const& e,
                                               FinSet const& window) {
  require_idempotent(e);
  std::vector<PartialSelfmap> out;
  for (auto const& h : subsets_over(e.holes(), window.minus(e.holes()))) {
    out.push_back(to_idempotent(h));
  }
  return out;
}

}  // namespace iinf
