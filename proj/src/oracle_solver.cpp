#include <algorithm>
#include <functional>
#include <numeric>

#include "iinf/solver.hpp"
#include "oracle_detail.hpp"

namespace iinf::detail {

namespace {

// Window indices of `xs`, sorted; nullopt if some x leaves the window.
std::optional<std::vector<std::size_t>> indices(
    Universe const& u, std::vector<PartialSelfmap> const& xs) {
  std::vector<std::size_t> out;
  for (auto const& x : xs) {
    auto i = u.index_of(x);
    if (!i) {
      return std::nullopt;
    }
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Compare a solver against the brute-force filter: for each fixed a, bucket
// every window x by the product, then every bucket must equal the solver's
// answer.
void check_complete(Checker& c, std::string id, std::string claim,
                    bool left) {
  auto const& u = c.universe();
  std::size_t n = u.size();
  std::vector<std::size_t> as(n);
  std::iota(as.begin(), as.end(), 0);
  bool sampled = c.sample_pairs();
  if (sampled) {
    std::shuffle(as.begin(), as.end(), c.rng());
    as.resize(std::min<std::size_t>(n, 8));
  }
  PropertyResult& r = c.open(std::move(id), std::move(claim));
  r.sampled = sampled;
  for (std::size_t a : as) {
    std::vector<std::vector<std::size_t>> fiber(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto const& product = left ? compose(u[a], u[x]) : compose(u[x], u[a]);
      fiber[*u.index_of(product)].push_back(x);
    }
    for (std::size_t b = 0; b < n && r.passed; ++b) {
      ++r.checked;
      auto solved = indices(u, left ? solve_left(u[a], u[b])
                                    : solve_right(u[a], u[b]));
      if (!solved) {
        Checker::fail(r, "a=" + format(u[a]) + ", b=" + format(u[b]) +
                             ": a solution leaves the window");
      } else if (*solved != fiber[b]) {
        Checker::fail(r, "a=" + format(u[a]) + ", b=" + format(u[b]) +
                             ": " + std::to_string(solved->size()) +
                             " solutions, brute force finds " +
                             std::to_string(fiber[b].size()));
      }
    }
  }
}

}  // namespace

void check_solver(Checker& c) {
  auto const& u = c.universe();

  c.pairs("solver.soundness",
          "every x from solve_left satisfies a x = b and every y from "
          "solve_right satisfies y a = b",
          [&](std::size_t i, std::size_t j) -> Verdict {
            for (auto const& x : solve_left(u[i], u[j])) {
              if (compose(u[i], x) != u[j]) {
                return "left " + format(x);
              }
            }
            for (auto const& y : solve_right(u[i], u[j])) {
              if (compose(y, u[i]) != u[j]) {
                return "right " + format(y);
              }
            }
            return std::nullopt;
          });

  check_complete(c, "solver.left_complete",
                 "solve_left equals the brute-force filter over the window",
                 true);
  check_complete(c, "solver.right_complete",
                 "solve_right equals the brute-force filter over the window",
                 false);

  c.pairs("solver.fiber_count", "fiber_count equals |solve_left|",
          [&](std::size_t i, std::size_t j) {
            return fiber_count(u[i], u[j]) == solve_left(u[i], u[j]).size();
          });

  c.pairs("solver.duality",
          "solve_right(c, d) is the elementwise inverse of "
          "solve_left(c^-1, d^-1)",
          [&](std::size_t i, std::size_t j) {
            auto right = solve_right(u[i], u[j]);
            std::vector<PartialSelfmap> dual;
            for (auto const& x : solve_left(invert(u[i]), invert(u[j]))) {
              dual.push_back(invert(x));
            }
            std::sort(right.begin(), right.end());
            std::sort(dual.begin(), dual.end());
            return right == dual;
          });

  {
    PropertyResult& r = c.open(
        "solver.partial_injection_count",
        "partial_injection_count(m, n) counts partial injections between an "
        "m-set and an n-set, for m, n <= 6");
    for (std::uint64_t m = 0; m <= 6; ++m) {
      for (std::uint64_t k = 0; k <= 6; ++k) {
        ++r.checked;
        // Choose the image of each of the m points: undefined, or an unused
        // one of the k targets.
        std::function<std::uint64_t(std::uint64_t, std::uint64_t)> count =
            [&](std::uint64_t left, std::uint64_t free) -> std::uint64_t {
          if (left == 0) {
            return 1;
          }
          std::uint64_t total = count(left - 1, free);
          if (free > 0) {
            total += free * count(left - 1, free - 1);
          }
          return total;
        };
        if (partial_injection_count(m, k) != count(m, k)) {
          Checker::fail(r, "m=" + std::to_string(m) + ", n=" +
                               std::to_string(k));
        }
      }
    }
  }
}

}  // namespace iinf::detail
