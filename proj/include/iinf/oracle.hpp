#ifndef IINF_ORACLE_HPP
#define IINF_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iinf/point_set.hpp"
#include "iinf/selfmap.hpp"

namespace iinf {

// Elements supported inside a finite window W form a finite inverse
// subsemigroup isomorphic to the symmetric inverse monoid on W. The oracle
// enumerates it and checks the library's claims on every tuple.

inline constexpr std::size_t default_window_bound = 6;

// All canonical elements with sources, targets and holes inside `window`,
// one per partial injection of the window into itself, in canonical order.
// Throws WindowTooLarge when |window| > bound.
std::vector<PartialSelfmap> enumerate_window(
    FinSet const& window, std::size_t bound = default_window_bound);

// sum_k C(n,k)^2 k!
std::uint64_t window_count(std::size_t n);

enum class Suite { core, green, congruence, solver, semilattice, topology,
                   oracle, all };

std::string_view to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view text);

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Quantifiers over triples run exhaustively up to this window size and are
  // sampled above it; likewise for pairs.
  std::size_t triple_exhaustive_max = 3;
  std::size_t pair_exhaustive_max = 4;
  std::size_t samples = 20000;
  std::size_t window_bound = default_window_bound;
};

struct PropertyResult {
  std::string id;
  std::string claim;
  std::uint64_t checked = 0;  // number of tuples / configurations examined
  bool sampled = false;
  bool passed = true;
  std::string counterexample;  // first failure, if any
};

struct Report {
  std::string suite;
  FinSet window;
  std::vector<PropertyResult> results;

  bool passed() const;
  PropertyResult const* find(std::string_view id) const;
};

Report verify(Suite suite, FinSet const& window,
              VerifyOptions const& options = {});

std::string to_text(Report const& r);
std::string to_json(Report const& r);

}  // namespace iinf

#endif  // IINF_ORACLE_HPP
