#ifndef IINF_SRC_ORACLE_DETAIL_HPP
#define IINF_SRC_ORACLE_DETAIL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iinf/oracle.hpp"
#include "iinf/selfmap.hpp"

namespace iinf::detail {

// The enumerated window together with lookup tables the sweeps share.
class Universe {
 public:
  Universe(FinSet window, std::size_t bound);

  FinSet const& window() const noexcept { return _window; }
  std::vector<PartialSelfmap> const& elems() const noexcept { return _elems; }
  std::size_t size() const noexcept { return _elems.size(); }
  PartialSelfmap const& operator[](std::size_t i) const { return _elems[i]; }

  std::optional<std::size_t> index_of(PartialSelfmap const& a) const;

  // Multiplication and inversion tables; built on first use.
  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

 private:
  void build_tables() const;

  FinSet _window;
  std::vector<PartialSelfmap> _elems;
  std::unordered_map<PartialSelfmap, std::size_t> _index;
  mutable std::vector<std::uint32_t> _product;
  mutable std::vector<std::uint32_t> _inverse;
};

// Result of one predicate evaluation: nullopt passes, a string explains a
// failure.
using Verdict = std::optional<std::string>;

inline Verdict verdict(bool ok, std::string const& why = "") {
  if (ok) {
    return std::nullopt;
  }
  return why.empty() ? std::string("violated") : why;
}

// Drives a predicate over single elements, pairs or triples of the window,
// exhaustively or by seeded sampling, and records the outcome.
class Checker {
 public:
  Checker(Report& report, Universe const& u, VerifyOptions const& options);

  Universe const& universe() const noexcept { return _u; }
  VerifyOptions const& options() const noexcept { return _options; }
  std::mt19937_64& rng() noexcept { return _rng; }

  bool sample_pairs() const noexcept {
    return _u.window().size() > _options.pair_exhaustive_max;
  }
  bool sample_triples() const noexcept {
    return _u.window().size() > _options.triple_exhaustive_max;
  }

  // The returned reference is invalidated by the next open or record.
  PropertyResult& open(std::string id, std::string claim);
  void record(PropertyResult r) { _report.results.push_back(std::move(r)); }
  static void fail(PropertyResult& r, std::string counterexample);

  template <class Pred>
  void each(std::string id, std::string claim, Pred pred) {
    PropertyResult& r = open(std::move(id), std::move(claim));
    for (std::size_t i = 0; i < _u.size() && r.passed; ++i) {
      ++r.checked;
      if (auto why = eval(pred, i)) {
        fail(r, "a=" + format(_u[i]) + ": " + *why);
      }
    }
  }

  template <class Pred>
  void pairs(std::string id, std::string claim, Pred pred) {
    PropertyResult& r = open(std::move(id), std::move(claim));
    auto visit = [&](std::size_t i, std::size_t j) {
      ++r.checked;
      if (auto why = eval(pred, i, j)) {
        fail(r, "a=" + format(_u[i]) + ", b=" + format(_u[j]) + ": " + *why);
      }
    };
    std::size_t n = _u.size();
    if (sample_pairs()) {
      r.sampled = true;
      for (std::size_t s = 0; s < _options.samples && r.passed; ++s) {
        visit(draw(), draw());
      }
      return;
    }
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        visit(i, j);
      }
    }
  }

  template <class Pred>
  void triples(std::string id, std::string claim, Pred pred) {
    PropertyResult& r = open(std::move(id), std::move(claim));
    auto visit = [&](std::size_t i, std::size_t j, std::size_t k) {
      ++r.checked;
      if (auto why = eval(pred, i, j, k)) {
        fail(r, "a=" + format(_u[i]) + ", b=" + format(_u[j]) +
                    ", c=" + format(_u[k]) + ": " + *why);
      }
    };
    std::size_t n = _u.size();
    if (sample_triples()) {
      r.sampled = true;
      for (std::size_t s = 0; s < _options.samples && r.passed; ++s) {
        visit(draw(), draw(), draw());
      }
      return;
    }
    for (std::size_t i = 0; i < n && r.passed; ++i) {
      for (std::size_t j = 0; j < n && r.passed; ++j) {
        for (std::size_t k = 0; k < n && r.passed; ++k) {
          visit(i, j, k);
        }
      }
    }
  }

  std::size_t draw() {
    return std::uniform_int_distribution<std::size_t>(0, _u.size() - 1)(_rng);
  }

 private:
  template <class Pred, class... Idx>
  Verdict eval(Pred& pred, Idx... idx) {
    if constexpr (std::is_same_v<std::invoke_result_t<Pred&, Idx...>, bool>) {
      return verdict(pred(idx...));
    } else {
      return pred(idx...);
    }
  }

  Report& _report;
  Universe const& _u;
  VerifyOptions const& _options;
  std::mt19937_64 _rng;
};

// Per-suite sweeps.
void check_core(Checker& c);
void check_green(Checker& c);
void check_congruence(Checker& c);
void check_solver(Checker& c);
void check_semilattice(Checker& c);
void check_topology(Checker& c);
void check_oracle(Checker& c);

// All subsets of `s`, in increasing order.
std::vector<FinSet> subsets(FinSet const& s);

}  // namespace iinf::detail

#endif  // IINF_SRC_ORACLE_DETAIL_HPP
