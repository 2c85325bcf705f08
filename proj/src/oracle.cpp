#include "iinf/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "iinf/error.hpp"
#include "oracle_detail.hpp"

namespace iinf {

std::vector<PartialSelfmap> enumerate_window(FinSet const& window,
                                             std::size_t bound) {
  if (window.size() > bound) {
    throw Error(ErrorKind::WindowTooLarge,
                "window of size " + std::to_string(window.size()) +
                    " exceeds the bound " + std::to_string(bound));
  }
  std::vector<PartialSelfmap> out;
  out.reserve(window_count(window.size()));
  std::vector<PointPair> pairs;
  std::vector<Point> holes;
  std::vector<bool> used(window.size(), false);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == window.size()) {
      out.push_back(PartialSelfmap::make(pairs, FinSet(holes)));
      return;
    }
    holes.push_back(window[i]);
    assign(i + 1);
    holes.pop_back();
    for (std::size_t j = 0; j < window.size(); ++j) {
      if (!used[j]) {
        used[j] = true;
        pairs.emplace_back(window[i], window[j]);
        assign(i + 1);
        pairs.pop_back();
        used[j] = false;
      }
    }
  };
  assign(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t window_count(std::size_t n) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n,k)^2 k!
  for (std::uint64_t k = 0; k <= n; ++k) {
    total += term;
    term = term * (n - k) * (n - k) / (k + 1);
  }
  return total;
}

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::core: return "core";
    case Suite::green: return "green";
    case Suite::congruence: return "congruence";
    case Suite::solver: return "solver";
    case Suite::semilattice: return "semilattice";
    case Suite::topology: return "topology";
    case Suite::oracle: return "oracle";
    case Suite::all: return "all";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::core, Suite::green, Suite::congruence, Suite::solver,
                  Suite::semilattice, Suite::topology, Suite::oracle,
                  Suite::all}) {
    if (to_string(s) == text) {
      return s;
    }
  }
  return std::nullopt;
}

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](PropertyResult const& r) { return r.passed; });
}

PropertyResult const* Report::find(std::string_view id) const {
  for (auto const& r : results) {
    if (r.id == id) {
      return &r;
    }
  }
  return nullptr;
}

namespace detail {

Universe::Universe(FinSet window, std::size_t bound)
    : _window(std::move(window)), _elems(enumerate_window(_window, bound)) {
  for (std::size_t i = 0; i < _elems.size(); ++i) {
    _index.emplace(_elems[i], i);
  }
}

std::optional<std::size_t> Universe::index_of(PartialSelfmap const& a) const {
  auto it = _index.find(a);
  if (it == _index.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Universe::build_tables() const {
  std::size_t n = _elems.size();
  _product.resize(n * n);
  _inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    _inverse[i] = static_cast<std::uint32_t>(*index_of(invert(_elems[i])));
    for (std::size_t j = 0; j < n; ++j) {
      _product[i * n + j] =
          static_cast<std::uint32_t>(*index_of(compose(_elems[i], _elems[j])));
    }
  }
}

std::size_t Universe::product(std::size_t i, std::size_t j) const {
  if (_product.empty()) {
    build_tables();
  }
  return _product[i * _elems.size() + j];
}

std::size_t Universe::inverse(std::size_t i) const {
  if (_inverse.empty()) {
    build_tables();
  }
  return _inverse[i];
}

Checker::Checker(Report& report, Universe const& u,
                 VerifyOptions const& options)
    : _report(report), _u(u), _options(options), _rng(options.seed) {}

PropertyResult& Checker::open(std::string id, std::string claim) {
  PropertyResult r;
  r.id = std::move(id);
  r.claim = std::move(claim);
  _report.results.push_back(std::move(r));
  return _report.results.back();
}

void Checker::fail(PropertyResult& r, std::string counterexample) {
  if (r.passed) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
  }
}

std::vector<FinSet> subsets(FinSet const& s) {
  std::vector<FinSet> out;
  std::uint64_t count = std::uint64_t{1} << s.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Point> picked;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask >> i & 1U) {
        picked.push_back(s[i]);
      }
    }
    out.emplace_back(std::move(picked));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

Report verify(Suite suite, FinSet const& window, VerifyOptions const& options) {
  Report report;
  report.suite = std::string(to_string(suite));
  report.window = window;
  detail::Universe u(window, options.window_bound);
  detail::Checker checker(report, u, options);
  auto run = [&](Suite s, void (*sweep)(detail::Checker&)) {
    if (suite == s || suite == Suite::all) {
      sweep(checker);
    }
  };
  run(Suite::core, detail::check_core);
  run(Suite::oracle, detail::check_oracle);
  run(Suite::green, detail::check_green);
  run(Suite::congruence, detail::check_congruence);
  run(Suite::solver, detail::check_solver);
  run(Suite::semilattice, detail::check_semilattice);
  run(Suite::topology, detail::check_topology);
  return report;
}

std::string to_text(Report const& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " on window " << to_string(r.window) << " ("
     << window_count(r.window.size()) << " elements)\n";
  std::size_t failures = 0;
  for (auto const& p : r.results) {
    os << (p.passed ? "PASS " : "FAIL ") << p.id << "  [" << p.checked
       << (p.sampled ? " sampled" : "") << "]  " << p.claim << '\n';
    if (!p.passed) {
      ++failures;
      os << "     counterexample: " << p.counterexample << '\n';
    }
  }
  os << (failures == 0 ? "all " + std::to_string(r.results.size()) +
                             " properties hold"
                       : std::to_string(failures) + " of " +
                             std::to_string(r.results.size()) +
                             " properties failed")
     << '\n';
  return os.str();
}

std::string to_json(Report const& r) {
  nlohmann::json props = nlohmann::json::array();
  for (auto const& p : r.results) {
    nlohmann::json j = {{"id", p.id},
                        {"claim", p.claim},
                        {"universe_size", p.checked},
                        {"sampled", p.sampled},
                        {"outcome", p.passed ? "pass" : "fail"}};
    if (!p.passed) {
      j["counterexample"] = p.counterexample;
    }
    props.push_back(std::move(j));
  }
  nlohmann::json out = {{"suite", r.suite},
                        {"window", r.window.elems()},
                        {"elements", window_count(r.window.size())},
                        {"passed", r.passed()},
                        {"properties", std::move(props)}};
  return out.dump(2);
}

}  // namespace iinf
