// Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "iinf/cli.hpp"
#include "iinf/oracle.hpp"

using namespace iinf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

FinSet window(Point n) { return FinSet::range(0, n); }

// Every listed property must be present and pass, with at least `min_checked`
// configurations.
Outcome require(Report const& r, std::vector<std::string> const& ids,
                std::uint64_t min_checked = 1) {
  Outcome o;
  std::ostringstream os;
  for (auto const& id : ids) {
    auto const* p = r.find(id);
    if (p == nullptr) {
      o.ok = false;
      os << id << " missing; ";
      continue;
    }
    os << id << "=" << p->checked << (p->passed ? "" : " FAILED");
    if (!p->passed) {
      o.ok = false;
      os << " (" << p->counterexample << ")";
    } else if (p->checked < min_checked) {
      o.ok = false;
      os << " (< " << min_checked << ")";
    }
    os << "; ";
  }
  o.detail = os.str();
  return o;
}

struct Criterion {
  int number;
  std::string title;
  double seconds_limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "enumeration counts 2, 7, 34, 209, 1546", 1.0,
       [] {
         Outcome o;
         std::vector<std::size_t> expected{2, 7, 34, 209, 1546};
         for (Point n = 1; n <= 5; ++n) {
           std::size_t got = enumerate_window(window(n)).size();
           o.detail += std::to_string(got) + " ";
           o.ok = o.ok && got == expected[static_cast<std::size_t>(n - 1)];
         }
         return o;
       }},
      {2, "associativity and inverse axioms at |W|=3", 30.0,
       [] {
         return require(verify(Suite::core, window(3)),
                        {"core.associativity", "core.inverse_axioms"});
       }},
      {3, "Green characterizations agree with solver divisibility at |W|=3",
       60.0,
       [] {
         return require(verify(Suite::green, window(3)),
                        {"green.R_definitional", "green.L_definitional",
                         "green.H_is_R_and_L", "green.J_order_brute_force",
                         "green.R_equivalence", "green.L_equivalence",
                         "green.H_equivalence", "green.D_equivalence"},
                        34 * 34);
       }},
      {4, "d_witness and j_factor on all D-related pairs at |W|=4", 120.0,
       [] {
         return require(verify(Suite::green, window(4)),
                        {"green.d_witness", "green.j_factor"}, 209 * 209);
       }},
      {5, "congruence compatibility over all triples at |W|=3", 120.0,
       [] {
         return require(verify(Suite::congruence, window(3)),
                        {"congruence.compatibility", "congruence.equivalence"},
                        34 * 34 * 34);
       }},
      {6, "chain order, principal minimality and labels at |W|=3", 60.0,
       [] {
         return require(verify(Suite::congruence, window(3)),
                        {"congruence.chain", "congruence.principal",
                         "congruence.labels"},
                        34 * 34);
       }},
      {7, "collapse lemmas for every chain member at |W|=3", 60.0,
       [] {
         return require(verify(Suite::congruence, window(3)),
                        {"congruence.h_pair_collapses_above",
                         "congruence.non_h_pair_collapses",
                         "congruence.idempotent_pair_collapses",
                         "congruence.no_collapse_below_level",
                         "congruence.sign"});
       }},
      {8, "solvers equal brute-force fibers at |W|=3", 60.0,
       [] {
         return require(verify(Suite::solver, window(3)),
                        {"solver.soundness", "solver.left_complete",
                         "solver.right_complete", "solver.fiber_count"},
                        34 * 34);
       }},
      {9, "semilattice isomorphism and f_solver at |W|=4", 60.0,
       [] {
         Report r = verify(Suite::semilattice, window(4));
         Outcome o = require(r, {"semilattice.isomorphism",
                                 "semilattice.join_monoid",
                                 "semilattice.from_idempotent"});
         Outcome f = require(r, {"semilattice.f_solver"}, 16 * 16);
         return Outcome{o.ok && f.ok, o.detail + f.detail};
       }},
      {10, "topology witnesses and disjointness at |W|=3", 120.0,
       [] {
         Report r = verify(Suite::topology, window(3));
         Outcome wit = require(
             r, {"topology.continuity.F", "topology.continuity.WF",
                 "topology.inversion.F", "topology.inversion.WF"},
             1000);
         Outcome rest = require(
             r, {"topology.separate.F", "topology.separate.WF",
                 "topology.disjoint.F", "topology.disjoint.WF",
                 "topology.member.F", "topology.member.WF"});
         return Outcome{wit.ok && rest.ok, wit.detail + rest.detail};
       }},
      {11, "verify --window 3 --suite all exits 0", 300.0,
       [] {
         std::ostringstream out;
         std::ostringstream err;
         int code = run_cli({"verify", "--window", "3", "--suite", "all"}, out,
                            err);
         std::string text = out.str();
         auto last = text.find_last_of('\n', text.size() - 2);
         return Outcome{code == 0, "exit " + std::to_string(code) + "; " +
                                       text.substr(last + 1, text.size() -
                                                                 last - 2)};
       }},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    bool in_time = secs < c.seconds_limit;
    bool ok = o.ok && in_time;
    failures += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s  (%.2fs, limit %.0fs%s)\n    %s\n",
                c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                c.seconds_limit, in_time ? "" : ", too slow",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
