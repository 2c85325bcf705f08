#include <algorithm>

#include "iinf/error.hpp"
#include "iinf/green.hpp"
#include "iinf/semilattice.hpp"
#include "oracle_detail.hpp"

namespace iinf::detail {

void check_semilattice(Checker& c) {
  auto const& u = c.universe();
  std::vector<FinSet> const sets = subsets(u.window());

  {
    PropertyResult& r = c.open(
        "semilattice.join_monoid",
        "join is associative, commutative and idempotent with identity {}");
    for (auto const& a : sets) {
      for (auto const& b : sets) {
        for (auto const& x : sets) {
          ++r.checked;
          if (join(join(a, b), x) != join(a, join(b, x)) ||
              join(a, b) != join(b, a) || join(a, a) != a ||
              join(a, FinSet{}) != a) {
            Checker::fail(r, to_string(a) + ", " + to_string(b) + ", " +
                                 to_string(x));
          }
        }
      }
    }
  }

  {
    PropertyResult& r = c.open(
        "semilattice.isomorphism",
        "to_idempotent and from_idempotent are inverse and turn join into "
        "the product of idempotents");
    for (auto const& a : sets) {
      for (auto const& b : sets) {
        ++r.checked;
        if (to_idempotent(join(a, b)) !=
            compose(to_idempotent(a), to_idempotent(b))) {
          Checker::fail(r, to_string(a) + ", " + to_string(b));
        }
      }
      if (from_idempotent(to_idempotent(a)) != a) {
        Checker::fail(r, "round trip of " + to_string(a));
      }
    }
  }

  c.each("semilattice.from_idempotent",
         "from_idempotent inverts to_idempotent on idempotents and throws "
         "NotIdempotent elsewhere",
         [&](std::size_t i) -> Verdict {
           auto const& e = u[i];
           if (!e.is_idempotent()) {
             try {
               from_idempotent(e);
               return "accepted a non-idempotent";
             } catch (Error const& err) {
               return verdict(err.kind() == ErrorKind::NotIdempotent);
             }
           }
           return verdict(to_idempotent(from_idempotent(e)) == e);
         });

  {
    PropertyResult& r = c.open(
        "semilattice.f_solver",
        "f_solver(a, b) equals the subsets x of the window with a u x = b");
    for (auto const& a : sets) {
      for (auto const& b : sets) {
        ++r.checked;
        std::vector<FinSet> brute;
        for (auto const& x : sets) {
          if (join(a, x) == b) {
            brute.push_back(x);
          }
        }
        if (f_solver(a, b) != brute) {
          Checker::fail(r, to_string(a) + ", " + to_string(b));
        }
      }
    }
  }

  std::vector<PartialSelfmap> idempotents;
  for (auto const& e : u.elems()) {
    if (e.is_idempotent()) {
      idempotents.push_back(e);
    }
  }

  c.each("semilattice.maximal_chain",
         "maximal_chain_up runs from e to id, strictly increasing, with no "
         "idempotent strictly between neighbours",
         [&](std::size_t i) -> Verdict {
           auto const& e = u[i];
           if (!e.is_idempotent()) {
             return std::nullopt;
           }
           auto chain = maximal_chain_up(e);
           if (chain.size() != e.corank() + 1 || chain.front() != e ||
               !chain.back().is_identity()) {
             return std::string("wrong ends or length");
           }
           for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
             auto const& lo = chain[k];
             auto const& hi = chain[k + 1];
             if (!nat_leq(lo, hi) || lo == hi ||
                 lo.corank() != hi.corank() + 1) {
               return "step " + std::to_string(k);
             }
             for (auto const& g : idempotents) {
               if (g != lo && g != hi && nat_leq(lo, g) && nat_leq(g, hi)) {
                 return format(g) + " fits at step " + std::to_string(k);
               }
             }
           }
           return std::nullopt;
         });

  c.each("semilattice.up_and_down_sets",
         "up_set(e) lists the 2^corank idempotents above e and "
         "down_set_in_window(e, W) those below e with holes in W",
         [&](std::size_t i) -> Verdict {
           auto const& e = u[i];
           if (!e.is_idempotent()) {
             return std::nullopt;
           }
           std::vector<PartialSelfmap> above;
           std::vector<PartialSelfmap> below;
           for (auto const& g : idempotents) {
             if (nat_leq(e, g)) {
               above.push_back(g);
             }
             if (nat_leq(g, e)) {
               below.push_back(g);
             }
           }
           auto up = up_set(e);
           auto down = down_set_in_window(e, u.window());
           std::sort(up.begin(), up.end());
           std::sort(down.begin(), down.end());
           if (up.size() != std::size_t{1} << e.corank() || up != above) {
             return std::string("up_set");
           }
           return verdict(down == below, "down_set_in_window");
         });
}

}  // namespace iinf::detail
