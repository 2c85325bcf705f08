#include <algorithm>
#include <set>

#include "iinf/congruence.hpp"
#include "iinf/error.hpp"
#include "iinf/green.hpp"
#include "oracle_detail.hpp"

namespace iinf::detail {

namespace {

// Parity of the permutation of the moved points, by counting inversions.
Parity inversion_parity(PartialSelfmap const& a) {
  std::vector<Point> image;
  for (auto const& [x, y] : a.moved()) {
    image.push_back(y);
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      inversions += image[i] > image[j] ? 1 : 0;
    }
  }
  return inversions % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace

void check_congruence(Checker& c) {
  auto const& u = c.universe();
  std::vector<CongruenceId> const family =
      congruence_family(u.window().size());

  c.each("congruence.sign",
         "sign agrees with the inversion count on domain permutations and "
         "throws NotPermutation otherwise",
         [&](std::size_t i) -> Verdict {
           auto const& a = u[i];
           if (!a.is_permutation_of_domain()) {
             try {
               sign(a);
               return "accepted a non-permutation";
             } catch (Error const& e) {
               return verdict(e.kind() == ErrorKind::NotPermutation);
             }
           }
           return verdict(sign(a) == inversion_parity(a));
         });

  c.triples("congruence.equivalence",
            "every chain member up to level |W| is reflexive, symmetric and "
            "transitive",
            [&](std::size_t i, std::size_t j, std::size_t k) -> Verdict {
              auto const& a = u[i];
              auto const& b = u[j];
              auto const& x = u[k];
              for (auto const& cg : family) {
                bool ab = cong_related(cg, a, b);
                if (!cong_related(cg, a, a) || ab != cong_related(cg, b, a) ||
                    (ab && cong_related(cg, b, x) && !cong_related(cg, a, x))) {
                  return to_string(cg);
                }
              }
              return std::nullopt;
            });

  c.triples("congruence.compatibility",
            "each chain member is a congruence: a ~ b implies xa ~ xb and "
            "ax ~ bx",
            [&](std::size_t i, std::size_t j, std::size_t k) -> Verdict {
              auto const& a = u[i];
              auto const& b = u[j];
              auto const& x = u[k];
              PartialSelfmap xa = compose(x, a);
              PartialSelfmap xb = compose(x, b);
              PartialSelfmap ax = compose(a, x);
              PartialSelfmap bx = compose(b, x);
              for (auto const& cg : family) {
                if (cong_related(cg, a, b) && !(cong_related(cg, xa, xb) &&
                                                cong_related(cg, ax, bx))) {
                  return to_string(cg);
                }
              }
              return std::nullopt;
            });

  c.pairs("congruence.labels",
          "class labels coincide exactly for related elements",
          [&](std::size_t i, std::size_t j) -> Verdict {
            for (auto const& cg : family) {
              if ((class_label(cg, u[i]) == class_label(cg, u[j])) !=
                  cong_related(cg, u[i], u[j])) {
                return to_string(cg) + ": " +
                       to_string(class_label(cg, u[i])) + " vs " +
                       to_string(class_label(cg, u[j]));
              }
            }
            return std::nullopt;
          });

  c.pairs("congruence.chain",
          "a finer chain member relates a subset of the pairs of a coarser "
          "one, matching cong_leq",
          [&](std::size_t i, std::size_t j) -> Verdict {
            for (auto const& coarse : family) {
              for (auto const& fine : family) {
                if (coarse.index() >= fine.index()) {
                  continue;
                }
                if (!cong_leq(fine, coarse) || cong_leq(coarse, fine)) {
                  return "cong_leq(" + to_string(fine) + ", " +
                         to_string(coarse) + ")";
                }
                if (cong_related(fine, u[i], u[j]) &&
                    !cong_related(coarse, u[i], u[j])) {
                  return to_string(fine) + " not inside " + to_string(coarse);
                }
              }
            }
            return std::nullopt;
          });

  c.pairs("congruence.principal",
          "the principal congruence relates the pair and no finer chain "
          "member does",
          [&](std::size_t i, std::size_t j) -> Verdict {
            CongruenceId p = principal_congruence(u[i], u[j]);
            if (!cong_related(p, u[i], u[j])) {
              return to_string(p) + " misses the pair";
            }
            for (auto const& cg : family) {
              if (cg.index() > p.index() && cong_related(cg, u[i], u[j])) {
                return to_string(cg) + " is finer than " + to_string(p) +
                       " and relates the pair";
              }
            }
            return std::nullopt;
          });

  {
    // Collapse above a nontrivial H-pair. The conclusion depends only on the
    // chain member and the corank of the pair, so it is checked once per
    // such (member, corank).
    std::set<std::pair<std::size_t, std::size_t>> done;
    c.pairs("congruence.h_pair_collapses_above",
            "if distinct H-related a, b are related, any two elements of "
            "corank > corank a are related",
            [&](std::size_t i, std::size_t j) -> Verdict {
              if (i == j || !green_H(u[i], u[j])) {
                return std::nullopt;
              }
              std::size_t level = u[i].corank();
              for (std::size_t f = 0; f < family.size(); ++f) {
                auto const& cg = family[f];
                if (!cong_related(cg, u[i], u[j]) ||
                    !done.emplace(f, level).second) {
                  continue;
                }
                for (std::size_t x = 0; x < u.size(); ++x) {
                  for (std::size_t y = 0; y < u.size(); ++y) {
                    if (u[x].corank() > level && u[y].corank() > level &&
                        !cong_related(cg, u[x], u[y])) {
                      return to_string(cg) + ", x=" + format(u[x]) +
                             ", y=" + format(u[y]);
                    }
                  }
                }
              }
              return std::nullopt;
            });
  }

  {
    std::set<std::pair<std::size_t, std::size_t>> done;
    c.pairs("congruence.non_h_pair_collapses",
            "if non-H-related a, b are related, every element of corank >= "
            "min(corank a, corank b) is related to a",
            [&](std::size_t i, std::size_t j) -> Verdict {
              if (green_H(u[i], u[j])) {
                return std::nullopt;
              }
              std::size_t floor = std::min(u[i].corank(), u[j].corank());
              for (std::size_t f = 0; f < family.size(); ++f) {
                auto const& cg = family[f];
                if (!cong_related(cg, u[i], u[j]) ||
                    !done.emplace(f, i * family.size() + floor).second) {
                  continue;
                }
                for (std::size_t k = 0; k < u.size(); ++k) {
                  if (u[k].corank() >= floor && !cong_related(cg, u[k], u[i])) {
                    return to_string(cg) + ", x=" + format(u[k]);
                  }
                }
              }
              return std::nullopt;
            });
  }

  {
    std::set<std::pair<std::size_t, std::size_t>> done;
    c.pairs("congruence.idempotent_pair_collapses",
            "if distinct idempotents e, f are related, every element of "
            "corank >= min(corank e, corank f) is related to e",
            [&](std::size_t i, std::size_t j) -> Verdict {
              auto const& e = u[i];
              auto const& f = u[j];
              if (i == j || !e.is_idempotent() || !f.is_idempotent()) {
                return std::nullopt;
              }
              std::size_t floor = std::min(e.corank(), f.corank());
              for (std::size_t m = 0; m < family.size(); ++m) {
                auto const& cg = family[m];
                if (!cong_related(cg, e, f) || !done.emplace(m, i).second) {
                  continue;
                }
                for (std::size_t k = 0; k < u.size(); ++k) {
                  if (u[k].corank() >= floor && !cong_related(cg, u[k], e)) {
                    return to_string(cg) + ", x=" + format(u[k]);
                  }
                }
              }
              return std::nullopt;
            });
  }

  c.pairs("congruence.no_collapse_below_level",
          "distinct elements related by a chain member of level n both have "
          "corank >= n",
          [&](std::size_t i, std::size_t j) -> Verdict {
            if (i == j) {
              return std::nullopt;
            }
            for (auto const& cg : family) {
              if (cong_related(cg, u[i], u[j]) &&
                  (cg.kind() == CongruenceId::Kind::Delta ||
                   std::min(u[i].corank(), u[j].corank()) < cg.level())) {
                return to_string(cg);
              }
            }
            return std::nullopt;
          });
}

}  // namespace iinf::detail
