// Basic open sets checked against their window members.
//
// Neighbourhoods are infinite, so every sweep quantifies over the members
// that lie in an enumerated window. Constraints range over all subsets of
// dom(center) inside that window.

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "iinf/error.hpp"
#include "iinf/topology.hpp"
#include "oracle_detail.hpp"

namespace iinf::detail {

namespace {

using Bits = std::vector<std::uint64_t>;

bool any_common(Bits const& x, Bits const& y) {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if ((x[w] & y[w]) != 0) {
      return true;
    }
  }
  return false;
}

std::optional<std::size_t> first_common(Bits const& x, Bits const& y) {
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (std::uint64_t m = x[w] & y[w]; m != 0) {
      return w * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
    }
  }
  return std::nullopt;
}

// Every neighbourhood of one flavor with center and constraint in the
// window, with lazily computed member sets.
class NbhdSpace {
 public:
  NbhdSpace(Universe const& u, Flavor flavor) : _u(u), _flavor(flavor) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (auto& f : subsets(u.window().minus(u[i].holes()))) {
        _items.emplace_back(i, std::move(f));
      }
    }
    _members.resize(_items.size());
  }

  std::size_t size() const noexcept { return _items.size(); }
  Nbhd at(std::size_t k) const {
    return Nbhd(_flavor, _u[_items[k].first], _items[k].second);
  }

  Bits const& members(std::size_t k) {
    if (_members[k].empty()) {
      _members[k] = member_bits(_u, at(k));
    }
    return _members[k];
  }

  static Bits member_bits(Universe const& u, Nbhd const& n) {
    Bits out((u.size() + 63) / 64 + 1, 0);  // never empty, marks "computed"
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (member(n, u[i])) {
        out[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    return out;
  }

 private:
  Universe const& _u;
  Flavor _flavor;
  std::vector<std::pair<std::size_t, FinSet>> _items;
  std::vector<Bits> _members;
};

bool test(Bits const& b, std::size_t i) {
  return (b[i / 64] >> (i % 64) & 1U) != 0;
}

// Membership recomputed from the set-builder definition, with domain and
// range read off pointwise over `probe`, outside of which every window
// element is the identity.
bool naive_member(Nbhd const& n, PartialSelfmap const& b, FinSet const& probe) {
  auto dom = [&](PartialSelfmap const& x) {
    std::vector<Point> out;
    for (Point p : probe) {
      if (x.apply(p)) {
        out.push_back(p);
      }
    }
    return FinSet(std::move(out));
  };
  auto ran = [&](PartialSelfmap const& x) {
    std::vector<Point> out;
    for (Point p : probe) {
      if (auto y = x.apply(p)) {
        out.push_back(*y);
      }
    }
    return FinSet(std::move(out));
  };
  PartialSelfmap const& c = n.center();
  bool shape = n.flavor() == Flavor::F
                   ? dom(b) == dom(c) && ran(b) == ran(c)
                   : dom(b).is_subset_of(dom(c));
  if (!shape) {
    return false;
  }
  for (Point x : n.constraint()) {
    if (b.apply(x) != c.apply(x)) {
      return false;
    }
  }
  return true;
}

// Indices 0..n-1, or `keep` of them drawn at random.
std::vector<std::size_t> pick(std::size_t n, bool sampled, std::size_t keep,
                              std::mt19937_64& rng) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), 0);
  if (sampled && keep < n) {
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(keep);
  }
  return out;
}

void check_flavor(Checker& c, Flavor flavor) {
  auto const& u = c.universe();
  std::string const tag(to_string(flavor));
  NbhdSpace space(u, flavor);
  FinSet const& w = u.window();
  Point fresh = w.empty() ? 0 : w.back() + 1;
  FinSet probe = w.unite(FinSet{fresh});
  bool sampled = c.sample_pairs();
  std::size_t samples = c.options().samples;

  {
    PropertyResult& r =
        c.open("topology.member." + tag,
               "member agrees with the set-builder definition recomputed "
               "pointwise, and every neighbourhood contains its center");
    r.sampled = sampled;
    auto visit = [&](std::size_t k, std::size_t i) {
      ++r.checked;
      Nbhd n = space.at(k);
      if (member(n, u[i]) != naive_member(n, u[i], probe)) {
        Checker::fail(r, to_string(n) + ", b=" + format(u[i]));
      } else if (!member(n, n.center())) {
        Checker::fail(r, to_string(n) + " misses its center");
      }
    };
    if (sampled) {
      for (std::size_t s = 0; s < samples && r.passed; ++s) {
        visit(std::uniform_int_distribution<std::size_t>(
                  0, space.size() - 1)(c.rng()),
              c.draw());
      }
    } else {
      for (std::size_t k = 0; k < space.size() && r.passed; ++k) {
        for (std::size_t i = 0; i < u.size() && r.passed; ++i) {
          visit(k, i);
        }
      }
    }
  }

  // Disjointness against window evidence, and the basis axiom on every
  // intersecting pair. Both results are filled locally since they are
  // updated together.
  {
    PropertyResult dis;
    dis.id = "topology.disjoint." + tag;
    dis.claim = "disjoint neighbourhoods share no window member; otherwise "
                "the constructed common member lies in both";
    PropertyResult basis;
    basis.id = "topology.refine." + tag;
    basis.claim = "for intersecting neighbourhoods and a common window "
                  "member m, U_m(refined constraint) lies in both";
    dis.sampled = basis.sampled = sampled;
    auto visit = [&](std::size_t k1, std::size_t k2) {
      Nbhd n1 = space.at(k1);
      Nbhd n2 = space.at(k2);
      Bits const& b1 = space.members(k1);
      Bits const& b2 = space.members(k2);
      ++dis.checked;
      auto witness = common_member(n1, n2);
      if (disjoint(n1, n2) != !witness.has_value()) {
        Checker::fail(dis, to_string(n1) + ", " + to_string(n2) +
                               ": disjoint disagrees with common_member");
        return;
      }
      if (!witness) {
        if (any_common(b1, b2)) {
          Checker::fail(dis, to_string(n1) + ", " + to_string(n2) +
                                 ": reported disjoint but share a member");
        }
        return;
      }
      if (!member(n1, *witness) || !member(n2, *witness)) {
        Checker::fail(dis, to_string(n1) + ", " + to_string(n2) +
                               ": witness " + format(*witness) +
                               " is not in both");
        return;
      }
      auto m = first_common(b1, b2);
      if (!m) {
        return;
      }
      ++basis.checked;
      FinSet g = refine(n1, n2);
      try {
        Nbhd inner(flavor, u[*m], g);
        Bits bi = NbhdSpace::member_bits(u, inner);
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (test(bi, i) && !(test(b1, i) && test(b2, i))) {
            Checker::fail(basis, to_string(inner) + " has " + format(u[i]) +
                                     " outside " + to_string(n1) + " or " +
                                     to_string(n2));
            return;
          }
        }
      } catch (Error const& e) {
        Checker::fail(basis, to_string(n1) + ", " + to_string(n2) + ": " +
                                 e.what());
      }
    };
    if (sampled) {
      std::uniform_int_distribution<std::size_t> any(0, space.size() - 1);
      for (std::size_t s = 0; s < samples && dis.passed && basis.passed; ++s) {
        visit(any(c.rng()), any(c.rng()));
      }
    } else {
      for (std::size_t k1 = 0; k1 < space.size(); ++k1) {
        for (std::size_t k2 = 0;
             k2 < space.size() && dis.passed && basis.passed; ++k2) {
          visit(k1, k2);
        }
      }
    }
    c.record(std::move(dis));
    c.record(std::move(basis));
  }

  c.pairs("topology.separate." + tag,
          "separate yields valid constraints whose neighbourhoods are "
          "disjoint and share no window member",
          [&](std::size_t i, std::size_t j) -> Verdict {
            if (i == j) {
              return std::nullopt;
            }
            try {
              auto [f1, f2] = separate(u[i], u[j], flavor);
              Nbhd n1(flavor, u[i], f1);
              Nbhd n2(flavor, u[j], f2);
              if (!disjoint(n1, n2)) {
                return to_string(n1) + " meets " + to_string(n2);
              }
              return verdict(!any_common(NbhdSpace::member_bits(u, n1),
                                         NbhdSpace::member_bits(u, n2)),
                             to_string(n1) + " shares a member with " +
                                 to_string(n2));
            } catch (Error const& e) {
              return std::string(e.what());
            }
          });

  {
    // Products of members of the witness neighbourhoods land in the target
    // neighbourhood of the product.
    PropertyResult r;
    r.id = "topology.continuity." + tag;
    r.claim = "for every a, b and constraint f in dom(ab), members of "
              "U_a(f1) times members of U_b(f2) lie in U_ab(f)";
    bool sample = c.sample_triples();
    r.sampled = sample;
    bool table = u.size() <= 2000;
    auto product = [&](std::size_t i, std::size_t j) {
      return table ? u.product(i, j) : *u.index_of(compose(u[i], u[j]));
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (sample) {
      for (std::size_t s = 0; s < samples / 10; ++s) {
        pairs.emplace_back(c.draw(), c.draw());
      }
    } else {
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < u.size(); ++j) {
          pairs.emplace_back(i, j);
        }
      }
    }
    for (auto [i, j] : pairs) {
      PartialSelfmap ab = compose(u[i], u[j]);
      for (auto const& f : subsets(w.minus(ab.holes()))) {
        if (!r.passed) {
          break;
        }
        ++r.checked;
        try {
          auto [f1, f2] = continuity_witness(u[i], u[j], f);
          Nbhd n1(flavor, u[i], f1);
          Nbhd n2(flavor, u[j], f2);
          Nbhd target(flavor, ab, f);
          Bits b1 = NbhdSpace::member_bits(u, n1);
          Bits b2 = NbhdSpace::member_bits(u, n2);
          Bits bt = NbhdSpace::member_bits(u, target);
          for (std::size_t x = 0; x < u.size() && r.passed; ++x) {
            if (!test(b1, x)) {
              continue;
            }
            for (std::size_t y = 0; y < u.size(); ++y) {
              if (test(b2, y) && !test(bt, product(x, y))) {
                Checker::fail(r, "a=" + format(u[i]) + ", b=" + format(u[j]) +
                                     ", f=" + to_string(f) + ": " +
                                     format(u[x]) + " * " + format(u[y]) +
                                     " leaves " + to_string(target));
                break;
              }
            }
          }
        } catch (Error const& e) {
          Checker::fail(r, "a=" + format(u[i]) + ", b=" + format(u[j]) +
                               ", f=" + to_string(f) + ": " + e.what());
        }
      }
      if (!r.passed) {
        break;
      }
    }
    c.record(std::move(r));
  }

  {
    // Inversion is swept over the window plus one fresh point so that
    // constraints and members can reach outside the original window.
    FinSet wide = w.unite(FinSet{fresh});
    std::optional<Universe> grown;
    if (wide.size() <= c.options().window_bound) {
      grown.emplace(wide, c.options().window_bound);
    }
    Universe const& v = grown ? *grown : u;
    PropertyResult r;
    r.id = "topology.inversion." + tag;
    r.claim = "inverses of members of U_g(f) lie in U_{g^-1}(f g)";
    std::vector<std::pair<std::size_t, FinSet>> configs;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (auto& f : subsets(v.window().minus(v[i].holes()))) {
        configs.emplace_back(i, std::move(f));
      }
    }
    r.sampled = v.size() > 300;
    for (std::size_t k : pick(configs.size(), r.sampled, 2000, c.rng())) {
      auto const& [i, f] = configs[k];
      ++r.checked;
      try {
        Nbhd source(flavor, v[i], f);
        Nbhd target(flavor, invert(v[i]), inversion_witness(v[i], f));
        for (std::size_t x = 0; x < v.size(); ++x) {
          if (member(source, v[x]) && !member(target, v[v.inverse(x)])) {
            Checker::fail(r, "g=" + format(v[i]) + ", f=" + to_string(f) +
                                 ": member " + format(v[x]) +
                                 " has inverse outside " + to_string(target));
            break;
          }
        }
      } catch (Error const& e) {
        Checker::fail(r, "g=" + format(v[i]) + ", f=" + to_string(f) + ": " +
                             e.what());
      }
      if (!r.passed) {
        break;
      }
    }
    c.record(std::move(r));
  }
}

}  // namespace

void check_topology(Checker& c) {
  check_flavor(c, Flavor::F);
  check_flavor(c, Flavor::WF);
}

}  // namespace iinf::detail
