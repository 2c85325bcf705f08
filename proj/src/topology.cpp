#include "iinf/topology.hpp"

#include <map>
#include <vector>

#include "iinf/error.hpp"

namespace iinf {

namespace {

void require_in_domain(FinSet const& f, PartialSelfmap const& a,
                       std::string const& what) {
  if (!f.intersect(a.holes()).empty()) {
    throw Error(ErrorKind::ConstraintOutsideDomain,
                to_string(f) + " is not inside dom " + what + " = dom " +
                    format(a));
  }
}

FinSet image(PartialSelfmap const& a, FinSet const& f) {
  std::vector<Point> out;
  out.reserve(f.size());
  for (Point x : f) {
    out.push_back(*a.apply(x));
  }
  return FinSet(std::move(out));
}

// The partial assignment both neighbourhoods force on their constraints, or
// nullopt if the two demands clash or send two points to one value.
std::optional<std::map<Point, Point>> forced_assignment(Nbhd const& n1,
                                                        Nbhd const& n2) {
  std::map<Point, Point> forced;
  for (Nbhd const* n : {&n1, &n2}) {
    for (Point x : n->constraint()) {
      Point y = *n->center().apply(x);
      auto [it, inserted] = forced.emplace(x, y);
      if (!inserted && it->second != y) {
        return std::nullopt;
      }
    }
  }
  std::vector<Point> values;
  for (auto const& [x, y] : forced) {
    values.push_back(y);
  }
  if (FinSet(values).size() != values.size()) {
    return std::nullopt;
  }
  return forced;
}

}  // namespace

std::string_view to_string(Flavor f) noexcept {
  return f == Flavor::F ? "F" : "WF";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "F") {
    return Flavor::F;
  }
  if (text == "WF") {
    return Flavor::WF;
  }
  throw Error(ErrorKind::SyntaxError,
              "unknown flavor \"" + std::string(text) + "\" (F or WF)");
}

Nbhd::Nbhd(Flavor flavor, PartialSelfmap center, FinSet constraint)
    : _flavor(flavor),
      _center(std::move(center)),
      _constraint(std::move(constraint)) {
  require_in_domain(_constraint, _center, "center");
}

std::string to_string(Nbhd const& n) {
  return std::string(to_string(n.flavor())) + "(" + format(n.center()) +
         "; " + to_string(n.constraint()) + ")";
}

bool member(Nbhd const& n, PartialSelfmap const& b) {
  PartialSelfmap const& c = n.center();
  if (n.flavor() == Flavor::F) {
    if (b.holes() != c.holes() || b.ran_complement() != c.ran_complement()) {
      return false;
    }
  } else if (!c.holes().is_subset_of(b.holes())) {
    return false;
  }
  for (Point x : n.constraint()) {
    if (b.apply(x) != c.apply(x)) {
      return false;
    }
  }
  return true;
}

std::optional<PartialSelfmap> common_member(Nbhd const& n1, Nbhd const& n2) {
  if (n1.flavor() != n2.flavor()) {
    throw Error(ErrorKind::FlavorMismatch,
                to_string(n1) + " vs " + to_string(n2));
  }
  PartialSelfmap const& c1 = n1.center();
  PartialSelfmap const& c2 = n2.center();
  FinSet constrained = n1.constraint().unite(n2.constraint());

  if (n1.flavor() == Flavor::F) {
    if (c1.holes() != c2.holes() ||
        c1.ran_complement() != c2.ran_complement()) {
      return std::nullopt;
    }
  } else if (!constrained.intersect(c1.holes().unite(c2.holes())).empty()) {
    return std::nullopt;
  }
  auto forced = forced_assignment(n1, n2);
  if (!forced) {
    return std::nullopt;
  }

  std::vector<PointPair> pairs(forced->begin(), forced->end());
  std::vector<Point> values;
  for (auto const& [x, y] : *forced) {
    values.push_back(y);
  }
  FinSet forced_values(std::move(values));

  if (n1.flavor() == Flavor::WF) {
    // Identity off the constrained points, with every point that would
    // collide with a forced value (or lies outside either domain) dropped
    // from the domain.
    FinSet holes =
        forced_values.unite(c1.holes()).unite(c2.holes()).minus(constrained);
    return PartialSelfmap::make(std::move(pairs), std::move(holes));
  }

  // F flavor: complete the forced values to a bijection dom -> ran that is
  // the identity off a finite set. The leftover pieces have equal size
  // because |holes| = |ran complement|.
  FinSet const& holes = c1.holes();
  FinSet ran_c = c1.ran_complement();
  FinSet scope = holes.unite(ran_c).unite(constrained).unite(forced_values);
  FinSet free_dom = scope.minus(holes).minus(constrained);
  FinSet free_ran = scope.minus(ran_c).minus(forced_values);
  for (std::size_t i = 0; i < free_dom.size(); ++i) {
    pairs.emplace_back(free_dom[i], free_ran[i]);
  }
  return PartialSelfmap::make(std::move(pairs), holes);
}

bool disjoint(Nbhd const& n1, Nbhd const& n2) {
  return !common_member(n1, n2).has_value();
}

std::pair<FinSet, FinSet> separate(PartialSelfmap const& a,
                                   PartialSelfmap const& b, Flavor flavor) {
  if (a == b) {
    throw Error(ErrorKind::EqualElements, format(a));
  }
  auto first_difference = [&]() {
    for (Point x : a.support().unite(b.support()).minus(a.holes())) {
      if (a.apply(x) != b.apply(x)) {
        return x;
      }
    }
    // Equal domains and equal values everywhere would mean a == b.
    throw Error(ErrorKind::EqualElements, format(a));
  };

  if (flavor == Flavor::F) {
    if (a.holes() != b.holes() || a.ran_complement() != b.ran_complement()) {
      return {FinSet{}, FinSet{}};
    }
    Point x = first_difference();
    return {FinSet{x}, FinSet{x}};
  }

  if (a.holes() == b.holes()) {
    Point x = first_difference();
    return {FinSet{x}, FinSet{x}};
  }
  FinSet only_in_b = a.holes().minus(b.holes());  // dom b \ dom a
  FinSet only_in_a = b.holes().minus(a.holes());  // dom a \ dom b
  if (only_in_a.empty()) {
    // dom a strictly inside dom b
    return {FinSet{a.holes().first_absent()}, FinSet{only_in_b.front()}};
  }
  if (only_in_b.empty()) {
    return {FinSet{only_in_a.front()}, FinSet{b.holes().first_absent()}};
  }
  return {FinSet{only_in_a.front()}, FinSet{only_in_b.front()}};
}

std::pair<FinSet, FinSet> continuity_witness(PartialSelfmap const& a,
                                             PartialSelfmap const& b,
                                             FinSet const& f) {
  PartialSelfmap ab = compose(a, b);
  require_in_domain(f, ab, "(a*b)");
  PartialSelfmap a_inv = invert(a);
  std::vector<Point> into_holes;
  for (Point h : b.holes()) {
    if (auto x = a_inv.apply(h)) {
      into_holes.push_back(*x);
    }
  }
  FinSet left = f.unite(FinSet(std::move(into_holes)));
  FinSet right = image(a, f).unite(a.ran_complement().minus(b.holes()));
  return {std::move(left), std::move(right)};
}

FinSet inversion_witness(PartialSelfmap const& g, FinSet const& f) {
  require_in_domain(f, g, "g");
  return image(g, f);
}

FinSet refine(Nbhd const& n1, Nbhd const& n2) {
  return n1.constraint().unite(n2.constraint());
}

}  // namespace iinf
