#include "iinf/green.hpp"

#include <vector>

#include "iinf/error.hpp"

namespace iinf {

namespace {

void require_idempotent(PartialSelfmap const& e, char const* role) {
  if (!e.is_idempotent()) {
    throw Error(ErrorKind::NotIdempotent,
                std::string(role) + " " + format(e) + " is not idempotent");
  }
}

void require_same_corank(PartialSelfmap const& a, PartialSelfmap const& b) {
  if (a.corank() != b.corank()) {
    throw Error(ErrorKind::NotDRelated,
                format(a) + " has corank " + std::to_string(a.corank()) +
                    ", " + format(b) + " has corank " +
                    std::to_string(b.corank()));
  }
}

// Pairs the i-th smallest point of `from` with the i-th smallest of `to`.
std::vector<PointPair> sorted_matching(FinSet const& from, FinSet const& to) {
  std::vector<PointPair> pairs;
  pairs.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    pairs.emplace_back(from[i], to[i]);
  }
  return pairs;
}

}  // namespace

bool green_R(PartialSelfmap const& a, PartialSelfmap const& b) {
  return a.holes() == b.holes();
}

bool green_L(PartialSelfmap const& a, PartialSelfmap const& b) {
  return a.ran_complement() == b.ran_complement();
}

bool green_H(PartialSelfmap const& a, PartialSelfmap const& b) {
  return green_R(a, b) && green_L(a, b);
}

bool green_D(PartialSelfmap const& a, PartialSelfmap const& b) {
  return a.corank() == b.corank();
}

bool green_J(PartialSelfmap const& a, PartialSelfmap const& b) {
  return green_D(a, b);
}

bool nat_leq(PartialSelfmap const& e, PartialSelfmap const& i) {
  require_idempotent(e, "left operand");
  require_idempotent(i, "right operand");
  return i.holes().is_subset_of(e.holes());
}

bool ideal_member(PartialSelfmap const& a, std::size_t n) {
  return a.corank() >= n;
}

PartialSelfmap d_witness(PartialSelfmap const& a, PartialSelfmap const& b) {
  require_same_corank(a, b);
  // Both maps fix everything outside `rest`; the witness is the identity
  // there too.
  FinSet rest = a.support().unite(b.support());
  FinSet dom_part = rest.minus(b.holes());
  FinSet ran_part = rest.minus(a.ran_complement());
  return PartialSelfmap::make(sorted_matching(dom_part, ran_part),
                              b.holes());
}

std::pair<PartialSelfmap, PartialSelfmap> j_factor(PartialSelfmap const& a,
                                                   PartialSelfmap const& b) {
  require_same_corank(a, b);
  FinSet rest = a.support().unite(b.support());
  FinSet a_dom = rest.minus(a.holes());
  FinSet b_dom = rest.minus(b.holes());

  std::vector<PointPair> left = sorted_matching(a_dom, b_dom);
  std::vector<PointPair> right;
  right.reserve(left.size());
  std::vector<Point> right_dom;
  for (auto const& [x, y] : left) {
    Point bx = *b.apply(y);
    right.emplace_back(bx, *a.apply(x));
    right_dom.push_back(bx);
  }
  PartialSelfmap g = PartialSelfmap::make(std::move(left), a.holes());
  PartialSelfmap d = PartialSelfmap::make(
      std::move(right), rest.minus(FinSet(std::move(right_dom))));
  return {std::move(g), std::move(d)};
}

bool local_member(PartialSelfmap const& a, PartialSelfmap const& e) {
  require_idempotent(e, "local idempotent");
  return e.holes().is_subset_of(a.holes()) &&
         e.holes().is_subset_of(a.ran_complement());
}

PartialSelfmap rename(PartialSelfmap const& a, PartialSelfmap const& p) {
  if (p.corank() != 0) {
    throw Error(ErrorKind::NotBijection,
                format(p) + " is not a total bijection");
  }
  return compose(compose(invert(p), a), p);
}

}  // namespace iinf
