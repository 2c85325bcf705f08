#ifndef IINF_SELFMAP_HPP
#define IINF_SELFMAP_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iinf/point_set.hpp"

namespace iinf {

using PointPair = std::pair<Point, Point>;

// An injective partial selfmap of the naturals that is the identity almost
// everywhere. Stored canonically as
//
//   moved  -- pairs (x, y) with x != y, sorted by source
//   holes  -- the finite complement of the domain
//
// Every point outside sources(moved) and holes is fixed. Because the
// representation is unique, equality is structural. Values are immutable.
class PartialSelfmap {
 public:
  // The identity.
  PartialSelfmap() = default;

  // Validating constructor: strips identity pairs and rejects data that
  // does not describe an injective almost-identity map.
  static PartialSelfmap make(std::vector<PointPair> pairs, FinSet holes);

  static PartialSelfmap identity() { return {}; }

  std::vector<PointPair> const& moved() const noexcept { return _moved; }
  FinSet const& holes() const noexcept { return _holes; }

  std::optional<Point> apply(Point x) const noexcept;
  bool in_domain(Point x) const noexcept { return !_holes.contains(x); }

  FinSet sources() const;
  FinSet targets() const;
  // (sources u holes) \ targets; the finite complement of the range.
  FinSet ran_complement() const;
  // sources u targets u holes; everything else is a fixed point.
  FinSet support() const;

  std::size_t corank() const noexcept { return _holes.size(); }
  bool is_identity() const noexcept { return _moved.empty() && _holes.empty(); }
  bool is_idempotent() const noexcept { return _moved.empty(); }
  // dom = ran
  bool is_permutation_of_domain() const;

  bool operator==(PartialSelfmap const&) const = default;
  // Arbitrary but fixed total order, for use as a map key.
  bool operator<(PartialSelfmap const& other) const;

 private:
  PartialSelfmap(std::vector<PointPair> moved, FinSet holes)
      : _moved(std::move(moved)), _holes(std::move(holes)) {}

  friend PartialSelfmap compose(PartialSelfmap const&, PartialSelfmap const&);
  friend PartialSelfmap invert(PartialSelfmap const&);

  std::vector<PointPair> _moved;
  FinSet _holes;
};

// Left-to-right composition: x(ab) = (xa)b.
PartialSelfmap compose(PartialSelfmap const& a, PartialSelfmap const& b);
PartialSelfmap invert(PartialSelfmap const& a);

inline PartialSelfmap operator*(PartialSelfmap const& a,
                                PartialSelfmap const& b) {
  return compose(a, b);
}

// Canonical text: "id", or "{2>3, 4>2, -3}" with moved pairs by source, then
// holes ascending.
std::string format(PartialSelfmap const& a);
std::ostream& operator<<(std::ostream& os, PartialSelfmap const& a);

// element := "id" | "{" [item ("," item)*] "}" ; item := nat ">" nat | "-" nat
PartialSelfmap parse(std::string_view text);

}  // namespace iinf

template <>
struct std::hash<iinf::PartialSelfmap> {
  std::size_t operator()(iinf::PartialSelfmap const& a) const noexcept;
};

#endif  // IINF_SELFMAP_HPP
