#ifndef IINF_POINT_SET_HPP
#define IINF_POINT_SET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace iinf {

// A point of the countable universe, modelled as a natural number.
using Point = std::uint64_t;

// Finite set of points kept in strictly increasing order. This is both the
// hole/range-complement bookkeeping type and the element type of the free
// semilattice of finite subsets.
class FinSet {
 public:
  using const_iterator = std::vector<Point>::const_iterator;

  FinSet() = default;
  FinSet(std::initializer_list<Point> points);
  explicit FinSet(std::vector<Point> points);

  static FinSet range(Point first, Point last);  // [first, last)

  bool empty() const noexcept { return _elems.empty(); }
  std::size_t size() const noexcept { return _elems.size(); }
  const_iterator begin() const noexcept { return _elems.begin(); }
  const_iterator end() const noexcept { return _elems.end(); }
  Point front() const { return _elems.front(); }
  Point back() const { return _elems.back(); }
  Point operator[](std::size_t i) const { return _elems[i]; }
  std::vector<Point> const& elems() const noexcept { return _elems; }

  bool contains(Point x) const noexcept;
  bool is_subset_of(FinSet const& other) const noexcept;

  FinSet unite(FinSet const& other) const;
  FinSet intersect(FinSet const& other) const;
  FinSet minus(FinSet const& other) const;

  // Smallest natural number not in the set.
  Point first_absent() const noexcept;

  bool operator==(FinSet const&) const = default;
  std::strong_ordering operator<=>(FinSet const&) const = default;

 private:
  std::vector<Point> _elems;
};

// "{1,2,3}" / "{}"
std::string to_string(FinSet const& s);
std::ostream& operator<<(std::ostream& os, FinSet const& s);

// Parses the set syntax above; whitespace between tokens is ignored and
// duplicate points are rejected.
FinSet parse_finset(std::string_view text);

}  // namespace iinf

#endif  // IINF_POINT_SET_HPP
