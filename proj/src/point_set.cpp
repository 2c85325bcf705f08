#include "iinf/point_set.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "iinf/error.hpp"
#include "text_cursor.hpp"

namespace iinf {

FinSet::FinSet(std::initializer_list<Point> points)
    : FinSet(std::vector<Point>(points)) {}

FinSet::FinSet(std::vector<Point> points) : _elems(std::move(points)) {
  std::sort(_elems.begin(), _elems.end());
  _elems.erase(std::unique(_elems.begin(), _elems.end()), _elems.end());
}

FinSet FinSet::range(Point first, Point last) {
  FinSet out;
  for (Point x = first; x < last; ++x) {
    out._elems.push_back(x);
  }
  return out;
}

bool FinSet::contains(Point x) const noexcept {
  return std::binary_search(_elems.begin(), _elems.end(), x);
}

bool FinSet::is_subset_of(FinSet const& other) const noexcept {
  return std::includes(other._elems.begin(), other._elems.end(),
                       _elems.begin(), _elems.end());
}

FinSet FinSet::unite(FinSet const& other) const {
  FinSet out;
  out._elems.reserve(size() + other.size());
  std::set_union(_elems.begin(), _elems.end(), other._elems.begin(),
                 other._elems.end(), std::back_inserter(out._elems));
  return out;
}

FinSet FinSet::intersect(FinSet const& other) const {
  FinSet out;
  std::set_intersection(_elems.begin(), _elems.end(), other._elems.begin(),
                        other._elems.end(), std::back_inserter(out._elems));
  return out;
}

FinSet FinSet::minus(FinSet const& other) const {
  FinSet out;
  std::set_difference(_elems.begin(), _elems.end(), other._elems.begin(),
                      other._elems.end(), std::back_inserter(out._elems));
  return out;
}

Point FinSet::first_absent() const noexcept {
  Point candidate = 0;
  for (Point x : _elems) {
    if (x != candidate) {
      break;
    }
    ++candidate;
  }
  return candidate;
}

std::string to_string(FinSet const& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) {
      os << ',';
    }
    os << s[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, FinSet const& s) {
  return os << to_string(s);
}

FinSet parse_finset(std::string_view text) {
  detail::TextCursor cur(text);
  cur.expect('{');
  std::vector<Point> points;
  if (!cur.accept('}')) {
    do {
      points.push_back(cur.nat());
    } while (cur.accept(','));
    cur.expect('}');
  }
  if (!cur.at_end()) {
    cur.fail("trailing input");
  }
  FinSet out(points);
  if (out.size() != points.size()) {
    cur.fail("duplicate point");
  }
  return out;
}

}  // namespace iinf
