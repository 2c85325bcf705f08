#include "iinf/selfmap.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "iinf/error.hpp"
#include "text_cursor.hpp"

namespace iinf {

namespace {

std::optional<Point> lookup(std::vector<PointPair> const& moved, Point x) {
  auto it = std::lower_bound(
      moved.begin(), moved.end(), x,
      [](PointPair const& p, Point v) { return p.first < v; });
  if (it != moved.end() && it->first == x) {
    return it->second;
  }
  return std::nullopt;
}

std::string pair_text(PointPair const& p) {
  return std::to_string(p.first) + ">" + std::to_string(p.second);
}

}  // namespace

PartialSelfmap PartialSelfmap::make(std::vector<PointPair> pairs,
                                    FinSet holes) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i].first == pairs[i - 1].first) {
      throw Error(ErrorKind::NonInjective,
                  "duplicate source " + std::to_string(pairs[i].first));
    }
  }
  std::vector<Point> targets;
  targets.reserve(pairs.size());
  for (auto const& p : pairs) {
    targets.push_back(p.second);
  }
  std::sort(targets.begin(), targets.end());
  auto dup = std::adjacent_find(targets.begin(), targets.end());
  if (dup != targets.end()) {
    throw Error(ErrorKind::NonInjective,
                "duplicate target " + std::to_string(*dup));
  }
  for (auto const& p : pairs) {
    if (holes.contains(p.first)) {
      throw Error(ErrorKind::SourceIsHole,
                  pair_text(p) + " has its source among the holes");
    }
  }
  std::erase_if(pairs, [](PointPair const& p) { return p.first == p.second; });
  for (auto const& p : pairs) {
    if (!holes.contains(p.second) && !lookup(pairs, p.second)) {
      throw Error(ErrorKind::TargetIsFixed,
                  pair_text(p) + ": " + std::to_string(p.second) +
                      " would be both a fixed point and an image");
    }
  }
  return PartialSelfmap(std::move(pairs), std::move(holes));
}

std::optional<Point> PartialSelfmap::apply(Point x) const noexcept {
  if (_holes.contains(x)) {
    return std::nullopt;
  }
  if (auto y = lookup(_moved, x)) {
    return y;
  }
  return x;
}

FinSet PartialSelfmap::sources() const {
  std::vector<Point> out;
  out.reserve(_moved.size());
  for (auto const& p : _moved) {
    out.push_back(p.first);
  }
  return FinSet(std::move(out));
}

FinSet PartialSelfmap::targets() const {
  std::vector<Point> out;
  out.reserve(_moved.size());
  for (auto const& p : _moved) {
    out.push_back(p.second);
  }
  return FinSet(std::move(out));
}

FinSet PartialSelfmap::ran_complement() const {
  return sources().unite(_holes).minus(targets());
}

FinSet PartialSelfmap::support() const {
  return sources().unite(targets()).unite(_holes);
}

bool PartialSelfmap::is_permutation_of_domain() const {
  return _holes == ran_complement();
}

bool PartialSelfmap::operator<(PartialSelfmap const& other) const {
  return std::tie(_moved, _holes) < std::tie(other._moved, other._holes);
}

PartialSelfmap compose(PartialSelfmap const& a, PartialSelfmap const& b) {
  // Outside supp(a) u supp(b) both maps fix every point, so the composite
  // is determined by its values on that finite set.
  FinSet universe = a.support().unite(b.support());
  std::vector<PointPair> moved;
  std::vector<Point> holes;
  for (Point x : universe) {
    auto y = a.apply(x);
    if (!y) {
      holes.push_back(x);
      continue;
    }
    auto z = b.apply(*y);
    if (!z) {
      holes.push_back(x);
    } else if (*z != x) {
      moved.emplace_back(x, *z);
    }
  }
  return PartialSelfmap(std::move(moved), FinSet(std::move(holes)));
}

PartialSelfmap invert(PartialSelfmap const& a) {
  std::vector<PointPair> moved;
  moved.reserve(a._moved.size());
  for (auto const& [x, y] : a._moved) {
    moved.emplace_back(y, x);
  }
  std::sort(moved.begin(), moved.end());
  return PartialSelfmap(std::move(moved), a.ran_complement());
}

std::string format(PartialSelfmap const& a) {
  if (a.is_identity()) {
    return "id";
  }
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto const& p : a.moved()) {
    os << (first ? "" : ", ") << p.first << '>' << p.second;
    first = false;
  }
  for (Point h : a.holes()) {
    os << (first ? "" : ", ") << '-' << h;
    first = false;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, PartialSelfmap const& a) {
  return os << format(a);
}

PartialSelfmap parse(std::string_view text) {
  detail::TextCursor cur(text);
  if (cur.accept("id")) {
    if (!cur.at_end()) {
      cur.fail("trailing input");
    }
    return PartialSelfmap::identity();
  }
  cur.expect('{');
  std::vector<PointPair> pairs;
  std::vector<Point> holes;
  if (!cur.accept('}')) {
    do {
      if (cur.accept('-')) {
        holes.push_back(cur.nat());
      } else {
        Point x = cur.nat();
        cur.expect('>');
        pairs.emplace_back(x, cur.nat());
      }
    } while (cur.accept(','));
    cur.expect('}');
  }
  if (!cur.at_end()) {
    cur.fail("trailing input");
  }
  FinSet hole_set(holes);
  if (hole_set.size() != holes.size()) {
    cur.fail("hole listed twice");
  }
  return PartialSelfmap::make(std::move(pairs), std::move(hole_set));
}

}  // namespace iinf

std::size_t std::hash<iinf::PartialSelfmap>::operator()(
    iinf::PartialSelfmap const& a) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  };
  for (auto const& [x, y] : a.moved()) {
    mix(x);
    mix(y);
  }
  mix(~0ULL);
  for (auto x : a.holes()) {
    mix(x);
  }
  return h;
}
