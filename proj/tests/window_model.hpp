#ifndef IINF_TESTS_WINDOW_MODEL_HPP
#define IINF_TESTS_WINDOW_MODEL_HPP

// Independent model for deriving expected values: an element supported in
// {0, ..., n-1} is an array of images, -1 meaning undefined.

#include <cstddef>
#include <set>
#include <vector>

#include "iinf/selfmap.hpp"

namespace model {

using Map = std::vector<int>;

inline Map from(iinf::PartialSelfmap const& a, std::size_t n) {
  Map out(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (auto y = a.apply(x)) {
      out[x] = static_cast<int>(*y);
    }
  }
  return out;
}

inline Map compose(Map const& a, Map const& b) {
  Map out(a.size(), -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] >= 0) {
      out[x] = b[static_cast<std::size_t>(a[x])];
    }
  }
  return out;
}

inline Map invert(Map const& a) {
  Map out(a.size(), -1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] >= 0) {
      out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
    }
  }
  return out;
}

inline std::set<int> dom(Map const& a) {
  std::set<int> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] >= 0) {
      out.insert(static_cast<int>(x));
    }
  }
  return out;
}

inline std::set<int> ran(Map const& a) {
  std::set<int> out;
  for (int y : a) {
    if (y >= 0) {
      out.insert(y);
    }
  }
  return out;
}

// Every partial injection of {0..n-1}.
inline std::vector<Map> all(std::size_t n) {
  std::vector<Map> out;
  Map cur(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    cur[i] = -1;
    self(self, i + 1);
    for (std::size_t y = 0; y < n; ++y) {
      if (!used[y]) {
        used[y] = true;
        cur[i] = static_cast<int>(y);
        self(self, i + 1);
        used[y] = false;
      }
    }
    cur[i] = -1;
  };
  rec(rec, 0);
  return out;
}

}  // namespace model

#endif  // IINF_TESTS_WINDOW_MODEL_HPP
