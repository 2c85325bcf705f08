#ifndef IINF_SOLVER_HPP
#define IINF_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "iinf/selfmap.hpp"

namespace iinf {

/// All x with a * x = b, sorted by canonical text.
///
/// Empty unless dom b is inside dom a. Otherwise x is forced on a(dom b),
/// where it must send a(p) to b(p); the points a(dom a \ dom b) are left out
/// of dom x; and on the finite complement of ran a, x may be any partial
/// injection into the complement of ran b. The fiber is therefore finite.
std::vector<PartialSelfmap> solve_left(PartialSelfmap const& a,
                                       PartialSelfmap const& b);

// All x with x * c = d, via x * c = d <=> c^-1 * x^-1 = d^-1.
std::vector<PartialSelfmap> solve_right(PartialSelfmap const& c,
                                        PartialSelfmap const& d);

// |solve_left(a, b)| without enumerating: sum_k C(ha,k) C(hb,k) k! with
// ha = corank a, hb = corank b, or 0 if dom b is not inside dom a.
std::uint64_t fiber_count(PartialSelfmap const& a, PartialSelfmap const& b);

// Number of partial injections from an m-set into an n-set.
std::uint64_t partial_injection_count(std::uint64_t m, std::uint64_t n);

}  // namespace iinf

#endif  // IINF_SOLVER_HPP
