#ifndef IINF_GREEN_HPP
#define IINF_GREEN_HPP

#include <cstddef>
#include <utility>

#include "iinf/selfmap.hpp"

namespace iinf {

// Green's relations, decided from domains, ranges and coranks.
bool green_R(PartialSelfmap const& a, PartialSelfmap const& b);  // dom a = dom b
bool green_L(PartialSelfmap const& a, PartialSelfmap const& b);  // ran a = ran b
bool green_H(PartialSelfmap const& a, PartialSelfmap const& b);
bool green_D(PartialSelfmap const& a, PartialSelfmap const& b);  // equal corank
bool green_J(PartialSelfmap const& a, PartialSelfmap const& b);  // same as D

// Natural order on idempotents: e <= i iff dom e is contained in dom i.
// Throws NotIdempotent.
bool nat_leq(PartialSelfmap const& e, PartialSelfmap const& i);

// Membership in the ideal I_n of elements with corank >= n.
bool ideal_member(PartialSelfmap const& a, std::size_t n);

/// Returns g with a L g and g R b, i.e. dom g = dom b and ran g = ran a.
/// g is the identity off supp(a) u supp(b) and matches the remaining domain
/// points of b to the remaining range points of a in increasing order.
/// Throws NotDRelated when the coranks differ.
PartialSelfmap d_witness(PartialSelfmap const& a, PartialSelfmap const& b);

/// Returns (g, d) with a = g * b * d and corank g = corank d = corank a.
/// g sends the non-fixed domain points of a to those of b in increasing
/// order; d sends their images under b back to the images under a.
/// Throws NotDRelated when the coranks differ.
std::pair<PartialSelfmap, PartialSelfmap> j_factor(PartialSelfmap const& a,
                                                   PartialSelfmap const& b);

// a lies in e S e: dom a and ran a are both inside dom e. Throws
// NotIdempotent when e is not idempotent.
bool local_member(PartialSelfmap const& a, PartialSelfmap const& e);

// p^-1 * a * p for a total bijection p. Throws NotBijection.
PartialSelfmap rename(PartialSelfmap const& a, PartialSelfmap const& p);

}  // namespace iinf

#endif  // IINF_GREEN_HPP
