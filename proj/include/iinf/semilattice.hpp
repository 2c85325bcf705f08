#ifndef IINF_SEMILATTICE_HPP
#define IINF_SEMILATTICE_HPP

#include <vector>

#include "iinf/point_set.hpp"
#include "iinf/selfmap.hpp"

namespace iinf {

// Free semilattice of finite subsets under union; identity is the empty set.
FinSet join(FinSet const& a, FinSet const& b);

// e <-> complement of dom e. Idempotent products correspond to unions.
PartialSelfmap to_idempotent(FinSet const& a);
FinSet from_idempotent(PartialSelfmap const& e);  // throws NotIdempotent

// All x with a u x = b, in increasing order. Empty unless a is a subset of
// b; otherwise exactly the sets between b \ a and b, 2^|a| of them.
std::vector<FinSet> f_solver(FinSet const& a, FinSet const& b);

// Every idempotent above e (finitely many: one per subset of the holes),
// ordered by their hole sets.
std::vector<PartialSelfmap> up_set(PartialSelfmap const& e);

// e = e_k < ... < e_0 = id, dropping the largest remaining hole each step.
std::vector<PartialSelfmap> maximal_chain_up(PartialSelfmap const& e);

// Idempotents below e whose holes stay inside holes(e) u window.
std::vector<PartialSelfmap> down_set_in_window(PartialSelfmap const& e,
                                               FinSet const& window);

}  // namespace iinf

#endif  // IINF_SEMILATTICE_HPP
