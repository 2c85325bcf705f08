#ifndef IINF_TOPOLOGY_HPP
#define IINF_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "iinf/point_set.hpp"
#include "iinf/selfmap.hpp"

namespace iinf {

// F: members share dom and ran with the center and agree with it on the
// constraint. WF: members have domain inside the center's domain and agree
// with it on the constraint.
enum class Flavor { F, WF };

std::string_view to_string(Flavor f) noexcept;
Flavor parse_flavor(std::string_view text);

// Basic open set U_center(constraint). The constraint must lie in the
// center's domain (ConstraintOutsideDomain otherwise).
class Nbhd {
 public:
  Nbhd(Flavor flavor, PartialSelfmap center, FinSet constraint);

  Flavor flavor() const noexcept { return _flavor; }
  PartialSelfmap const& center() const noexcept { return _center; }
  FinSet const& constraint() const noexcept { return _constraint; }

 private:
  Flavor _flavor;
  PartialSelfmap _center;
  FinSet _constraint;
};

std::string to_string(Nbhd const& n);

bool member(Nbhd const& n, PartialSelfmap const& b);

// An explicit element of both neighbourhoods, or nullopt when they are
// disjoint. Throws FlavorMismatch.
std::optional<PartialSelfmap> common_member(Nbhd const& n1, Nbhd const& n2);

bool disjoint(Nbhd const& n1, Nbhd const& n2);

// Constraint sets (F1, F2) whose neighbourhoods around a and b are disjoint.
// Throws EqualElements when a == b.
std::pair<FinSet, FinSet> separate(PartialSelfmap const& a,
                                   PartialSelfmap const& b, Flavor flavor);

/// Constraints (F1, F2) with U_a(F1) * U_b(F2) inside U_ab(f), in both
/// flavors. F1 is f plus the points a sends into holes(b); F2 is the image
/// f a plus the points of dom b outside ran a. Without those extra points
/// products of members can have a different domain or range than ab.
/// Throws ConstraintOutsideDomain unless f is inside dom(ab).
std::pair<FinSet, FinSet> continuity_witness(PartialSelfmap const& a,
                                             PartialSelfmap const& b,
                                             FinSet const& f);

// The image f g, so that inverses of members of U_g(f) are members of
// U_{g^-1}(f g) in the F flavor. Throws ConstraintOutsideDomain.
FinSet inversion_witness(PartialSelfmap const& g, FinSet const& f);

// A constraint G with U_m(G) inside n1 and n2 for a common member m.
FinSet refine(Nbhd const& n1, Nbhd const& n2);

}  // namespace iinf

#endif  // IINF_TOPOLOGY_HPP
