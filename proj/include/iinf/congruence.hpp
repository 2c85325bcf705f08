#ifndef IINF_CONGRUENCE_HPP
#define IINF_CONGRUENCE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iinf/point_set.hpp"
#include "iinf/selfmap.hpp"

namespace iinf {

enum class Parity { even, odd };

std::string_view to_string(Parity p) noexcept;

// Parity of the finitely supported permutation a induces on its domain.
// Throws NotPermutation unless dom a = ran a.
Parity sign(PartialSelfmap const& a);

// One member of the congruence chain
//
//   omega = I(0) > S(0) > A(0) > I(1) > S(1) > A(1) > ... > delta
//
// I(n) collapses the ideal I_n, S(n) additionally collapses every H-class at
// corank n, A(n) collapses each H-class at corank n to its two parity
// cosets.
class CongruenceId {
 public:
  enum class Kind { Delta, KI, KS, KA };

  static CongruenceId delta() { return CongruenceId(Kind::Delta, 0); }
  static CongruenceId omega() { return CongruenceId(Kind::KI, 0); }
  static CongruenceId ki(std::size_t n) { return CongruenceId(Kind::KI, n); }
  static CongruenceId ks(std::size_t n) { return CongruenceId(Kind::KS, n); }
  static CongruenceId ka(std::size_t n) { return CongruenceId(Kind::KA, n); }

  Kind kind() const noexcept { return _kind; }
  std::size_t level() const noexcept { return _level; }

  // Position in the chain: I(n) -> 3n, S(n) -> 3n+1, A(n) -> 3n+2,
  // delta -> max. Larger index means finer.
  std::uint64_t index() const noexcept;

  bool operator==(CongruenceId const&) const = default;

 private:
  CongruenceId(Kind kind, std::size_t level) : _kind(kind), _level(level) {}

  Kind _kind;
  std::size_t _level;
};

// delta, I(0)..I(max), S(0)..S(max), A(0)..A(max), ordered coarse to fine.
std::vector<CongruenceId> congruence_family(std::size_t max_level);

// "delta" | "omega" | "I:<n>" | "S:<n>" | "A:<n>"; I:0 prints as "omega".
std::string to_string(CongruenceId const& c);
std::ostream& operator<<(std::ostream& os, CongruenceId const& c);
CongruenceId parse_congruence(std::string_view text);

bool cong_related(CongruenceId const& c, PartialSelfmap const& a,
                  PartialSelfmap const& b);

// The finest chain member relating a and b.
CongruenceId principal_congruence(PartialSelfmap const& a,
                                  PartialSelfmap const& b);

// c1 is contained in c2 (c1 is finer).
bool cong_leq(CongruenceId const& c1, CongruenceId const& c2);
CongruenceId cong_meet(CongruenceId const& c1, CongruenceId const& c2);
CongruenceId cong_join(CongruenceId const& c1, CongruenceId const& c2);

namespace label {

struct Singleton {
  PartialSelfmap element;
  bool operator==(Singleton const&) const = default;
};

struct Zero {
  bool operator==(Zero const&) const = default;
};

// A whole H-class, named by (holes, range complement).
struct HClass {
  FinSet dom_complement;
  FinSet ran_complement;
  bool operator==(HClass const&) const = default;
};

// One of the two parity cosets of an H-class.
struct HCoset {
  FinSet dom_complement;
  FinSet ran_complement;
  Parity parity;
  bool operator==(HCoset const&) const = default;
};

}  // namespace label

using ClassLabel =
    std::variant<label::Singleton, label::Zero, label::HClass, label::HCoset>;

std::string to_string(ClassLabel const& l);

// Order-preserving element of the H-class (dom_complement, ran_complement):
// with m = 1 + max of both sets, it maps [0, m) \ dom_complement onto
// [0, m) \ ran_complement in increasing order and fixes everything >= m.
// The sets must have equal size.
PartialSelfmap h_class_reference(FinSet const& dom_complement,
                                 FinSet const& ran_complement);

// Canonical name of the class of a in the quotient by c: two elements get
// the same label exactly when c relates them.
ClassLabel class_label(CongruenceId const& c, PartialSelfmap const& a);

}  // namespace iinf

#endif  // IINF_CONGRUENCE_HPP
