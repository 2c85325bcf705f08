#include "iinf/congruence.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "iinf/error.hpp"
#include "iinf/green.hpp"
#include "text_cursor.hpp"

namespace iinf {

std::string_view to_string(Parity p) noexcept {
  return p == Parity::even ? "even" : "odd";
}

Parity sign(PartialSelfmap const& a) {
  if (!a.is_permutation_of_domain()) {
    throw Error(ErrorKind::NotPermutation,
                format(a) + " does not permute its domain");
  }
  // Every moved point lies on a finite cycle of moved points; a cycle of
  // length k contributes k - 1 transpositions.
  std::map<Point, Point> next(a.moved().begin(), a.moved().end());
  std::size_t transpositions = 0;
  while (!next.empty()) {
    Point start = next.begin()->first;
    Point x = start;
    std::size_t length = 0;
    do {
      auto it = next.find(x);
      x = it->second;
      next.erase(it);
      ++length;
    } while (x != start);
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t CongruenceId::index() const noexcept {
  switch (_kind) {
    case Kind::KI: return 3 * static_cast<std::uint64_t>(_level);
    case Kind::KS: return 3 * static_cast<std::uint64_t>(_level) + 1;
    case Kind::KA: return 3 * static_cast<std::uint64_t>(_level) + 2;
    case Kind::Delta: break;
  }
  return std::numeric_limits<std::uint64_t>::max();
}

std::vector<CongruenceId> congruence_family(std::size_t max_level) {
  std::vector<CongruenceId> out;
  for (std::size_t n = 0; n <= max_level; ++n) {
    out.push_back(CongruenceId::ki(n));
    out.push_back(CongruenceId::ks(n));
    out.push_back(CongruenceId::ka(n));
  }
  out.push_back(CongruenceId::delta());
  return out;
}

std::string to_string(CongruenceId const& c) {
  switch (c.kind()) {
    case CongruenceId::Kind::Delta: return "delta";
    case CongruenceId::Kind::KI:
      return c.level() == 0 ? "omega" : "I:" + std::to_string(c.level());
    case CongruenceId::Kind::KS: return "S:" + std::to_string(c.level());
    case CongruenceId::Kind::KA: return "A:" + std::to_string(c.level());
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, CongruenceId const& c) {
  return os << to_string(c);
}

CongruenceId parse_congruence(std::string_view text) {
  detail::TextCursor cur(text);
  CongruenceId out = CongruenceId::delta();
  if (cur.accept("delta")) {
    out = CongruenceId::delta();
  } else if (cur.accept("omega")) {
    out = CongruenceId::omega();
  } else {
    char tag = cur.peek();
    if (tag != 'I' && tag != 'S' && tag != 'A') {
      cur.fail("expected delta, omega, I:<n>, S:<n> or A:<n>");
    }
    cur.accept(tag);
    cur.expect(':');
    auto n = static_cast<std::size_t>(cur.nat());
    out = tag == 'I'   ? CongruenceId::ki(n)
          : tag == 'S' ? CongruenceId::ks(n)
                       : CongruenceId::ka(n);
  }
  if (!cur.at_end()) {
    cur.fail("trailing input");
  }
  return out;
}

bool cong_related(CongruenceId const& c, PartialSelfmap const& a,
                  PartialSelfmap const& b) {
  if (a == b) {
    return true;
  }
  std::size_t n = c.level();
  switch (c.kind()) {
    case CongruenceId::Kind::Delta: return false;
    case CongruenceId::Kind::KI: return a.corank() >= n && b.corank() >= n;
    case CongruenceId::Kind::KS:
    case CongruenceId::Kind::KA:
      if (a.corank() > n && b.corank() > n) {
        return true;
      }
      if (a.corank() != n || !green_H(a, b)) {
        return false;
      }
      return c.kind() == CongruenceId::Kind::KS ||
             sign(compose(a, invert(b))) == Parity::even;
  }
  return false;
}

CongruenceId principal_congruence(PartialSelfmap const& a,
                                  PartialSelfmap const& b) {
  if (a == b) {
    return CongruenceId::delta();
  }
  std::size_t m = std::min(a.corank(), b.corank());
  if (!green_H(a, b)) {
    // H-related elements share a corank, so this also covers the
    // differing-corank case.
    return CongruenceId::ki(m);
  }
  return sign(compose(a, invert(b))) == Parity::odd ? CongruenceId::ks(m)
                                                    : CongruenceId::ka(m);
}

bool cong_leq(CongruenceId const& c1, CongruenceId const& c2) {
  return c1.index() >= c2.index();
}

CongruenceId cong_meet(CongruenceId const& c1, CongruenceId const& c2) {
  return c1.index() >= c2.index() ? c1 : c2;
}

CongruenceId cong_join(CongruenceId const& c1, CongruenceId const& c2) {
  return c1.index() <= c2.index() ? c1 : c2;
}

std::string to_string(ClassLabel const& l) {
  struct Printer {
    std::string operator()(label::Singleton const& s) const {
      return "single(" + format(s.element) + ")";
    }
    std::string operator()(label::Zero const&) const { return "zero"; }
    std::string operator()(label::HClass const& h) const {
      return "hclass(" + to_string(h.dom_complement) + ";" +
             to_string(h.ran_complement) + ")";
    }
    std::string operator()(label::HCoset const& h) const {
      return "hcoset(" + to_string(h.dom_complement) + ";" +
             to_string(h.ran_complement) + ";" +
             std::string(to_string(h.parity)) + ")";
    }
  };
  return std::visit(Printer{}, l);
}

PartialSelfmap h_class_reference(FinSet const& dom_complement,
                                 FinSet const& ran_complement) {
  Point m = 0;
  if (!dom_complement.empty()) {
    m = std::max(m, dom_complement.back() + 1);
  }
  if (!ran_complement.empty()) {
    m = std::max(m, ran_complement.back() + 1);
  }
  FinSet low = FinSet::range(0, m);
  FinSet dom = low.minus(dom_complement);
  FinSet ran = low.minus(ran_complement);
  std::vector<PointPair> pairs;
  pairs.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    pairs.emplace_back(dom[i], ran[i]);
  }
  return PartialSelfmap::make(std::move(pairs), dom_complement);
}

ClassLabel class_label(CongruenceId const& c, PartialSelfmap const& a) {
  std::size_t n = c.level();
  switch (c.kind()) {
    case CongruenceId::Kind::Delta: return label::Singleton{a};
    case CongruenceId::Kind::KI:
      if (a.corank() >= n) {
        return label::Zero{};
      }
      return label::Singleton{a};
    case CongruenceId::Kind::KS:
    case CongruenceId::Kind::KA: {
      if (a.corank() > n) {
        return label::Zero{};
      }
      if (a.corank() < n) {
        return label::Singleton{a};
      }
      FinSet ran_c = a.ran_complement();
      if (c.kind() == CongruenceId::Kind::KS) {
        return label::HClass{a.holes(), std::move(ran_c)};
      }
      PartialSelfmap ref = h_class_reference(a.holes(), ran_c);
      Parity p = sign(compose(a, invert(ref)));
      return label::HCoset{a.holes(), std::move(ran_c), p};
    }
  }
  return label::Singleton{a};
}

}  // namespace iinf
