#ifndef IINF_EXPR_HPP
#define IINF_EXPR_HPP

#include <string_view>

#include "iinf/selfmap.hpp"

namespace iinf {

// expr := term ("*" term)*      left-associative
// term := element | "inv(" expr ")" | "(" expr ")"
// Throws SyntaxError, plus whatever element construction throws.
PartialSelfmap evaluate(std::string_view text);

}  // namespace iinf

#endif  // IINF_EXPR_HPP
