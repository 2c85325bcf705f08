#ifndef IINF_SRC_TEXT_CURSOR_HPP
#define IINF_SRC_TEXT_CURSOR_HPP

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "iinf/error.hpp"
#include "iinf/point_set.hpp"

namespace iinf::detail {

// Minimal scanner shared by the element, set and expression grammars.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : _text(text) {}

  void skip_ws() {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
  }

  bool at_end() {
    skip_ws();
    return _pos >= _text.size();
  }

  char peek() {
    skip_ws();
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (_text.substr(_pos, word.size()) == word) {
      _pos += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  Point nat() {
    skip_ws();
    if (_pos >= _text.size() ||
        !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      fail("expected a natural number");
    }
    Point value = 0;
    constexpr Point max = std::numeric_limits<Point>::max();
    while (_pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      Point digit = static_cast<Point>(_text[_pos] - '0');
      if (value > (max - digit) / 10) {
        fail("number out of range");
      }
      value = value * 10 + digit;
      ++_pos;
    }
    return value;
  }

  std::size_t position() const noexcept { return _pos; }
  std::string_view rest() const noexcept { return _text.substr(_pos); }
  void advance(std::size_t n) noexcept { _pos += n; }

  [[noreturn]] void fail(std::string const& what) const {
    throw Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(_pos) + " in \"" +
                    std::string(_text) + "\"");
  }

 private:
  std::string_view _text;
  std::size_t _pos = 0;
};

}  // namespace iinf::detail

#endif  // IINF_SRC_TEXT_CURSOR_HPP
