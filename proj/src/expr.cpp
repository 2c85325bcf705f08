#include "iinf/expr.hpp"

#include "text_cursor.hpp"

namespace iinf {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : _cur(text) {}

  PartialSelfmap run() {
    PartialSelfmap value = expr();
    if (!_cur.at_end()) {
      _cur.fail("trailing input");
    }
    return value;
  }

 private:
  PartialSelfmap expr() {
    PartialSelfmap value = term();
    while (_cur.accept('*')) {
      value = compose(value, term());
    }
    return value;
  }

  PartialSelfmap term() {
    if (_cur.accept("inv")) {
      _cur.expect('(');
      PartialSelfmap inner = expr();
      _cur.expect(')');
      return invert(inner);
    }
    if (_cur.accept('(')) {
      PartialSelfmap inner = expr();
      _cur.expect(')');
      return inner;
    }
    if (_cur.accept("id")) {
      return PartialSelfmap::identity();
    }
    if (_cur.peek() != '{') {
      _cur.fail("expected an element, inv( or (");
    }
    std::string_view rest = _cur.rest();
    std::size_t close = rest.find('}');
    if (close == std::string_view::npos) {
      _cur.fail("unterminated element");
    }
    PartialSelfmap element = parse(rest.substr(0, close + 1));
    _cur.advance(close + 1);
    return element;
  }

  detail::TextCursor _cur;
};

}  // namespace

PartialSelfmap evaluate(std::string_view text) {
  return ExprParser(text).run();
}

}  // namespace iinf
