#include "henselab/expr_io.hpp"

#include <cctype>
#include <sstream>

#include "henselab/ball.hpp"
#include "henselab/hensel.hpp"
#include "henselab/topology.hpp"

namespace henselab {

std::string FieldElem::str() const {
  if (symbolic()) return ratfunc().str();
  // analytic elements print as a fixed-precision series approximation
  try {
    return "~(" + eval_series(*this, 8).str() + ")";
  } catch (const PrecisionExhausted&) {
    return "~(below t^cap)";
  }
}

std::string Ball::str() const {
  return "Ball(" + center.str() + ", " + std::to_string(radius) + ")";
}

std::string BasicOpen::str() const {
  std::string s = base.str();
  for (const auto& [d, ball] : constraints)
    s += " & " + d.label() + "^-1 " + ball.str();
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  FieldElem parse() {
    FieldElem e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  FieldElem expr() {
    FieldElem acc = term();
    while (true) {
      skip_ws();
      if (consume('+'))
        acc = acc + term();
      else if (consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  FieldElem term() {
    FieldElem acc = factor();
    while (true) {
      skip_ws();
      if (consume('*'))
        acc = acc * factor();
      else if (consume('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  FieldElem factor() {
    FieldElem base = atom();
    skip_ws();
    if (consume('^')) {
      skip_ws();
      bool neg = consume('-');
      long k = integer();
      return base.pow(neg ? -k : k);
    }
    return base;
  }

  FieldElem atom() {
    skip_ws();
    if (consume('(')) {
      FieldElem e = expr();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (consume('-')) return -factor();
    if (peek() == 't' && !std::isalnum(peek_at(1))) {
      ++pos_;
      return FieldElem::t();
    }
    if (peek() == 'e' && std::isdigit(peek_at(1))) {
      ++pos_;
      long idx = integer();
      return FieldElem::gen(static_cast<int>(idx));
    }
    if (std::isdigit(peek())) {
      long num = integer();
      if (peek() == '/') {
        // lookahead: a denominator must be a bare integer, otherwise leave
        // the '/' for the term level (e.g. "3/(1+t)")
        size_t save = pos_;
        ++pos_;
        if (std::isdigit(peek())) {
          long den = integer();
          if (!std::isalnum(peek()) && peek() != '(')
            return FieldElem::rational(Rat(num, den));
        }
        pos_ = save;
      }
      return FieldElem::rational(Rat(num));
    }
    fail("expected an atom");
    return FieldElem();
  }

  long integer() {
    skip_ws();
    if (!std::isdigit(peek())) fail("expected a number");
    long v = 0;
    while (std::isdigit(peek())) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek_at(size_t off) const {
    return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream msg;
    msg << "parse error at position " << pos_ << ": " << what << " in \"" << text_ << "\"";
    throw std::invalid_argument(msg.str());
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

FieldElem parse_elem(const std::string& text) { return Parser(text).parse(); }

}  // namespace henselab
