#include <cctype>
#include <string>

#include "ellsl2/errors.hpp"
#include "ellsl2/rewrite.hpp"

namespace ellsl2 {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := '-' unary | power
// power   := atom ('^' '-'? integer)?
// atom    := ident | integer ('/' integer)? | '(' expr ')' | '[' expr ',' expr ']'
class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  NCPoly parse() {
    if (src_.empty()) fail("empty expression");
    NCPoly p = expr();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  bool peek(char ch) const { return pos_ < src_.size() && src_[pos_] == ch; }

  bool accept(char ch) {
    if (!peek(ch)) return false;
    ++pos_;
    return true;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  NCPoly expr() {
    NCPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  NCPoly term() {
    NCPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  NCPoly unary() {
    if (accept('-')) return -unary();
    return power_of();
  }

  NCPoly power_of() {
    NCPoly base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const long e = integer();
    if (e > 64) fail("exponent too large");
    const int n = static_cast<int>(negative ? -e : e);
    if (n < 0 && base.terms().size() == 1 && base.terms().begin()->first == NCMonomial{}) {
      return NCPoly::constant(pow_rational(base.terms().begin()->second, n));
    }
    return power(base, n);
  }

  static Rational pow_rational(const Rational& r, int n) {
    if (r == 0 && n < 0) throw DomainError("parse error: zero raised to a negative power");
    Rational out = 1;
    const Rational b = n < 0 ? Rational(1 / r) : r;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) out *= b;
    return out;
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stol(src_.substr(start, pos_ - start));
  }

  NCPoly atom() {
    if (accept('(')) {
      NCPoly p = expr();
      expect(')');
      return p;
    }
    if (accept('[')) {
      NCPoly a = expr();
      expect(',');
      NCPoly b = expr();
      expect(']');
      return commutator(a, b);
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      std::string literal = src_.substr(start, pos_ - start);
      if (accept('/')) {
        const std::size_t dstart = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        const std::string den = src_.substr(dstart, pos_ - dstart);
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        literal += "/" + den;
      }
      Rational r(literal, 10);
      r.canonicalize();
      return NCPoly::constant(r);
    }
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string id = src_.substr(start, pos_ - start);
      if (id == "Jp") return NCPoly::jp();
      if (id == "Jm") return NCPoly::jm();
      if (id == "J0") return NCPoly::j0();
      if (id == "Jpinv") return NCPoly::jpinv();
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + src_[pos_] + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_expression(const std::string& text) { return Parser(text).parse(); }

}  // namespace ellsl2
