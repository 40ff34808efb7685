#include <cctype>
#include <stdexcept>

#include "padicsum/cli.hpp"

namespace padicsum::cli {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary (('*')? unary)*      juxtaposition multiplies: "3n", "2(n+1)"
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := integer | 'n' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RationalPolynomial parse() {
    RationalPolynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos_) + " in '" +
                                std::string(s_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'n' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalPolynomial expr() {
    RationalPolynomial acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalPolynomial term() {
    RationalPolynomial acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (starts_atom()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RationalPolynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalPolynomial power() {
    RationalPolynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("exponent must be a natural number");
      Integer e = integer();
      if (e > 64) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  RationalPolynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == 'n') {
      ++pos_;
      return RationalPolynomial::identity();
    }
    if (c == '(') {
      ++pos_;
      RationalPolynomial inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RationalPolynomial::constant(Rational(integer()));
    fail(std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  std::size_t start = 0;
  if (text.empty()) return out;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace padicsum::cli
