#include "ssc/parse.hpp"

#include <cctype>

namespace ssc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names, MonomialOrder order,
             const ParseHooks& hooks)
      : text_(text), names_(names), order_(order), hooks_(hooks) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    skip_ws();
    if (pos_ < text_.size() && (ident_start(text_[pos_]) || text_[pos_] == '(' ||
                                std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '#'))
      fail("implicit multiplication is not allowed; use '*'");
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a nonnegative integer exponent");
      std::string digits = read_digits();
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      mpz_class den = 1;
      if (accept('/')) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected a denominator");
        den = mpz_class(read_digits());
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(names_.size(), q, order_);
    }
    if (c == '#') return reserved();
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i, order_);
      throw UnknownVariable(start, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial reserved() {
    const std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "#inv" && hooks_.inverse) {
      if (!accept('(')) fail("expected '(' after #inv");
      Polynomial arg = expr();
      if (!accept(')')) fail("expected ')'");
      return hooks_.inverse(arg, start);
    }
    throw ReservedName(start, std::string(word));
  }

  std::string_view text_;
  std::span<const std::string> names_;
  MonomialOrder order_;
  const ParseHooks& hooks_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> names,
                      MonomialOrder order, const ParseHooks& hooks) {
  return PolyParser(text, names, order, hooks).parse();
}

bool is_user_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  for (char c : name)
    if (!ident_char(c)) return false;
  return true;
}

}  // namespace ssc
