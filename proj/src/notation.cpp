#include "cgt/notation.hpp"

#include <cctype>

#include "cgt/dyadic_forms.hpp"

namespace cgt {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_expr() {
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    int sign = 1;
    if (peek() == '-') {
      next();
      sign = -1;
    }
    sum.terms.push_back(parse_atom());
    sum.signs.push_back(sign);
    while (peek() == '+' || peek() == '-') {
      sign = next() == '+' ? 1 : -1;
      sum.terms.push_back(parse_atom());
      sum.signs.push_back(sign);
    }
    if (sum.terms.size() == 1 && sum.signs[0] == 1) return std::move(sum.terms[0]);
    return sum;
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

 private:
  static Expr atom(Expr::Kind kind) {
    Expr e;
    e.kind = kind;
    return e;
  }

  Expr parse_atom() {
    char c = peek();
    if (c == '*') {
      next();
      return atom(Expr::Kind::Star);
    }
    if (c == '^') {
      next();
      return atom(Expr::Kind::Up);
    }
    if (c == 'v' || c == 'V') {
      next();
      return atom(Expr::Kind::Down);
    }
    if (c == '{') return parse_braces();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return parse_number();
    fail("unexpected token");
  }

  Expr parse_braces() {
    next();  // '{'
    Expr e;
    e.kind = Expr::Kind::Braces;
    e.left = parse_list('|');
    if (peek() != '|') fail("expected '|'");
    next();
    e.right = parse_list('}');
    if (peek() != '}') fail("expected '}'");
    next();
    return e;
  }

  std::vector<Expr> parse_list(char terminator) {
    std::vector<Expr> items;
    if (peek() == terminator) return items;
    items.push_back(parse_expr());
    while (peek() == ',') {
      next();
      items.push_back(parse_expr());
    }
    return items;
  }

  Expr parse_number() {
    std::int64_t num = parse_integer();
    Expr e;
    e.kind = Expr::Kind::Number;
    if (peek() != '/') {
      e.number = Dyadic::integer(num);
      return e;
    }
    next();
    std::size_t den_pos = pos_;
    std::int64_t den = parse_integer();
    int k = 0;
    std::int64_t q = den;
    while (q > 1 && q % 2 == 0) {
      q /= 2;
      ++k;
    }
    if (den <= 0 || q != 1) fail_at("denominator must be a positive power of two", den_pos);
    e.number = Dyadic(num, k);
    return e;
  }

  std::int64_t parse_integer() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-') {
      next();
      negative = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at("expected integer", start);
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(raw_peek()))) {
      value = value * 10 + (next() - '0');
    }
    return negative ? -value : value;
  }

  // Whitespace-insensitive lookahead; '\0' signals end of input.
  char peek() {
    skip_ws();
    return raw_peek();
  }
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char next() {
    skip_ws();
    return text_[pos_++];
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) {
    throw ParseError(msg, pos);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) {
  Parser p(text);
  Expr e = p.parse_expr();
  p.expect_end();
  return e;
}

Game elaborate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return canonical_dyadic_form(e.number);
    case Expr::Kind::Star:
      return star();
    case Expr::Kind::Up:
      return up();
    case Expr::Kind::Down:
      return down();
    case Expr::Kind::Braces: {
      std::vector<Game> left, right;
      for (const Expr& l : e.left) left.push_back(elaborate(l));
      for (const Expr& r : e.right) right.push_back(elaborate(r));
      return make_game(std::move(left), std::move(right));
    }
    case Expr::Kind::Sum: {
      Game g = zero_game();
      for (std::size_t i = 0; i < e.terms.size(); ++i) {
        Game t = elaborate(e.terms[i]);
        g = sum(g, e.signs[i] == 1 ? t : conjugate(t));
      }
      return g;
    }
  }
  return zero_game();
}

Game parse_game(std::string_view text) { return elaborate(parse(text)); }

std::string print_form(Game g, bool shorthand) {
  if (g == zero_game()) return "0";
  if (shorthand) {
    if (auto v = is_canonical_dyadic_member(g)) return v->str();
    if (g == star()) return "*";
    if (g == up()) return "^";
    if (g == down()) return "v";
  }
  std::string out = "{";
  bool first = true;
  for (Game l : left_options(g)) {
    if (!first) out.push_back(',');
    out += print_form(l, shorthand);
    first = false;
  }
  out.push_back('|');
  first = true;
  for (Game r : right_options(g)) {
    if (!first) out.push_back(',');
    out += print_form(r, shorthand);
    first = false;
  }
  out.push_back('}');
  return out;
}

}  // namespace cgt
