#include "slicewb/parser.hpp"

#include <cctype>

namespace slicewb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int m, int n) : text_(text), m_(m), n_(n) {}

  std::unique_ptr<Expr> run() {
    auto e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int m_, n_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t at) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = at;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind k, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b, std::size_t at) {
    auto e = node(k, at);
    e->children.push_back(std::move(a));
    e->children.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      std::size_t at = pos_++;
      auto rhs = term();
      lhs = binary(c == '+' ? Expr::Kind::sum : Expr::Kind::difference, std::move(lhs), std::move(rhs), at);
    }
    return lhs;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'e' || c == '(' || c == '.';
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    for (;;) {
      char c = peek();
      std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        lhs = binary(Expr::Kind::product, std::move(lhs), unary(), at);
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        std::size_t num_at = pos_;
        Rational d = number();
        if (sgn(d) == 0) {
          pos_ = num_at;
          fail("division by zero");
        }
        auto e = node(Expr::Kind::divide, at);
        e->value = d;
        e->children.push_back(std::move(lhs));
        lhs = std::move(e);
      } else if (starts_factor(c)) {
        lhs = binary(Expr::Kind::product, std::move(lhs), unary(), at);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    if (peek() == '-') {
      std::size_t at = pos_++;
      auto e = node(Expr::Kind::negate, at);
      e->children.push_back(unary());
      return e;
    }
    return factor();
  }

  std::unique_ptr<Expr> factor() {
    auto base = atom();
    if (peek() == '^') {
      std::size_t at = pos_++;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      auto e = node(Expr::Kind::power, at);
      try {
        e->exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::exception&) {
        pos_ = start;
        fail("exponent out of range");
      }
      if (e->exponent > 64) {
        pos_ = start;
        fail("exponent larger than 64");
      }
      e->children.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  std::unique_ptr<Expr> atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto e = node(Expr::Kind::rational, at);
      e->value = number();
      return e;
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a variable index after 'x'");
      int idx = std::stoi(std::string(text_.substr(start, std::min<std::size_t>(pos_ - start, 6))));
      if (idx < 1 || idx > n_) {
        pos_ = at;
        fail("variable index x" + std::to_string(idx) + " out of range 1.." + std::to_string(n_));
      }
      auto e = node(Expr::Kind::variable, at);
      e->index = idx;
      return e;
    }
    if (c == 'e') {
      std::size_t end = pos_ + 1;
      if (end < text_.size() && text_[end] == '{') {
        while (end < text_.size() && text_[end] != '}') ++end;
        if (end == text_.size()) fail("unterminated blade '{'");
        ++end;
      } else {
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      }
      auto e = node(Expr::Kind::blade, at);
      try {
        e->blade = parse_blade(text_.substr(pos_, end - pos_), m_);
      } catch (const std::invalid_argument& ex) {
        fail(std::string("bad blade: ") + ex.what());
      }
      pos_ = end;
      return e;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unknown token '" + std::string(1, c) + "'");
  }
};

StemPolynomial lower_stem(const Expr& e, int m, int n) {
  auto one = [&] { return StemPolynomial::constant(n, MultivectorQ::scalar(m, Rational(1))); };
  switch (e.kind) {
    case Expr::Kind::variable:
      return coordinate_stem(m, n, e.index);
    case Expr::Kind::blade:
      return StemPolynomial::constant(n, MultivectorQ::basis(m, e.blade));
    case Expr::Kind::rational:
      return StemPolynomial::constant(n, MultivectorQ::scalar(m, e.value));
    case Expr::Kind::sum:
      return lower_stem(*e.children[0], m, n) + lower_stem(*e.children[1], m, n);
    case Expr::Kind::difference:
      return lower_stem(*e.children[0], m, n) - lower_stem(*e.children[1], m, n);
    case Expr::Kind::product:
      return stem_tensor(lower_stem(*e.children[0], m, n), lower_stem(*e.children[1], m, n));
    case Expr::Kind::negate:
      return -lower_stem(*e.children[0], m, n);
    case Expr::Kind::divide:
      return lower_stem(*e.children[0], m, n) * Rational(1 / e.value);
    case Expr::Kind::power: {
      StemPolynomial base = lower_stem(*e.children[0], m, n);
      StemPolynomial acc = one();
      for (int i = 0; i < e.exponent; ++i) acc = stem_tensor(acc, base);
      return acc;
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text, int m, int n) {
  check_algebra_dim(m);
  if (n < 1 || n > kMaxVariables) throw std::invalid_argument("number of variables must lie in 1.." + std::to_string(kMaxVariables));
  return Parser(text, m, n).run();
}

SliceFunction lower(const Expr& e, int m, int n) { return SliceFunction(lower_stem(e, m, n)); }

}  // namespace slicewb
