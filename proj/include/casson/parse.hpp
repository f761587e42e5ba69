#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "casson/manifold.hpp"

namespace casson {

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + what),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

// Recursive-descent parser for
//   expr := term (" # " term)*
//   term := "SHS(" int ("," int)+ ")"
//         | "SSF(" int "," int "," int ";" int "," int "," int ")"
//         | "TW(" int ";" int "/" int ")"
// Whitespace-insensitive; "#" is left-associative connected sum.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ManifoldExpr parse() {
    ManifoldExpr e = parse_term();
    skip_ws();
    while (!done()) {
      expect('#');
      ManifoldExpr rhs = parse_term();
      e = ManifoldExpr(std::move(e), std::move(rhs));
      skip_ws();
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool done() const { return pos_ >= text_.size(); }

  char peek() {
    skip_ws();
    if (done()) throw parse_error("unexpected end of input", pos_);
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "', found '" +
                            text_[pos_] + "'",
                        pos_);
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (!done() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int64 parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (!done() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error("expected an integer", start);
    int64 v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    return neg ? checked_neg(v) : v;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    std::string name;
    while (!done() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    if (name.empty()) throw parse_error("expected SHS, SSF or TW", start);
    return name;
  }

  ManifoldExpr parse_term() {
    std::size_t start = pos_;
    std::string name = parse_name();
    expect('(');
    ManifoldExpr::Leaf leaf;
    if (name == "SHS") {
      SeifertHsSpec s;
      s.multiplicities.push_back(parse_int());
      expect(',');
      s.multiplicities.push_back(parse_int());
      while (try_consume(',')) s.multiplicities.push_back(parse_int());
      leaf = s;
    } else if (name == "SSF") {
      SmallSeifertSpec s{};
      s.p = parse_int();
      expect(',');
      s.q = parse_int();
      expect(',');
      s.r = parse_int();
      expect(';');
      s.a = parse_int();
      expect(',');
      s.b = parse_int();
      expect(',');
      s.c = parse_int();
      leaf = s;
    } else if (name == "TW") {
      int64 xi = parse_int();
      expect(';');
      int64 p = parse_int();
      expect('/');
      int64 q = parse_int();
      leaf = make_twist(xi, p, q);
    } else {
      throw parse_error("unknown manifold family '" + name + "'", start);
    }
    expect(')');
    return ManifoldExpr(std::visit(
        [](const auto& s) -> ManifoldExpr::Leaf { return validate(s); }, leaf));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and validates a connected-sum expression.
inline ManifoldExpr parse_manifold_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

}  // namespace casson
