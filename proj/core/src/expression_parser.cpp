#include "iwk/expression_parser.hpp"

#include <cctype>
#include <string>

#include "iwk/error.hpp"
#include "iwk/lambda_ring.hpp"

namespace iwk {
namespace {

// Recursive descent over the polynomial and matrix grammars.
class Parser {
 public:
  Parser(const PrimeContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  LambdaElement polynomial() {
    LambdaElement f = expr();
    expect_end();
    return f;
  }

  LambdaMatrix matrix() {
    skip();
    LambdaMatrix m;
    if (accept_word("diag")) {
      expect('(');
      LambdaElement d1 = expr();
      expect(',');
      LambdaElement d2 = expr();
      expect(')');
      m = LambdaMatrix::diag(std::move(d1), std::move(d2));
    } else if (accept_word("I")) {
      m = LambdaMatrix::identity();
    } else {
      expect('[');
      auto [a, c] = row();
      expect(',');
      auto [b, d] = row();
      expect(']');
      m = LambdaMatrix(std::move(a), std::move(c), std::move(b), std::move(d));
    }
    expect_end();
    return m;
  }

 private:
  std::pair<LambdaElement, LambdaElement> row() {
    expect('[');
    LambdaElement x = expr();
    expect(',');
    LambdaElement y = expr();
    expect(']');
    return {std::move(x), std::move(y)};
  }

  LambdaElement expr() {
    LambdaElement acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  LambdaElement term() {
    LambdaElement acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (starts_atom()) {
        acc *= power();  // juxtaposition: 3X, 2(X+1)
      } else {
        return acc;
      }
    }
  }

  LambdaElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LambdaElement power() {
    LambdaElement base = atom();
    if (accept('^')) {
      const long e = small_integer();
      if (e < 0 || e > 100000) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  LambdaElement atom() {
    skip();
    if (accept('(')) {
      LambdaElement inner = expr();
      expect(')');
      return inner;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LambdaElement::constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (accept_word("Phi")) return cyclotomic_phi(ctx_, level_argument());
    if (accept_word("omega")) return omega(ctx_, level_argument());
    if (accept_word("X") || accept_word("x")) return LambdaElement::x();
    fail("expected a number, X, Phi_m, omega_n or '('");
  }

  // Phi_2, Phi(2), omega_1, omega(1)
  int level_argument() {
    long m = 0;
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      m = small_integer();
    } else {
      expect('(');
      m = small_integer();
      expect(')');
    }
    if (m < 0 || m > 30) fail("level out of range");
    return static_cast<int>(m);
  }

  long small_integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a small non-negative integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'X' || c == 'x' || c == 'P' || c == 'o' || std::isdigit(static_cast<unsigned char>(c));
  }

  // Matches a keyword not followed by an identifier character.
  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::InvalidInput, what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  const PrimeContext& ctx_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LambdaElement parse_polynomial(const PrimeContext& ctx, std::string_view text) { return Parser(ctx, text).polynomial(); }

LambdaMatrix parse_matrix(const PrimeContext& ctx, std::string_view text) { return Parser(ctx, text).matrix(); }

}  // namespace iwk
