#include "resloc/tau.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace resloc {

namespace {

constexpr int kMaxExponent = 256;

class Parser {
 public:
  Parser(std::string_view text, int m) : text_(text), m_(m) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer(int limit) {
    const std::size_t start = pos_;
    Int v = integer();
    if (v > limit) {
      pos_ = start;
      fail("integer too large (limit " + std::to_string(limit) + ")");
    }
    return static_cast<int>(v.get_si());
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (accept('*')) p = p * unary();
    return p;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) return base.pow(static_cast<unsigned>(small_integer(kMaxExponent)));
    return base;
  }

  std::vector<int> arguments() {
    expect('(');
    std::vector<int> out;
    if (accept(')')) return out;
    do {
      out.push_back(small_integer(kMaxExponent));
    } while (accept(','));
    expect(')');
    return out;
  }

  Poly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(m_, Rat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return named();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Poly named() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.size() > 1 && name[0] == 'q' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const long k = std::stol(name.substr(1));
      if (k < 1 || k > m_) {
        pos_ = start;
        fail("variable " + name + " is not among q1..q" + std::to_string(m_));
      }
      return Poly::variable(m_, static_cast<int>(k - 1));
    }
    if (name == "sigma") {
      const std::size_t at = pos_;
      std::vector<int> lambda = arguments();
      for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) {
          pos_ = at;
          fail("sigma needs non-increasing parts");
        }
      return schur_polynomial(m_, lambda);
    }
    if (name == "c_top_sym") {
      const std::size_t at = pos_;
      std::vector<int> args = arguments();
      if (args.size() != 1 || args[0] < 1) {
        pos_ = at;
        fail("c_top_sym takes one positive integer");
      }
      if (m_ != 2) {
        pos_ = start;
        fail("c_top_sym is only defined for m = 2");
      }
      return sym_power_top_chern(args[0]).poly();
    }
    pos_ = start;
    fail("unknown name '" + name + "'");
  }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace

SymPoly parse_tau(std::string_view text, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "tau needs m >= 1");
  return SymPoly(Parser(text, m).parse());
}

}  // namespace resloc
