#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "kms/exact/scalar.hpp"

namespace kms {

namespace detail {

class ScalarParser {
 public:
  ScalarParser(std::string_view s, const FieldPtr& f) : s_(s), f_(f) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, msg + " in '" + std::string(s_) + "' at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) error("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar b = primary();
    if (!eat('^')) return b;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer exponent");
    const long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    Scalar r(1L);
    for (long i = 0; i < e; ++i) r = r * b;
    if (neg) {
      if (r.is_zero()) error("zero to a negative power");
      r = r.inverse();
    }
    return r;
  }
  Scalar primary() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (pos_ >= s_.size()) error("unexpected end of input");
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(c) || c == '_' || c >= 0x80) {
      std::size_t start = pos_;
      while (pos_ < s_.size()) {
        const unsigned char d = static_cast<unsigned char>(s_[pos_]);
        if (std::isalnum(d) || d == '_' || d >= 0x80) ++pos_;
        else break;
      }
      const std::string name(s_.substr(start, pos_ - start));
      if (f_ && f_->has_parameter() && name == f_->parameter()) return Scalar::parameter(f_);
      if (f_ && f_->has_generator() && name == f_->generator()) return Scalar::generator(f_);
      error("unknown symbol '" + name + "'");
    }
    error("unexpected character");
  }

  std::string_view s_;
  FieldPtr f_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses strings such as "p/q", "(3*t-1)/2" or "θ^2/3" in field `f`.
inline Scalar parse_scalar(std::string_view s, const FieldPtr& f = nullptr) {
  return detail::ScalarParser(s, f).parse();
}

}  // namespace kms
