#pragma once

// The field Q(q): reduced fractions of Laurent polynomials.

#include "laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uqalt {

class RationalQ {
public:
  RationalQ() : den_(1) {}
  RationalQ(long v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
  RationalQ(const mpz_class &v) : num_(v), den_(1) {} // NOLINT(google-explicit-constructor)
  RationalQ(LaurentQ p) : num_(std::move(p)), den_(1) {} // NOLINT(google-explicit-constructor)
  RationalQ(LaurentQ n, LaurentQ d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
    normalize();
  }

  static RationalQ q_pow(int e) { return RationalQ(LaurentQ::q_pow(e)); }
  static RationalQ q() { return q_pow(1); }

  const LaurentQ &num() const { return num_; }
  const LaurentQ &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalQ operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalQ operator+(const RationalQ &a, const RationalQ &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      RationalQ r;
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.normalize();
      return r;
    }
    return RationalQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalQ operator-(const RationalQ &a, const RationalQ &b) { return a + (-b); }

  friend RationalQ operator*(const RationalQ &a, const RationalQ &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalQ(a.num_ * b.num_);
    // Cross-cancel first to keep intermediate sizes down.
    LaurentQ g1 = LaurentQ::gcd(a.num_, b.den_);
    LaurentQ g2 = LaurentQ::gcd(b.num_, a.den_);
    RationalQ r;
    r.num_ = LaurentQ::divexact(a.num_, g1) * LaurentQ::divexact(b.num_, g2);
    r.den_ = LaurentQ::divexact(a.den_, g2) * LaurentQ::divexact(b.den_, g1);
    r.fix_units();
    return r;
  }

  RationalQ inverse() const {
    if (is_zero()) throw std::domain_error("RationalQ: division by zero");
    RationalQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_units();
    return r;
  }

  friend RationalQ operator/(const RationalQ &a, const RationalQ &b) { return a * b.inverse(); }

  RationalQ &operator+=(const RationalQ &o) { return *this = *this + o; }
  RationalQ &operator-=(const RationalQ &o) { return *this = *this - o; }
  RationalQ &operator*=(const RationalQ &o) { return *this = *this * o; }
  RationalQ &operator/=(const RationalQ &o) { return *this = *this / o; }

  friend bool operator==(const RationalQ &a, const RationalQ &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalQ &a, const RationalQ &b) { return !(a == b); }
  friend bool operator<(const RationalQ &a, const RationalQ &b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  // q -> q^{-1}
  RationalQ inverted_q() const { return RationalQ(num_.inverted_q(), den_.inverted_q()); }

  RationalQ pow(int n) const {
    RationalQ base = n < 0 ? inverse() : *this;
    unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
    RationalQ r(1);
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  // Re-reduce; a no-op on values built through the public API.
  RationalQ normalized() const { return RationalQ(num_, den_); }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

private:
  LaurentQ num_;
  LaurentQ den_;

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentQ(1);
      return;
    }
    LaurentQ g = LaurentQ::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = LaurentQ::divexact(num_, g);
      den_ = LaurentQ::divexact(den_, g);
    }
    fix_units();
  }

  // Move the unit +-q^k from the denominator to the numerator.
  void fix_units() {
    if (num_.is_zero()) {
      den_ = LaurentQ(1);
      return;
    }
    const int sh = den_.low();
    if (sh != 0) {
      den_ = den_.shifted(-sh);
      num_ = num_.shifted(-sh);
    }
    if (den_.leading() < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }
};

inline std::ostream &operator<<(std::ostream &os, const RationalQ &x) { return os << x.to_string(); }

inline RationalQ qint(int n) {
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
  LaurentQ r;
  const int m = n < 0 ? -n : n;
  for (int k = 0; k < m; ++k) r += LaurentQ::q_pow(m - 1 - 2 * k);
  return n < 0 ? RationalQ(-r) : RationalQ(r);
}

// q^{-1}(q^2 - q^{-2})^2
inline RationalQ rho_bar() {
  RationalQ d = RationalQ::q_pow(2) - RationalQ::q_pow(-2);
  return RationalQ::q_pow(-1) * d * d;
}

// q - q^{-1}
inline RationalQ qdiff() { return RationalQ::q() - RationalQ::q_pow(-1); }
// q + q^{-1}
inline RationalQ qsum() { return RationalQ::q() + RationalQ::q_pow(-1); }

namespace detail {

class ScalarParser {
public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  RationalQ parse() {
    RationalQ r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + what +
                                " at offset " + std::to_string(pos_));
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
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  // expr := ['-'] term (('+'|'-') term)*
  RationalQ expr() {
    RationalQ acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = neg ? -term() : term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
  // term := factor (('*'|'/') factor)*
  RationalQ term() {
    RationalQ acc = factor();
    for (;;) {
      if (eat('*'))
        acc *= factor();
      else if (eat('/'))
        acc /= factor();
      else
        return acc;
    }
  }
  // factor := integer | 'q' ['^' signed-int] | '(' expr ')' ['^' signed-int]
  RationalQ factor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalQ r = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) r = r.pow(signed_int());
      return r;
    }
    if (c == 'q') {
      ++pos_;
      int e = 1;
      if (eat('^')) e = signed_int();
      return RationalQ::q_pow(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalQ(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }
  int signed_int() {
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -v : v;
  }
};

} // namespace detail

// Accepts the rendering grammar: sums of c*q^k, optionally "(num)/(den)".
inline RationalQ parse_rational(std::string_view s) { return detail::ScalarParser(s).parse(); }

} // namespace uqalt
