#pragma once

// Laurent polynomials in q with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqalt {

class LaurentQ {
public:
  LaurentQ() = default;
  LaurentQ(long v) { // NOLINT(google-explicit-constructor)
    if (v != 0) c_.emplace_back(v);
  }
  LaurentQ(const mpz_class &v) { // NOLINT(google-explicit-constructor)
    if (v != 0) c_.push_back(v);
  }

  static LaurentQ monomial(const mpz_class &c, int e) {
    LaurentQ r(c);
    r.low_ = c == 0 ? 0 : e;
    return r;
  }
  static LaurentQ q_pow(int e) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }
  bool is_monomial() const { return c_.size() == 1; }
  // Lowest/highest exponent; meaningless for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t span() const { return c_.size(); }

  mpz_class coeff(int e) const {
    if (c_.empty() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  const mpz_class &leading() const { return c_.back(); }
  const mpz_class &trailing() const { return c_.front(); }

  template <class F> void for_each_term(F &&f) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) f(low_ + static_cast<int>(i), c_[i]);
  }

  LaurentQ operator-() const {
    LaurentQ r = *this;
    for (auto &x : r.c_) x = -x;
    return r;
  }

  LaurentQ &operator+=(const LaurentQ &o) { return accumulate(o, 1); }
  LaurentQ &operator-=(const LaurentQ &o) { return accumulate(o, -1); }

  friend LaurentQ operator+(LaurentQ a, const LaurentQ &b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ &b) { return a -= b; }

  friend LaurentQ operator*(const LaurentQ &a, const LaurentQ &b) {
    LaurentQ r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  LaurentQ &operator*=(const LaurentQ &o) { return *this = *this * o; }

  LaurentQ scaled(const mpz_class &s) const {
    if (s == 0) return {};
    LaurentQ r = *this;
    for (auto &x : r.c_) x *= s;
    return r;
  }
  LaurentQ shifted(int e) const {
    LaurentQ r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
  }
  // q -> q^{-1}
  LaurentQ inverted_q() const {
    LaurentQ r;
    if (is_zero()) return r;
    r.c_.assign(c_.rbegin(), c_.rend());
    r.low_ = -high();
    return r;
  }

  friend bool operator==(const LaurentQ &a, const LaurentQ &b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentQ &a, const LaurentQ &b) { return !(a == b); }

  // Total order used only for canonical containers.
  friend bool operator<(const LaurentQ &a, const LaurentQ &b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto &x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
  }

  // Exact quotient a / b in Z[q, q^-1]; throws if b does not divide a.
  static LaurentQ divexact(const LaurentQ &a, const LaurentQ &b) {
    if (b.is_zero()) throw std::domain_error("LaurentQ: division by zero");
    if (a.is_zero()) return {};
    if (b.c_.size() == 1) {
      LaurentQ r;
      r.low_ = a.low_ - b.low_;
      r.c_.reserve(a.c_.size());
      for (const auto &x : a.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
          throw std::domain_error("LaurentQ: inexact division");
        mpz_class y;
        mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
        r.c_.push_back(std::move(y));
      }
      return r;
    }
    if (a.c_.size() < b.c_.size()) throw std::domain_error("LaurentQ: inexact division");
    std::vector<mpz_class> rem = a.c_;
    const std::size_t n = a.c_.size(), m = b.c_.size();
    std::vector<mpz_class> quo(n - m + 1);
    const mpz_class &lb = b.c_.back();
    for (std::size_t k = n - m + 1; k-- > 0;) {
      mpz_class &top = rem[k + m - 1];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
        throw std::domain_error("LaurentQ: inexact division");
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
      for (std::size_t j = 0; j < m; ++j) rem[k + j] -= f * b.c_[j];
      quo[k] = std::move(f);
    }
    for (const auto &x : rem)
      if (x != 0) throw std::domain_error("LaurentQ: inexact division");
    LaurentQ r;
    r.low_ = a.low_ - b.low_;
    r.c_ = std::move(quo);
    r.trim();
    return r;
  }

  // Greatest common divisor in Z[q, q^-1], normalized to lowest exponent 0 and
  // positive leading coefficient.
  static LaurentQ gcd(const LaurentQ &a, const LaurentQ &b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.unit_normal();
    if (b.is_zero()) return a.unit_normal();
    mpz_class cg;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.c_.size() == 1 || b.c_.size() == 1) return LaurentQ(cg);
    std::vector<mpz_class> A = primitive(a.c_), B = primitive(b.c_);
    if (A.size() < B.size()) std::swap(A, B);
    while (B.size() > 1) {
      std::vector<mpz_class> R = prem(A, B);
      A = std::move(B);
      B = R.empty() ? R : primitive(R);
      if (B.empty()) break;
    }
    LaurentQ g;
    if (B.size() == 1) {
      g = LaurentQ(cg);
    } else {
      g.c_ = primitive(A);
      g.trim();
      g = g.scaled(cg);
    }
    return g.unit_normal();
  }

  // Multiply by the unit +-q^k that puts the lowest exponent at 0 and makes
  // the leading coefficient positive.
  LaurentQ unit_normal() const {
    if (is_zero()) return {};
    LaurentQ r = *this;
    r.low_ = 0;
    if (r.c_.back() < 0)
      for (auto &x : r.c_) x = -x;
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const mpz_class &x = c_[i];
      if (x == 0) continue;
      const int e = low_ + static_cast<int>(i);
      mpz_class mag = abs(x);
      if (first) {
        if (x < 0) os << '-';
      } else {
        os << (x < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      os << 'q';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(low_);
    for (const auto &x : c_)
      h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(x.get_mpz_t()));
    return h;
  }

private:
  int low_ = 0;
  std::vector<mpz_class> c_;

  void trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    while (c_.back() == 0) c_.pop_back();
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
  }

  LaurentQ &accumulate(const LaurentQ &o, int sign) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = sign > 0 ? o : -o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
      c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
      low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      auto &dst = c_[static_cast<std::size_t>(o.low_ - low_) + j];
      if (sign > 0)
        dst += o.c_[j];
      else
        dst -= o.c_[j];
    }
    trim();
    return *this;
  }

  static std::vector<mpz_class> primitive(std::vector<mpz_class> v) {
    mpz_class g = 0;
    for (const auto &x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
      for (auto &x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }

  // Pseudo-remainder of dense polynomials (index = degree), deg A >= deg B.
  static std::vector<mpz_class> prem(std::vector<mpz_class> A, const std::vector<mpz_class> &B) {
    const std::size_t m = B.size();
    const mpz_class &lb = B.back();
    while (A.size() >= m) {
      const mpz_class lead = A.back();
      const std::size_t shift = A.size() - m;
      for (auto &x : A) x *= lb;
      for (std::size_t j = 0; j < m; ++j) A[shift + j] -= lead * B[j];
      while (!A.empty() && A.back() == 0) A.pop_back();
    }
    return A;
  }
};

inline std::ostream &operator<<(std::ostream &os, const LaurentQ &p) { return os << p.to_string(); }

} // namespace uqalt
