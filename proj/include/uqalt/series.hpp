#pragma once

// Laurent polynomials in two commuting spectral variables u, v with
// half-integer exponents and coefficients in an operator algebra C.
// Exponents are stored doubled. An optional floor on the doubled total
// exponent a+b drops low-order terms; dropping a nonzero term is recorded.
//
// Truncating at the floor is exact as long as every factor has only terms
// of nonpositive total exponent, which holds for all matrices built here.

#include "uqalt/rational.hpp"

#include <compare>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace uqalt {

struct Exp2 {
  int a2 = 0, b2 = 0; // doubled exponents of u and v
  auto operator<=>(const Exp2 &) const = default;
  int total2() const { return a2 + b2; }
};

inline constexpr int kNoFloor = std::numeric_limits<int>::min();

// Coefficient product with a scalar kept on the left.
template <class A, class B> auto coeff_mul(const A &a, const B &b) {
  if constexpr (std::is_same_v<B, RationalQ> && !std::is_same_v<A, RationalQ>)
    return b * a;
  else
    return a * b;
}

template <class C> class Series2 {
public:
  using Map = std::map<Exp2, C>;

  Series2() = default;
  explicit Series2(int floor2) : floor2_(floor2) {}

  static Series2 monomial(Exp2 e, const C &c, int floor2 = kNoFloor) {
    Series2 s(floor2);
    s.add_term(e, c);
    return s;
  }

  const Map &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int floor2() const { return floor2_; }
  bool discarded() const { return discarded_; }
  void mark_discarded() { discarded_ = true; }
  bool keeps(Exp2 e) const { return floor2_ == kNoFloor || e.total2() >= floor2_; }

  void set_floor(int floor2) {
    floor2_ = floor2;
    for (auto it = terms_.begin(); it != terms_.end();)
      if (!keeps(it->first)) {
        discarded_ = true;
        it = terms_.erase(it);
      } else
        ++it;
  }

  void add_term(Exp2 e, const C &c) {
    if (c.is_zero()) return;
    if (!keeps(e)) {
      discarded_ = true;
      return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  // Coefficient at e, or nullptr when absent.
  const C *find(Exp2 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Series2 &operator+=(const Series2 &o) {
    merge_floor(o);
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Series2 &operator-=(const Series2 &o) {
    merge_floor(o);
    for (const auto &[e, c] : o.terms_) add_term(e, RationalQ(-1) * c);
    return *this;
  }
  friend Series2 operator+(Series2 a, const Series2 &b) { return a += b; }
  friend Series2 operator-(Series2 a, const Series2 &b) { return a -= b; }
  Series2 operator-() const { return map_coeffs([](const C &c) { return RationalQ(-1) * c; }); }
  friend Series2 operator*(const RationalQ &s, const Series2 &x) {
    return x.map_coeffs([&](const C &c) { return s * c; });
  }

  template <class F> Series2 map_coeffs(F &&f) const {
    Series2 r(floor2_);
    r.discarded_ = discarded_;
    for (const auto &[e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Multiply by the monomial u^{a2/2} v^{b2/2}.
  Series2 shifted(Exp2 by) const {
    Series2 r(floor2_ == kNoFloor ? kNoFloor : floor2_ + by.total2());
    r.discarded_ = discarded_;
    for (const auto &[e, c] : terms_) r.add_term({e.a2 + by.a2, e.b2 + by.b2}, c);
    return r;
  }

  // u -> q^s u (and v -> q^t v); exponents must be integers.
  Series2 rescaled(int s, int t) const {
    return map_terms([&](Exp2 e, const C &c) {
      if ((s != 0 && e.a2 % 2) || (t != 0 && e.b2 % 2))
        throw std::invalid_argument("rescaling a half-integer exponent by a power of q");
      return RationalQ::q_pow(s * e.a2 / 2 + t * e.b2 / 2) * c;
    });
  }

  Series2 swapped_vars() const {
    Series2 r(floor2_);
    r.discarded_ = discarded_;
    for (const auto &[e, c] : terms_) r.add_term({e.b2, e.a2}, c);
    return r;
  }

  // Substitute v -> u.
  Series2 diagonal() const {
    Series2 r(floor2_);
    r.discarded_ = discarded_;
    for (const auto &[e, c] : terms_) r.add_term({e.a2 + e.b2, 0}, c);
    return r;
  }

  // Sum of all coefficients (evaluation at u = v = 1).
  C at_one(const C &zero) const {
    C s = zero;
    for (const auto &[e, c] : terms_) s = s + c;
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &[e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + monomial_string(e) + "](" + c.to_string() + ")";
    }
    return s;
  }

  static std::string monomial_string(Exp2 e) {
    auto half = [](int x2) { return x2 % 2 == 0 ? std::to_string(x2 / 2) : std::to_string(x2) + "/2"; };
    return "u^" + half(e.a2) + " v^" + half(e.b2);
  }

  friend bool operator==(const Series2 &a, const Series2 &b) { return a.terms_ == b.terms_; }

private:
  template <class F> Series2 map_terms(F &&f) const {
    Series2 r(floor2_);
    r.discarded_ = discarded_;
    for (const auto &[e, c] : terms_) r.add_term(e, f(e, c));
    return r;
  }

  void merge_floor(const Series2 &o) {
    discarded_ = discarded_ || o.discarded_;
    if (o.floor2_ > floor2_) set_floor(o.floor2_);
  }

  Map terms_;
  int floor2_ = kNoFloor;
  bool discarded_ = false;

  template <class> friend class Series2;
};

template <class A, class B> auto operator*(const Series2<A> &x, const Series2<B> &y) {
  using C = decltype(coeff_mul(std::declval<A>(), std::declval<B>()));
  const int floor2 = std::max(x.floor2(), y.floor2());
  Series2<C> r(floor2);
  if (x.discarded() || y.discarded()) r.mark_discarded();
  for (const auto &[ex, cx] : x.terms())
    for (const auto &[ey, cy] : y.terms()) {
      const Exp2 e{ex.a2 + ey.a2, ex.b2 + ey.b2};
      if (!r.keeps(e)) {
        r.mark_discarded();
        continue;
      }
      r.add_term(e, coeff_mul(cx, cy));
    }
  return r;
}

// Square matrix of series, row-major.
template <class C> class SeriesMat {
public:
  using Entry = Series2<C>;

  SeriesMat() = default;
  explicit SeriesMat(int n, int floor2 = kNoFloor) : n_(n), e_(static_cast<std::size_t>(n * n), Entry(floor2)) {}

  int size() const { return n_; }
  Entry &operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Entry &operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }

  bool is_zero() const {
    for (const auto &x : e_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool discarded() const {
    for (const auto &x : e_)
      if (x.discarded()) return true;
    return false;
  }
  std::size_t nonzero_terms() const {
    std::size_t n = 0;
    for (const auto &x : e_) n += x.terms().size();
    return n;
  }

  template <class F> SeriesMat map_entries(F &&f) const {
    SeriesMat r = *this;
    for (auto &x : r.e_) x = f(x);
    return r;
  }

  SeriesMat &operator+=(const SeriesMat &o) {
    check_size(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  SeriesMat &operator-=(const SeriesMat &o) {
    check_size(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend SeriesMat operator+(SeriesMat a, const SeriesMat &b) { return a += b; }
  friend SeriesMat operator-(SeriesMat a, const SeriesMat &b) { return a -= b; }
  friend SeriesMat operator*(const RationalQ &s, const SeriesMat &m) {
    return m.map_entries([&](const Entry &x) { return s * x; });
  }
  friend bool operator==(const SeriesMat &a, const SeriesMat &b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  // First nonzero entry, for failure reports.
  std::string first_nonzero() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!(*this)(i, j).is_zero()) {
          std::string s = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + (*this)(i, j).to_string();
          return s.size() > 400 ? s.substr(0, 400) + "..." : s;
        }
    return "";
  }

  void check_size(const SeriesMat &o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  }

private:
  int n_ = 0;
  std::vector<Entry> e_;
};

template <class A, class B> auto operator*(const SeriesMat<A> &x, const SeriesMat<B> &y) {
  using C = decltype(coeff_mul(std::declval<A>(), std::declval<B>()));
  if (x.size() != y.size()) throw std::invalid_argument("matrix size mismatch");
  const int n = x.size();
  SeriesMat<C> r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Series2<C> acc;
      bool first = true;
      for (int k = 0; k < n; ++k) {
        if (x(i, k).is_zero() || y(k, j).is_zero()) {
          if (x(i, k).discarded() || y(k, j).discarded()) acc.mark_discarded();
          continue;
        }
        auto p = x(i, k) * y(k, j);
        if (first) {
          if (acc.discarded()) p.mark_discarded();
          acc = std::move(p);
          first = false;
        } else
          acc += p;
      }
      r(i, j) = std::move(acc);
    }
  return r;
}

// Scalar matrix helpers.
using ScalarSeries = Series2<RationalQ>;
using ScalarMat = SeriesMat<RationalQ>;

inline ScalarSeries sconst(const RationalQ &c) { return ScalarSeries::monomial({0, 0}, c); }
inline ScalarSeries smono(Exp2 e, const RationalQ &c = RationalQ(1)) { return ScalarSeries::monomial(e, c); }

inline ScalarMat identity_mat(int n) {
  ScalarMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = sconst(1);
  return m;
}

// A (x) I_2 and I_2 (x) A for a 2x2 matrix A.
template <class C> SeriesMat<C> kron_left(const SeriesMat<C> &a) {
  SeriesMat<C> r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(2 * i + k, 2 * j + k) = a(i, j);
  return r;
}
template <class C> SeriesMat<C> kron_right(const SeriesMat<C> &a) {
  SeriesMat<C> r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r(2 * k + i, 2 * k + j) = a(i, j);
  return r;
}

// A 4x4 matrix acting on tensor factors (s, t) of a three-fold product, s < t.
template <class C> SeriesMat<C> embed3(const SeriesMat<C> &a, int s, int t) {
  SeriesMat<C> r(8);
  const int other = 3 - s - t;
  auto bit = [](int idx, int f) { return (idx >> (2 - f)) & 1; };
  for (int row = 0; row < 8; ++row)
    for (int col = 0; col < 8; ++col) {
      if (bit(row, other) != bit(col, other)) continue;
      const int i = 2 * bit(row, s) + bit(row, t), j = 2 * bit(col, s) + bit(col, t);
      r(row, col) = a(i, j);
    }
  return r;
}

} // namespace uqalt
