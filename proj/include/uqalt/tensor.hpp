#pragma once

// Tensor products with a Drinfeld-algebra left factor: sum of DrMono (x) R.
// R is any coefficient ring (QElem, or another DrTensor for three factors).

#include "uqalt/drinfeld.hpp"

#include <map>
#include <string>

namespace uqalt {

template <class R> class DrTensor {
public:
  using Terms = std::map<DrMono, R>;

  DrTensor() = default;
  explicit DrTensor(const DrinfeldEngine *e) : eng_(e) {}

  // a (x) r
  static DrTensor pure(const DrinfeldElement &a, const R &r) {
    DrTensor t(a.engine());
    if (r.is_zero()) return t;
    for (const auto &[m, c] : a.terms()) t.add(m, c * r);
    return t;
  }

  const DrinfeldEngine *engine() const { return eng_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const DrMono &m, const R &r) {
    if (r.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(m, r);
    if (!ins) {
      it->second = it->second + r;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DrTensor &operator+=(const DrTensor &o) {
    if (!eng_) eng_ = o.eng_;
    for (const auto &[m, r] : o.terms_) add(m, r);
    return *this;
  }
  DrTensor &operator-=(const DrTensor &o) {
    if (!eng_) eng_ = o.eng_;
    for (const auto &[m, r] : o.terms_) add(m, RationalQ(-1) * r);
    return *this;
  }
  friend DrTensor operator+(DrTensor a, const DrTensor &b) { return a += b; }
  friend DrTensor operator-(DrTensor a, const DrTensor &b) { return a -= b; }
  DrTensor operator-() const { return RationalQ(-1) * *this; }

  friend DrTensor operator*(const RationalQ &s, const DrTensor &x) {
    DrTensor r(x.eng_);
    if (s.is_zero()) return r;
    for (const auto &[m, v] : x.terms_) r.add(m, s * v);
    return r;
  }

  friend DrTensor operator*(const DrTensor &a, const DrTensor &b) {
    DrTensor r(a.eng_ ? a.eng_ : b.eng_);
    for (const auto &[ma, ra] : a.terms_)
      for (const auto &[mb, rb] : b.terms_) {
        const R rr = ra * rb;
        if (rr.is_zero()) continue;
        DrinfeldElement x(r.eng_), y(r.eng_);
        x.add(ma, RationalQ(1));
        y.add(mb, RationalQ(1));
        const DrinfeldElement xy = x * y;
        for (const auto &[m, c] : xy.terms()) r.add(m, c * rr);
      }
    return r;
  }

  friend bool operator==(const DrTensor &a, const DrTensor &b) { return a.terms_ == b.terms_; }

  // Apply a map to the left factor: f(DrinfeldElement) -> DrinfeldElement.
  template <class F> DrTensor map_left(F &&f) const {
    DrTensor r(eng_);
    for (const auto &[m, v] : terms_) {
      DrinfeldElement x(eng_);
      x.add(m, RationalQ(1));
      const DrinfeldElement fx = f(x);
      for (const auto &[m2, c] : fx.terms()) r.add(m2, c * v);
    }
    return r;
  }

  // Apply a map to the right factor: f(R) -> R2.
  template <class F> auto map_right(F &&f) const {
    using R2 = decltype(f(std::declval<const R &>()));
    DrTensor<R2> r(eng_);
    for (const auto &[m, v] : terms_) r.add(m, f(v));
    return r;
  }

  // Counit on the left factor.
  R counit_left(const R &zero) const {
    R s = zero;
    for (const auto &[m, v] : terms_) {
      DrinfeldElement x(eng_);
      x.add(m, RationalQ(1));
      const RationalQ c = x.counit();
      if (!c.is_zero()) s = s + c * v;
    }
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, v] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += DrinfeldElement::mono_string(m) + " (x) (" + v.to_string() + ")";
    }
    return s;
  }

private:
  const DrinfeldEngine *eng_ = nullptr;
  Terms terms_;
};

} // namespace uqalt
