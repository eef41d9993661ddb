#pragma once

// Free noncommutative polynomials over Q(q) on a finite ordered alphabet.

#include "rational.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqalt {

class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty() || names_.size() > 255) throw std::invalid_argument("Alphabet: bad size");
  }
  std::size_t size() const { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  int index_of(const std::string &n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }

  // The alphabet {y0 < y1}.
  static std::shared_ptr<const Alphabet> y01() {
    static const auto a = std::make_shared<const Alphabet>(std::vector<std::string>{"y0", "y1"});
    return a;
  }

private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
using Word = std::vector<std::uint8_t>;

// Graded lexicographic: shorter words first, then letterwise.
struct GradedLex {
  bool operator()(const Word &a, const Word &b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCPoly {
public:
  using Terms = std::map<Word, RationalQ, GradedLex>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr a) : alpha_(std::move(a)) {}
  NCPoly(AlphabetPtr a, const RationalQ &c) : alpha_(std::move(a)) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
  }

  static NCPoly letter(const AlphabetPtr &a, std::size_t i, const RationalQ &c = RationalQ(1)) {
    if (i >= a->size()) throw std::out_of_range("NCPoly: letter outside alphabet");
    return word(a, Word{static_cast<std::uint8_t>(i)}, c);
  }
  static NCPoly word(const AlphabetPtr &a, Word w, const RationalQ &c = RationalQ(1)) {
    NCPoly p(a);
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
  }
  static NCPoly one(const AlphabetPtr &a) { return NCPoly(a, RationalQ(1)); }

  const AlphabetPtr &alphabet() const { return alpha_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RationalQ coeff(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalQ() : it->second;
  }

  void add_term(const Word &w, const RationalQ &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto &[w, c] : r.terms_) c = -c;
    return r;
  }
  NCPoly &operator+=(const NCPoly &o) {
    adopt(o);
    for (const auto &[w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPoly &operator-=(const NCPoly &o) {
    adopt(o);
    for (const auto &[w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }

  friend NCPoly operator*(const NCPoly &a, const NCPoly &b) {
    NCPoly r(a.alpha_);
    r.adopt(b);
    for (const auto &[wa, ca] : a.terms_)
      for (const auto &[wb, cb] : b.terms_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }
  NCPoly &operator*=(const NCPoly &o) { return *this = *this * o; }

  friend NCPoly operator*(const RationalQ &s, const NCPoly &p) {
    NCPoly r(p.alpha_);
    if (s.is_zero()) return r;
    for (const auto &[w, c] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), w, s * c);
    return r;
  }
  friend NCPoly operator*(const NCPoly &p, const RationalQ &s) { return s * p; }

  friend bool operator==(const NCPoly &a, const NCPoly &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly &a, const NCPoly &b) { return !(a == b); }

  // Apply f coefficientwise.
  template <class F> NCPoly map_coeffs(F &&f) const {
    NCPoly r(alpha_);
    for (const auto &[w, c] : terms_) r.add_term(w, f(c));
    return r;
  }
  // Apply a letter permutation / word transformation, summing collisions.
  template <class F> NCPoly map_words(F &&f) const {
    NCPoly r(alpha_);
    for (const auto &[w, c] : terms_) r.add_term(f(w), c);
    return r;
  }

  // Letter counts of a word.
  std::vector<int> multidegree(const Word &w) const {
    std::vector<int> d(alpha_ ? alpha_->size() : 0, 0);
    for (auto l : w) ++d.at(l);
    return d;
  }
  // Common multidegree of all terms; throws if inhomogeneous.
  std::vector<int> homogeneous_degree() const {
    if (terms_.empty()) throw std::logic_error("NCPoly: zero has no degree");
    std::vector<int> d = multidegree(terms_.begin()->first);
    for (const auto &[w, c] : terms_)
      if (multidegree(w) != d) throw std::logic_error("NCPoly: not homogeneous");
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::vector<int> d = multidegree(terms_.begin()->first);
    for (const auto &[w, c] : terms_)
      if (multidegree(w) != d) return false;
    return true;
  }

  std::string word_string(const Word &w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += alpha_->name(w[i]);
    }
    return s;
  }

  // "coeff * g1.g2" per term in term order; compound coefficients parenthesized.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[w, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      std::string cs = c.to_string();
      bool simple = c.is_laurent() && c.num().span() == 1;
      s += simple ? cs : "(" + cs + ")";
      s += " * ";
      s += word_string(w);
    }
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &[w, c] : terms_) {
      nlohmann::json letters = nlohmann::json::array();
      for (auto l : w) letters.push_back(alpha_->name(l));
      arr.push_back({{"word", letters}, {"coeff", c.to_string()}});
    }
    return arr;
  }

private:
  AlphabetPtr alpha_;
  Terms terms_;

  void adopt(const NCPoly &o) {
    if (!o.alpha_) return;
    if (!alpha_) {
      alpha_ = o.alpha_;
      return;
    }
    if (alpha_ != o.alpha_) throw std::invalid_argument("NCPoly: alphabet mismatch");
  }
};

inline std::ostream &operator<<(std::ostream &os, const NCPoly &p) { return os << p.to_string(); }

// Algebra-generic commutators. T needs +, -, * and scalar * T.
template <class T> T qcomm(const T &a, const T &b) {
  return RationalQ::q() * (a * b) - RationalQ::q_pow(-1) * (b * a);
}
// [a, b]_{q^{-1}}
template <class T> T qinvcomm(const T &a, const T &b) {
  return RationalQ::q_pow(-1) * (a * b) - RationalQ::q() * (b * a);
}
template <class T> T comm(const T &a, const T &b) { return a * b - b * a; }

// a^3 b - [3] a^2 b a + [3] a b a^2 - b a^3
template <class T> T serre_relator(const T &a, const T &b) {
  const RationalQ c3 = qint(3);
  T a2 = a * a;
  T a3 = a2 * a;
  return a3 * b - c3 * (a2 * b * a) + c3 * (a * b * a2) - b * a3;
}

// Swap y0 <-> y1 on every word (two-letter alphabets).
inline NCPoly sigma_words(const NCPoly &p) {
  return p.map_words([](Word w) {
    for (auto &l : w) l = static_cast<std::uint8_t>(1 - l);
    return w;
  });
}
// Reverse every word.
inline NCPoly reverse_words(const NCPoly &p) {
  return p.map_words([](Word w) {
    std::reverse(w.begin(), w.end());
    return w;
  });
}

} // namespace uqalt
