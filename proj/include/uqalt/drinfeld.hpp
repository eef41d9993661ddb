#pragma once

// Drinfeld's second realization: PBW straightening of words in x-_k, h_k, K^e,
// x+_k with central C^{1/2} and optional central symbols gamma_n.
//
// Letters are packed into int32 so that integer order is the PBW order
//   x-(ascending mode) < h(ascending mode) < K < x+(ascending mode).
// K exponents and C exponents are stored in half units.

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uqalt {

enum class DrKind : int { xminus = 0, h = 1, K = 2, xplus = 3 };

using Letter = std::int32_t;
using DrWord = std::vector<Letter>;

namespace dr {
inline constexpr int kBias = 1 << 12;
inline Letter make(DrKind k, int v) { return static_cast<int>(k) * (2 * kBias) + (v + kBias); }
inline DrKind kind(Letter l) { return static_cast<DrKind>(l / (2 * kBias)); }
inline int value(Letter l) { return l % (2 * kBias) - kBias; }
inline Letter xm(int k) { return make(DrKind::xminus, k); }
inline Letter xp(int k) { return make(DrKind::xplus, k); }
inline Letter h(int k) { return make(DrKind::h, k); }
inline Letter Kh(int e2) { return make(DrKind::K, e2); }

inline std::string half_string(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return "(" + std::to_string(e2) + "/2)";
}
inline std::string letter_string(Letter l) {
  const int v = value(l);
  switch (kind(l)) {
  case DrKind::xminus: return "x-[" + std::to_string(v) + "]";
  case DrKind::xplus: return "x+[" + std::to_string(v) + "]";
  case DrKind::h: return "h[" + std::to_string(v) + "]";
  case DrKind::K: return "K^" + half_string(v);
  }
  return "?";
}

struct WordHash {
  std::size_t operator()(const DrWord &w) const {
    std::size_t h = w.size();
    for (Letter l : w) h = h * 0x9E3779B97F4A7C15ull ^ static_cast<std::size_t>(l);
    return h;
  }
};
} // namespace dr

class WindowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A straightened word: normal-ordered letters with a C^{c2/2} shift.
struct DrTerm {
  DrWord w;
  int c2 = 0;
  RationalQ c;
};
using DrCombination = std::vector<DrTerm>;

// Monomial key of a DrinfeldElement: normal word, C exponent (half units), gamma exponents.
struct DrMono {
  DrWord w;
  int c2 = 0;
  std::vector<int> gam; // gam[n-1] = exponent of gamma_n; no trailing zeros

  friend bool operator<(const DrMono &a, const DrMono &b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    if (a.w != b.w) return a.w < b.w;
    if (a.c2 != b.c2) return a.c2 < b.c2;
    return a.gam < b.gam;
  }
  friend bool operator==(const DrMono &a, const DrMono &b) {
    return a.w == b.w && a.c2 == b.c2 && a.gam == b.gam;
  }
};

inline std::vector<int> add_gamma(const std::vector<int> &a, const std::vector<int> &b) {
  std::vector<int> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

enum class RewriteStrategy { leftmost, rightmost };

class DrinfeldEngine {
public:
  explicit DrinfeldEngine(int window = 6, RewriteStrategy s = RewriteStrategy::leftmost)
      : window_(window), strategy_(s) {
    if (window < 1) throw std::invalid_argument("DrinfeldEngine: window must be positive");
  }

  int window() const { return window_; }
  RewriteStrategy strategy() const { return strategy_; }

  void check_mode(int m, const char *what) const {
    if (m < -window_ || m > window_)
      throw WindowError(std::string(what) + " mode " + std::to_string(m) + " lies outside the window [-" +
                        std::to_string(window_) + "," + std::to_string(window_) + "]");
  }

  // Normal form of a word; memoized.
  std::shared_ptr<const DrCombination> straighten(const DrWord &w) const {
    {
      std::shared_lock lk(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return it->second;
    }
    auto res = std::make_shared<const DrCombination>(compute(w));
    std::unique_lock lk(mu_);
    auto [it, ins] = memo_.emplace(w, res);
    return it->second;
  }

  std::size_t memo_size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
  }

  // psi_m (m >= 0) and phi_m (m <= 0) as normal combinations; zero outside.
  const DrCombination &psi(int m) const { return cartan_current(m, true); }
  const DrCombination &phi(int m) const { return cartan_current(m, false); }

private:
  int window_;
  RewriteStrategy strategy_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<DrWord, std::shared_ptr<const DrCombination>, dr::WordHash> memo_;
  mutable std::mutex cur_mu_;
  mutable std::map<std::pair<int, bool>, std::shared_ptr<const DrCombination>> currents_;

  // A rewrite of an out-of-order adjacent pair: replacement letters, C shift, coefficient.
  struct Piece {
    DrWord w;
    int c2;
    RationalQ c;
  };

  static bool out_of_order(Letter a, Letter b) {
    if (a > b) return true;
    return dr::kind(a) == DrKind::K && dr::kind(b) == DrKind::K;
  }

  static RationalQ h_coeff(int a) { return qint(2 * a) / RationalQ(a); } // [2a]/a

  std::vector<Piece> rewrite(Letter A, Letter B) const {
    using dr::kind;
    using dr::value;
    const DrKind ka = kind(A), kb = kind(B);
    const int a = value(A), b = value(B);
    std::vector<Piece> out;
    if (ka == kb && (ka == DrKind::xminus || ka == DrKind::xplus)) {
      const bool plus = ka == DrKind::xplus;
      const RationalQ f = RationalQ::q_pow(plus ? 2 : -2);
      auto L = [&](int m) { return plus ? dr::xp(m) : dr::xm(m); };
      if (a == b + 1) {
        out.push_back({{L(b), L(a)}, 0, f});
        return out;
      }
      check_mode(a - 1, plus ? "x+" : "x-");
      check_mode(b + 1, plus ? "x+" : "x-");
      out.push_back({{L(b), L(a)}, 0, f});
      out.push_back({{L(a - 1), L(b + 1)}, 0, f});
      out.push_back({{L(b + 1), L(a - 1)}, 0, RationalQ(-1)});
      return out;
    }
    if (ka == DrKind::h && kb == DrKind::xminus) {
      check_mode(a + b, "x-");
      out.push_back({{B, A}, 0, RationalQ(1)});
      out.push_back({{dr::xm(a + b)}, std::abs(a), -h_coeff(a)});
      return out;
    }
    if (ka == DrKind::h && kb == DrKind::h) {
      out.push_back({{B, A}, 0, RationalQ(1)});
      if (a + b == 0) {
        // ([2a]/a)(C^a - C^-a)/(q - q^-1)
        const RationalQ f = h_coeff(a) / qdiff();
        out.push_back({{}, 2 * a, f});
        out.push_back({{}, -2 * a, -f});
      }
      return out;
    }
    if (ka == DrKind::K && kb == DrKind::xminus) {
      out.push_back({{B, A}, 0, RationalQ::q_pow(-a)});
      return out;
    }
    if (ka == DrKind::K && kb == DrKind::h) {
      out.push_back({{B, A}, 0, RationalQ(1)});
      return out;
    }
    if (ka == DrKind::K && kb == DrKind::K) {
      if (a + b != 0)
        out.push_back({{dr::Kh(a + b)}, 0, RationalQ(1)});
      else
        out.push_back({{}, 0, RationalQ(1)});
      return out;
    }
    if (ka == DrKind::xplus && kb == DrKind::xminus) {
      out.push_back({{B, A}, 0, RationalQ(1)});
      const int m = a + b;
      const RationalQ inv = qdiff().inverse();
      if (m >= 0)
        for (const auto &t : psi(m)) out.push_back({t.w, t.c2 + (a - b), inv * t.c});
      if (m <= 0)
        for (const auto &t : phi(m)) out.push_back({t.w, t.c2 - (a - b), -(inv * t.c)});
      return out;
    }
    if (ka == DrKind::xplus && kb == DrKind::h) {
      check_mode(a + b, "x+");
      out.push_back({{B, A}, 0, RationalQ(1)});
      out.push_back({{dr::xp(a + b)}, -std::abs(b), -h_coeff(b)});
      return out;
    }
    if (ka == DrKind::xplus && kb == DrKind::K) {
      out.push_back({{B, A}, 0, RationalQ::q_pow(-b)});
      return out;
    }
    throw std::logic_error("DrinfeldEngine: no rewrite for " + dr::letter_string(A) + dr::letter_string(B));
  }

  DrCombination compute(const DrWord &w) const {
    for (Letter l : w) {
      const DrKind k = dr::kind(l);
      if (k == DrKind::h && dr::value(l) == 0) throw std::invalid_argument("h_0 is not a generator");
      if (k == DrKind::K && dr::value(l) == 0) {
        DrWord v;
        for (Letter m : w)
          if (m != l) v.push_back(m);
        return *straighten(v);
      }
      if (k != DrKind::K) check_mode(dr::value(l), k == DrKind::h ? "h" : (k == DrKind::xplus ? "x+" : "x-"));
    }
    std::ptrdiff_t pos = -1;
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    if (strategy_ == RewriteStrategy::leftmost) {
      for (std::ptrdiff_t i = 0; i + 1 < n; ++i)
        if (out_of_order(w[i], w[i + 1])) {
          pos = i;
          break;
        }
    } else {
      for (std::ptrdiff_t i = n - 2; i >= 0; --i)
        if (out_of_order(w[i], w[i + 1])) {
          pos = i;
          break;
        }
    }
    if (pos < 0) return {DrTerm{w, 0, RationalQ(1)}};

    std::map<std::pair<DrWord, int>, RationalQ> acc;
    for (const Piece &p : rewrite(w[pos], w[pos + 1])) {
      DrWord v(w.begin(), w.begin() + pos);
      v.insert(v.end(), p.w.begin(), p.w.end());
      v.insert(v.end(), w.begin() + pos + 2, w.end());
      for (const DrTerm &t : *straighten(v)) {
        auto &slot = acc[{t.w, t.c2 + p.c2}];
        slot += p.c * t.c;
      }
    }
    DrCombination out;
    for (auto &[key, c] : acc)
      if (!c.is_zero()) out.push_back({key.first, key.second, c});
    return out;
  }

  // [z^{-m}] K exp((q-q^-1) sum h_n z^{-n}) for psi, and
  // [z^{p}] K^-1 exp(-(q-q^-1) sum h_{-n} z^n) at m = -p for phi.
  const DrCombination &cartan_current(int m, bool is_psi) const {
    static const DrCombination empty;
    if (is_psi ? m < 0 : m > 0) return empty;
    std::lock_guard<std::mutex> lk(cur_mu_);
    auto &slot = currents_[{m, is_psi}];
    if (slot) return *slot;
    const int p = is_psi ? m : -m;
    if (p > window_) throw WindowError("h mode " + std::to_string(is_psi ? p : -p) + " lies outside the window");
    // Commuting polynomials in h_{+-1..p}: multiset of |modes| -> coefficient.
    using Poly = std::map<std::vector<int>, RationalQ>;
    std::vector<Poly> E(static_cast<std::size_t>(p + 1));
    E[0][{}] = RationalQ(1);
    const RationalQ s = is_psi ? qdiff() : -qdiff();
    for (int k = 1; k <= p; ++k) {
      Poly acc;
      for (int j = 1; j <= k; ++j)
        for (const auto &[mono, c] : E[static_cast<std::size_t>(k - j)]) {
          std::vector<int> mm = mono;
          mm.push_back(j);
          std::sort(mm.begin(), mm.end());
          acc[mm] += RationalQ(j) * s * c;
        }
      for (auto &[mono, c] : acc)
        if (!c.is_zero()) E[static_cast<std::size_t>(k)][mono] = c / RationalQ(k);
    }
    auto res = std::make_shared<DrCombination>();
    const int sign = is_psi ? 1 : -1;
    for (const auto &[mono, c] : E[static_cast<std::size_t>(p)]) {
      if (c.is_zero()) continue;
      DrWord w;
      // h_{-n} ascending means larger n first
      std::vector<int> modes;
      for (int n : mono) modes.push_back(sign * n);
      std::sort(modes.begin(), modes.end());
      for (int md : modes) w.push_back(dr::h(md));
      w.push_back(dr::Kh(is_psi ? 2 : -2));
      res->push_back({w, 0, c});
    }
    slot = res;
    return *slot;
  }
};

// An element of U_q^{Dr} with coefficients in Q(q)[gamma_1, gamma_2, ...],
// always PBW-ordered.
class DrinfeldElement {
public:
  using Terms = std::map<DrMono, RationalQ>;

  DrinfeldElement() = default;
  explicit DrinfeldElement(const DrinfeldEngine *e) : eng_(e) {}
  DrinfeldElement(const DrinfeldEngine *e, const RationalQ &c) : eng_(e) {
    if (!c.is_zero()) terms_[DrMono{}] = c;
  }

  static DrinfeldElement letter(const DrinfeldEngine *e, Letter l, const RationalQ &c = RationalQ(1)) {
    DrinfeldElement r(e);
    r.add(DrMono{{l}, 0, {}}, c);
    return r;
  }
  static DrinfeldElement xplus(const DrinfeldEngine *e, int k) {
    e->check_mode(k, "x+");
    return letter(e, dr::xp(k));
  }
  static DrinfeldElement xminus(const DrinfeldEngine *e, int k) {
    e->check_mode(k, "x-");
    return letter(e, dr::xm(k));
  }
  static DrinfeldElement h(const DrinfeldEngine *e, int k) {
    if (k == 0) throw std::invalid_argument("h_0 is not a generator");
    e->check_mode(k, "h");
    return letter(e, dr::h(k));
  }
  // K^{e2/2}
  static DrinfeldElement Kpow(const DrinfeldEngine *e, int e2) {
    DrinfeldElement r(e);
    r.add(DrMono{e2 == 0 ? DrWord{} : DrWord{dr::Kh(e2)}, 0, {}}, RationalQ(1));
    return r;
  }
  // C^{c2/2}
  static DrinfeldElement Cpow(const DrinfeldEngine *e, int c2, const RationalQ &c = RationalQ(1)) {
    DrinfeldElement r(e);
    r.add(DrMono{{}, c2, {}}, c);
    return r;
  }
  static DrinfeldElement gamma(const DrinfeldEngine *e, int n) {
    if (n < 1) throw std::invalid_argument("gamma index must be positive");
    DrinfeldElement r(e);
    std::vector<int> g(static_cast<std::size_t>(n), 0);
    g.back() = 1;
    r.add(DrMono{{}, 0, g}, RationalQ(1));
    return r;
  }
  static DrinfeldElement from_combination(const DrinfeldEngine *e, const DrCombination &c) {
    DrinfeldElement r(e);
    for (const auto &t : c) r.add(DrMono{t.w, t.c2, {}}, t.c);
    return r;
  }

  const DrinfeldEngine *engine() const { return eng_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const DrMono &m, const RationalQ &c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.try_emplace(m, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  DrinfeldElement operator-() const {
    DrinfeldElement r = *this;
    for (auto &[m, c] : r.terms_) c = -c;
    return r;
  }
  DrinfeldElement &operator+=(const DrinfeldElement &o) {
    adopt(o);
    for (const auto &[m, c] : o.terms_) add(m, c);
    return *this;
  }
  DrinfeldElement &operator-=(const DrinfeldElement &o) {
    adopt(o);
    for (const auto &[m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend DrinfeldElement operator+(DrinfeldElement a, const DrinfeldElement &b) { return a += b; }
  friend DrinfeldElement operator-(DrinfeldElement a, const DrinfeldElement &b) { return a -= b; }

  friend DrinfeldElement operator*(const RationalQ &s, const DrinfeldElement &x) {
    DrinfeldElement r(x.eng_);
    if (s.is_zero()) return r;
    for (const auto &[m, c] : x.terms_) r.terms_.emplace_hint(r.terms_.end(), m, s * c);
    return r;
  }

  friend DrinfeldElement operator*(const DrinfeldElement &a, const DrinfeldElement &b) {
    DrinfeldElement r(a.eng_);
    r.adopt(b);
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_) {
        const int c2 = ma.c2 + mb.c2;
        std::vector<int> g = add_gamma(ma.gam, mb.gam);
        const RationalQ cc = ca * cb;
        if (ma.w.empty() || mb.w.empty() || joins_normally(ma.w.back(), mb.w.front())) {
          DrWord w = ma.w;
          w.insert(w.end(), mb.w.begin(), mb.w.end());
          r.add(DrMono{std::move(w), c2, std::move(g)}, cc);
          continue;
        }
        if (!r.eng_) throw std::logic_error("DrinfeldElement: product needs an engine");
        DrWord w = ma.w;
        w.insert(w.end(), mb.w.begin(), mb.w.end());
        for (const DrTerm &t : *r.eng_->straighten(w)) r.add(DrMono{t.w, c2 + t.c2, g}, cc * t.c);
      }
    return r;
  }
  DrinfeldElement &operator*=(const DrinfeldElement &o) { return *this = *this * o; }

  friend bool operator==(const DrinfeldElement &a, const DrinfeldElement &b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DrinfeldElement &a, const DrinfeldElement &b) { return !(a == b); }

  template <class F> DrinfeldElement map_coeffs(F &&f) const {
    DrinfeldElement r(eng_);
    for (const auto &[m, c] : terms_) r.add(m, f(c));
    return r;
  }

  // Set C = 1.
  DrinfeldElement at_C_one() const {
    DrinfeldElement r(eng_);
    for (const auto &[m, c] : terms_) r.add(DrMono{m.w, 0, m.gam}, c);
    return r;
  }

  // Replace gamma_n by values[n-1], an element in the span of C^{c2/2}.
  DrinfeldElement substitute_gamma(const std::vector<DrinfeldElement> &values) const {
    DrinfeldElement r(eng_);
    for (const auto &[m, c] : terms_) {
      DrinfeldElement t(eng_);
      t.add(DrMono{m.w, m.c2, {}}, c);
      for (std::size_t i = 0; i < m.gam.size(); ++i) {
        if (m.gam[i] == 0) continue;
        if (i >= values.size())
          throw std::invalid_argument("no substitution value for gamma_" + std::to_string(i + 1));
        for (int e = 0; e < m.gam[i]; ++e) t = values[i] * t;
      }
      r += t;
    }
    return r;
  }

  // x+- -> x-+, h -> -h, K -> K, C -> C^-1, q -> q^-1.
  DrinfeldElement theta() const {
    DrinfeldElement r(eng_);
    for (const auto &[m, c] : terms_) {
      DrWord w;
      int sign = 1;
      for (Letter l : m.w) {
        const int v = dr::value(l);
        switch (dr::kind(l)) {
        case DrKind::xminus: w.push_back(dr::xp(v)); break;
        case DrKind::xplus: w.push_back(dr::xm(v)); break;
        case DrKind::h:
          w.push_back(l);
          sign = -sign;
          break;
        case DrKind::K: w.push_back(l); break;
        }
      }
      RationalQ cc = c.inverted_q();
      if (sign < 0) cc = -cc;
      for (const DrTerm &t : *eng_->straighten(w)) r.add(DrMono{t.w, -m.c2 + t.c2, m.gam}, cc * t.c);
    }
    return r;
  }

  // Counit: x, h and gamma go to 0; K and C go to 1.
  RationalQ counit() const {
    RationalQ s;
    for (const auto &[m, c] : terms_) {
      if (!m.gam.empty()) continue;
      bool ok = true;
      for (Letter l : m.w)
        if (dr::kind(l) != DrKind::K) ok = false;
      if (ok) s += c;
    }
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      const bool simple = c.is_laurent() && c.num().span() == 1;
      s += simple ? c.to_string() : "(" + c.to_string() + ")";
      s += " * ";
      s += mono_string(m);
    }
    return s;
  }

  static std::string mono_string(const DrMono &m) {
    std::vector<std::string> parts;
    if (m.c2 != 0) parts.push_back("C^" + dr::half_string(m.c2));
    for (std::size_t i = 0; i < m.gam.size(); ++i)
      if (m.gam[i] != 0)
        parts.push_back("gamma[" + std::to_string(i + 1) + "]" + (m.gam[i] == 1 ? "" : "^" + std::to_string(m.gam[i])));
    for (Letter l : m.w) parts.push_back(dr::letter_string(l));
    if (parts.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "." : "") + parts[i];
    return s;
  }

private:
  const DrinfeldEngine *eng_ = nullptr;
  Terms terms_;

  static bool joins_normally(Letter a, Letter b) {
    if (a > b) return false;
    return !(dr::kind(a) == DrKind::K && dr::kind(b) == DrKind::K);
  }

  void adopt(const DrinfeldElement &o) {
    if (!eng_) eng_ = o.eng_;
    else if (o.eng_ && o.eng_ != eng_) throw std::invalid_argument("DrinfeldElement: different engines");
  }
};

inline std::ostream &operator<<(std::ostream &os, const DrinfeldElement &x) { return os << x.to_string(); }

} // namespace uqalt
