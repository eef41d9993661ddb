#pragma once

// The quotient of Q(q)<y0,y1> by the two q-Serre relators, one bidegree at a
// time. Each component keeps the reduced echelon form of the ideal span with
// pivots on the smallest words; the remaining words form the quotient basis.

#include "ncpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqalt {

struct Bidegree {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Bidegree &, const Bidegree &) = default;
  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline Bidegree bidegree_of(const Word &w) {
  Bidegree d;
  for (auto l : w) (l == 0 ? d.a : d.b)++;
  return d;
}

class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// All words with a zeros and b ones, in increasing lexicographic order.
inline std::vector<Word> words_of_bidegree(int a, int b) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto &&self, int ra, int rb) -> void {
    if (ra == 0 && rb == 0) {
      out.push_back(w);
      return;
    }
    if (ra > 0) {
      w.push_back(0);
      self(self, ra - 1, rb);
      w.pop_back();
    }
    if (rb > 0) {
      w.push_back(1);
      self(self, ra, rb - 1);
      w.pop_back();
    }
  };
  rec(rec, a, b);
  return out;
}

class GradedQuotient {
public:
  struct Component {
    std::vector<Word> words;
    std::map<Word, int> index;
    // For each pivot word: its normal form, a combination of basis words.
    std::map<Word, NCPoly> reduction;
    int rank = 0;
    int dimension() const { return static_cast<int>(words.size()) - rank; }
  };

  explicit GradedQuotient(int max_total_degree) : max_total_(max_total_degree) {
    if (max_total_degree < 0) throw std::invalid_argument("GradedQuotient: negative bound");
  }

  int max_total_degree() const { return max_total_; }

  const Component &component(Bidegree d) const {
    if (d.a < 0 || d.b < 0) throw std::invalid_argument("GradedQuotient: negative bidegree");
    if (d.a + d.b > max_total_)
      throw TruncationError("bidegree " + d.to_string() + " exceeds the configured total degree " +
                            std::to_string(max_total_));
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto &s = slots_[d];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::call_once(slot->once, [&] { slot->comp = build(d); });
    return slot->comp;
  }

  int component_dimension(int a, int b) const { return component({a, b}).dimension(); }

  NCPoly normal_form(const NCPoly &p) const {
    NCPoly r(Alphabet::y01());
    for (const auto &[w, c] : p.terms()) {
      const Component &comp = component(bidegree_of(w));
      auto it = comp.reduction.find(w);
      if (it == comp.reduction.end())
        r.add_term(w, c);
      else
        r += c * it->second;
    }
    return r;
  }

private:
  struct Slot {
    std::once_flag once;
    Component comp;
  };

  int max_total_;
  mutable std::mutex mu_;
  mutable std::map<Bidegree, std::shared_ptr<Slot>> slots_;

  using Row = std::map<int, RationalQ>;

  static Component build(Bidegree d) {
    Component comp;
    comp.words = words_of_bidegree(d.a, d.b);
    for (std::size_t i = 0; i < comp.words.size(); ++i) comp.index[comp.words[i]] = static_cast<int>(i);

    const auto A = Alphabet::y01();
    const NCPoly y0 = NCPoly::letter(A, 0), y1 = NCPoly::letter(A, 1);
    const NCPoly relators[2] = {serre_relator(y0, y1), serre_relator(y1, y0)};
    const Bidegree rdeg[2] = {{3, 1}, {1, 3}};

    std::map<int, Row> pivots; // pivot column -> row with unit pivot
    for (int r = 0; r < 2; ++r) {
      const int ca = d.a - rdeg[r].a, cb = d.b - rdeg[r].b;
      if (ca < 0 || cb < 0) continue;
      for (const Word &w : words_of_bidegree(ca, cb)) {
        for (std::size_t split = 0; split <= w.size(); ++split) {
          Row row;
          for (const auto &[rw, rc] : relators[r].terms()) {
            Word full(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
            full.insert(full.end(), rw.begin(), rw.end());
            full.insert(full.end(), w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
            add_to(row, comp.index.at(full), rc);
          }
          insert_row(pivots, std::move(row));
        }
      }
    }
    // Back-substitute so pivot columns appear only in their own row.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Row &row = it->second;
      for (auto jt = std::next(row.begin()); jt != row.end();) {
        auto pv = pivots.find(jt->first);
        if (pv == pivots.end() || pv->first == it->first) {
          ++jt;
          continue;
        }
        const RationalQ f = jt->second;
        const int col = jt->first;
        for (const auto &[k, v] : pv->second) add_to(row, k, -(f * v));
        jt = row.upper_bound(col);
      }
    }
    comp.rank = static_cast<int>(pivots.size());
    for (const auto &[col, row] : pivots) {
      NCPoly nf(A);
      for (const auto &[k, v] : row)
        if (k != col) nf.add_term(comp.words[static_cast<std::size_t>(k)], -v);
      comp.reduction.emplace(comp.words[static_cast<std::size_t>(col)], std::move(nf));
    }
    return comp;
  }

  static void add_to(Row &row, int k, const RationalQ &v) {
    if (v.is_zero()) return;
    auto [it, ins] = row.try_emplace(k, v);
    if (!ins) {
      it->second += v;
      if (it->second.is_zero()) row.erase(it);
    }
  }

  static void insert_row(std::map<int, Row> &pivots, Row row) {
    // Reduce in increasing column order; subtracting a pivot row only touches larger columns.
    for (auto it = row.begin(); it != row.end();) {
      auto pv = pivots.find(it->first);
      if (pv == pivots.end()) {
        const int col = it->first;
        const RationalQ inv = it->second.inverse();
        for (auto &[k, v] : row) v *= inv;
        pivots.emplace(col, std::move(row));
        return;
      }
      const RationalQ f = it->second;
      const int col = it->first;
      for (const auto &[k, v] : pv->second) add_to(row, k, -(f * v));
      it = row.upper_bound(col);
    }
  }
};

// An element of the quotient, always held in normal form.
class QElem {
public:
  QElem() = default;
  QElem(const GradedQuotient *Q, const NCPoly &p) : Q_(Q), rep_(Q->normal_form(p)) {}

  static QElem scalar(const GradedQuotient *Q, const RationalQ &c) {
    return QElem(Q, NCPoly(Alphabet::y01(), c));
  }
  static QElem gen(const GradedQuotient *Q, int i) { return QElem(Q, NCPoly::letter(Alphabet::y01(), i)); }

  const NCPoly &rep() const { return rep_; }
  const GradedQuotient *quotient() const { return Q_; }
  bool is_zero() const { return rep_.is_zero(); }

  friend QElem operator+(const QElem &a, const QElem &b) { return raw(pick(a, b), a.rep_ + b.rep_); }
  friend QElem operator-(const QElem &a, const QElem &b) { return raw(pick(a, b), a.rep_ - b.rep_); }
  QElem operator-() const { return raw(Q_, -rep_); }
  friend QElem operator*(const QElem &a, const QElem &b) {
    const GradedQuotient *Q = pick(a, b);
    return QElem(Q, a.rep_ * b.rep_);
  }
  friend QElem operator*(const RationalQ &s, const QElem &a) { return raw(a.Q_, s * a.rep_); }
  QElem &operator+=(const QElem &o) { return *this = *this + o; }
  QElem &operator-=(const QElem &o) { return *this = *this - o; }

  friend bool operator==(const QElem &a, const QElem &b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string(); }

private:
  const GradedQuotient *Q_ = nullptr;
  NCPoly rep_;

  static QElem raw(const GradedQuotient *Q, NCPoly p) {
    QElem e;
    e.Q_ = Q;
    e.rep_ = std::move(p);
    return e;
  }
  static const GradedQuotient *pick(const QElem &a, const QElem &b) {
    if (a.Q_ && b.Q_ && a.Q_ != b.Q_) throw std::invalid_argument("QElem: different quotients");
    return a.Q_ ? a.Q_ : b.Q_;
  }
};

// sigma and S act on the free algebra and preserve the ideal; re-normalize after.
inline QElem sigma(const QElem &x) { return QElem(x.quotient(), sigma_words(x.rep())); }
inline QElem antiS(const QElem &x) { return QElem(x.quotient(), reverse_words(x.rep())); }

// Number of unordered multisets of the symbols y_{-k}: (k+1,k), z_{n+1}: (n+1,n+1),
// y_{l+1}: (l,l+1) with total bidegree (a,b).
inline long long pbw_count(int a, int b) {
  if (a < 0 || b < 0) return 0;
  std::vector<std::pair<int, int>> symbols;
  for (int k = 0; k + 1 <= a && k <= b; ++k) symbols.emplace_back(k + 1, k);
  for (int n = 1; n <= a && n <= b; ++n) symbols.emplace_back(n, n);
  for (int l = 0; l <= a && l + 1 <= b; ++l) symbols.emplace_back(l, l + 1);
  std::vector<std::vector<long long>> dp(static_cast<std::size_t>(a + 1),
                                         std::vector<long long>(static_cast<std::size_t>(b + 1), 0));
  dp[0][0] = 1;
  for (auto [sa, sb] : symbols)
    for (int i = sa; i <= a; ++i)
      for (int j = sb; j <= b; ++j) dp[i][j] += dp[i - sa][j - sb];
  return dp[a][b];
}

} // namespace uqalt
