#pragma once

// Left coaction at C = 1:
//   delta(K(u))_ij = sum_k A(u)_ik L0_jj (x) K(u)_kj,  A(u) = M(u) L-(q u^2) M(u)^-1,
// with the right factor in the q-Serre quotient. The central modes of L- are
// set to zero: with gamma' they multiply A(u) by a central series, which moves
// the constant terms of K12, K21 and spoils multiplicativity from order 1 on.

#include "uqalt/lop.hpp"
#include "uqalt/tensor.hpp"

#include <set>

namespace uqalt {

using QTensor = DrTensor<QElem>;
using QTensor3 = DrTensor<QTensor>;

struct CoactionData {
  const DrinfeldEngine *eng = nullptr;
  int order = 0;
  DrMat A;     // entries in u, C = 1
  DrEl L0[2];  // K^{-1/2}, K^{1/2}
};

inline CoactionData coaction_data(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, int N) {
  const LOperator L = build_L_minus(e, p, cen, N, false);
  CoactionData d;
  d.eng = e;
  d.order = N;
  d.A = substitute_qu2(L.L, N, {{0, -2}, {2, 0}}).map_entries([](const DrSeries &s) {
    return s.map_coeffs([](const DrEl &c) { return c.at_C_one(); });
  });
  d.L0[0] = DrEl::Kpow(e, -1);
  d.L0[1] = DrEl::Kpow(e, 1);
  return d;
}

// sum of a (x) b over term pairs, kept down to floor2
template <class R>
Series2<DrTensor<R>> tensor_series(const DrSeries &a, const Series2<R> &b, int floor2) {
  Series2<DrTensor<R>> r(floor2);
  for (const auto &[ea, ca] : a.terms())
    for (const auto &[eb, cb] : b.terms()) {
      const Exp2 ex{ea.a2 + eb.a2, ea.b2 + eb.b2};
      if (r.keeps(ex)) r.add_term(ex, DrTensor<R>::pure(ca, cb));
    }
  return r;
}

inline DrSeries times_right(const DrSeries &s, const DrEl &x) {
  return s.map_coeffs([&](const DrEl &c) { return c * x; });
}

// delta(K) from the dressing formula.
inline SeriesMat<QTensor> coaction_matrix(const CoactionData &d, const SeriesMat<QElem> &K, int floor2) {
  SeriesMat<QTensor> r(2, floor2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Series2<QTensor> s(floor2);
      for (int k = 0; k < 2; ++k) s += tensor_series(times_right(d.A(i, k), d.L0[j]), K(k, j), floor2);
      r(i, j) = s;
    }
  return r;
}

// delta applied multiplicatively to the words of x, given delta(y0), delta(y1).
inline QTensor coaction_on_words(const QElem &x, const QTensor (&dy)[2], const DrinfeldEngine *e) {
  const GradedQuotient *Q = x.quotient();
  QTensor out(e);
  for (const auto &[w, c] : x.rep().terms()) {
    QTensor t = QTensor::pure(DrEl(e, 1), QElem::scalar(Q, 1));
    for (auto l : w) t = t * dy[l];
    out += c * t;
  }
  return out;
}

// C = 1 on every Drinfeld factor. Straightening reintroduces C, so residuals
// are compared after this map, which is an algebra map.
inline QTensor c_one(const QTensor &t) {
  return t.map_left([](const DrEl &x) { return x.at_C_one(); });
}
inline QTensor3 c_one(const QTensor3 &t) {
  return t.map_left([](const DrEl &x) { return x.at_C_one(); }).map_right([](const QTensor &v) { return c_one(v); });
}

struct CoactionImages {
  QTensor y0, y1;
};

// delta(y0), delta(y1) from the u^-1 coefficients of the diagonal entries.
inline CoactionImages coaction_generators(const SeriesMat<QTensor> &dK, const DrinfeldEngine *e) {
  const RationalQ s = (RationalQ::q() * U_inverse_power_coeff(1)).inverse();
  auto get = [&](int i) {
    const QTensor *c = dK(i, i).find({-2, 0});
    return c ? s * *c : QTensor(e);
  };
  return {get(1), get(0)};
}

inline CheckList check_coaction(const DrinfeldEngine &eng, const GeneratorTable &T, int N) {
  using drc::Sweep;
  const DrinfeldEngine *e = &eng;
  const GradedQuotient *Q = T.Q;
  const HomParams P = HomParams::standard(e);
  const nlohmann::json par{{"order", N}, {"window", eng.window()}};
  const int floor2 = -4 * N;
  CheckList out;
  const SeriesMat<QElem> K = build_K_equitable(T.gens, P.kbar_plus, P.kbar_minus, floor2);
  const CoactionData d = coaction_data(e, P, zero_source(e), N);
  const SeriesMat<QTensor> dK = coaction_matrix(d, K, floor2);
  const CoactionImages im = coaction_generators(dK, e);
  const QElem one = QElem::scalar(Q, 1), y0 = QElem::gen(Q, 0), y1 = QElem::gen(Q, 1);
  const DrEl Kp = DrEl::Kpow(e, 2), Km = DrEl::Kpow(e, -2);
  {
    Sweep sw("coaction_images", par);
    const QTensor e1 = QTensor::pure((-RationalQ::q() * qdiff()) * (Km * DrEl::xplus(e, 0)), one) +
                       QTensor::pure(Km, y1);
    const QTensor e0 = QTensor::pure((-RationalQ::q_pow(-1) * qdiff()) * DrEl::xminus(e, 1), one) +
                       QTensor::pure(Kp, y0);
    sw.expect_zero(im.y1 - e1, "delta(y1)");
    sw.expect_zero(im.y0 - e0, "delta(y0)");
    sw.finish(out);
  }
  {
    Sweep sw("coaction_serre", par);
    sw.expect_zero(c_one(serre_relator(im.y0, im.y1)), "relator(y0, y1)");
    sw.expect_zero(c_one(serre_relator(im.y1, im.y0)), "relator(y1, y0)");
    sw.finish(out);
  }
  const QTensor dy[2] = {im.y0, im.y1};
  {
    // Every coefficient of delta(K) is delta applied to the coefficient of K.
    Sweep sw("coaction_homomorphism", par);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        std::set<Exp2> ex;
        for (const auto &t : dK(i, j).terms()) ex.insert(t.first);
        for (const auto &t : K(i, j).terms()) ex.insert(t.first);
        for (const Exp2 &x : ex) {
          const QTensor *a = dK(i, j).find(x);
          const QElem *b = K(i, j).find(x);
          const QTensor lhs = a ? *a : QTensor(e);
          const QTensor rhs = b ? coaction_on_words(*b, dy, e) : QTensor(e);
          sw.expect_zero(c_one(lhs - rhs), "K" + std::to_string(i + 1) + std::to_string(j + 1) + " at " +
                                        Series2<QElem>::monomial_string(x));
        }
      }
    sw.finish(out);
  }
  {
    // Counit on the left factor; also with the central modes kept as symbols.
    Sweep sw("coaction_counit", par);
    for (int src = 0; src < 2; ++src) {
      const SeriesMat<QTensor> dKs =
          src == 0 ? dK : coaction_matrix(coaction_data(e, P, symbol_source(e), N), K, floor2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          Series2<QElem> back(floor2);
          for (const auto &[x, t] : dKs(i, j).terms()) back.add_term(x, t.counit_left(QElem::scalar(Q, 0)));
          const Series2<QElem> diff = back - K(i, j);
          sw.expect_zero(diff.is_zero() ? QElem::scalar(Q, 0) : diff.terms().begin()->second,
                         (src ? "symbols K" : "K") + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    sw.expect_zero(im.y0.counit_left(QElem::scalar(Q, 0)) - y0, "y0");
    sw.expect_zero(im.y1.counit_left(QElem::scalar(Q, 0)) - y1, "y1");
    sw.finish(out);
  }
  {
    // (Delta (x) id) delta = (id (x) delta) delta on K(u), with Delta(A) = A (x) A
    // and L0 group-like.
    const int f1 = floor2;
    Sweep sw("coaction_coassociativity", par);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Series2<QTensor3> lhs(f1);
        for (int m = 0; m < 2; ++m)
          for (int k = 0; k < 2; ++k) {
            const DrSeries a = times_right(d.A(i, m), d.L0[j]);
            const DrSeries b = times_right(d.A(m, k), d.L0[j]);
            for (const auto &[ea, ca] : a.terms())
              for (const auto &[eb, cb] : b.terms())
                for (const auto &[ek, ck] : K(k, j).terms()) {
                  const Exp2 x{ea.a2 + eb.a2 + ek.a2, 0};
                  if (lhs.keeps(x)) lhs.add_term(x, QTensor3::pure(ca, QTensor::pure(cb, ck)));
                }
          }
        Series2<QTensor3> rhs(f1);
        for (const auto &[x, t] : dK(i, j).terms())
          if (rhs.keeps(x))
            rhs.add_term(x, t.map_right([&](const QElem &v) { return coaction_on_words(v, dy, e); }));
        const Series2<QTensor3> r = (lhs - rhs).map_coeffs([](const QTensor3 &t) { return c_one(t); });
        sw.expect_zero(r.is_zero() ? QTensor3(e) : r.terms().begin()->second,
                       "K" + std::to_string(i + 1) + std::to_string(j + 1));
      }
    sw.finish(out);
  }
  return out;
}

} // namespace uqalt
