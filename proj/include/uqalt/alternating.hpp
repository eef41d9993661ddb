#pragma once

// Alternating generators y_{-k}, y_{k+1}, z_{k+1}, z~_{k+1} and their relations.
// The relation residuals are written once for any algebra type T, so the same
// code checks the generators built in the q-Serre quotient and their images
// under algebra maps.

#include "qserre.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqalt {

// ym[k] = y_{-k} (k >= 0), yp[j] = y_j (j >= 1), z[j], zt[j] (j >= 1).
// z[0] and zt[0] hold the scalar boundary value rho_bar/(q - q^-1) times one.
template <class T> struct AltFamily {
  std::vector<T> ym, yp, z, zt;
  T one;

  const T &y_minus(int k) const { return get(ym, k, "y_-"); }
  const T &y_plus(int j) const { return get(yp, j, "y_"); }
  const T &zz(int j) const { return get(z, j, "z_"); }
  const T &zzt(int j) const { return get(zt, j, "z~_"); }

private:
  static const T &get(const std::vector<T> &v, int i, const char *name) {
    if (i < 0 || static_cast<std::size_t>(i) >= v.size())
      throw std::out_of_range(std::string("generator ") + name + std::to_string(i) + " is not in the table");
    return v[static_cast<std::size_t>(i)];
  }
};

enum class AltRelation { def1, def2, def3, def4, def5, def6, def7, def8, def9, def10, def11, condeq };

inline constexpr std::array<AltRelation, 11> kDefRelations = {
    AltRelation::def1, AltRelation::def2, AltRelation::def3, AltRelation::def4,
    AltRelation::def5, AltRelation::def6, AltRelation::def7, AltRelation::def8,
    AltRelation::def9, AltRelation::def10, AltRelation::def11};

inline std::string relation_name(AltRelation r) {
  static const char *names[] = {"def1", "def2", "def3", "def4",  "def5",  "def6",
                                "def7", "def8", "def9", "def10", "def11", "condeq"};
  return names[static_cast<int>(r)];
}

// Relations indexed by a single k ignore l.
inline bool single_index(AltRelation r) {
  return r == AltRelation::def1 || r == AltRelation::def2 || r == AltRelation::def3 ||
         r == AltRelation::condeq;
}

// The condeq combination at order n (without the constant boundary).
template <class T> T condeq_combination(const AltFamily<T> &g, int n) {
  const RationalQ rb = rho_bar();
  T acc = RationalQ(0) * g.one;
  for (int k = 0; k <= n; ++k)
    acc += (rb * qsum() * RationalQ::q_pow(-n + 2 * k)) * (g.y_plus(k + 1) * g.y_minus(n - k));
  for (int k = 0; k <= n + 1; ++k)
    acc -= RationalQ::q_pow(2 * k - n - 1) * (g.zz(k) * g.zzt(n + 1 - k));
  return acc;
}

// Left side minus right side; a relation holds when every entry is zero.
template <class T> std::vector<T> relation_residuals(AltRelation rel, int k, int l, const AltFamily<T> &g) {
  const RationalQ rb = rho_bar();
  const RationalQ inv_sum = qsum().inverse();
  switch (rel) {
  case AltRelation::def1: {
    T rhs = inv_sum * (g.zz(k + 1) - g.zzt(k + 1));
    return {comm(g.y_plus(1), g.y_minus(k)) - rhs, comm(g.y_plus(k + 1), g.y_minus(0)) - rhs};
  }
  case AltRelation::def2: {
    T rhs = rb * g.y_plus(k + 2);
    return {qcomm(g.y_plus(1), g.zzt(k + 1)) - rhs, qcomm(g.zz(k + 1), g.y_plus(1)) - rhs};
  }
  case AltRelation::def3: {
    T rhs = rb * g.y_minus(k + 1);
    return {qcomm(g.zzt(k + 1), g.y_minus(0)) - rhs, qcomm(g.y_minus(0), g.zz(k + 1)) - rhs};
  }
  case AltRelation::def4:
    return {comm(g.y_plus(k + 1), g.y_plus(l + 1)), comm(g.y_minus(k), g.y_minus(l))};
  case AltRelation::def5:
    return {comm(g.y_plus(k + 1), g.y_minus(l)) + comm(g.y_minus(k), g.y_plus(l + 1))};
  case AltRelation::def6:
    return {comm(g.y_plus(k + 1), g.zzt(l + 1)) + comm(g.zzt(k + 1), g.y_plus(l + 1))};
  case AltRelation::def7:
    return {comm(g.y_plus(k + 1), g.zz(l + 1)) + comm(g.zz(k + 1), g.y_plus(l + 1))};
  case AltRelation::def8:
    return {comm(g.y_minus(k), g.zzt(l + 1)) + comm(g.zzt(k + 1), g.y_minus(l))};
  case AltRelation::def9:
    return {comm(g.y_minus(k), g.zz(l + 1)) + comm(g.zz(k + 1), g.y_minus(l))};
  case AltRelation::def10:
    return {comm(g.zzt(k + 1), g.zzt(l + 1)), comm(g.zz(k + 1), g.zz(l + 1))};
  case AltRelation::def11:
    return {comm(g.zz(k + 1), g.zzt(l + 1)) + comm(g.zzt(k + 1), g.zz(l + 1))};
  case AltRelation::condeq:
    return {condeq_combination(g, k)};
  }
  throw std::logic_error("unknown relation");
}

template <class T> bool all_zero(const std::vector<T> &v) {
  for (const auto &x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Coefficients of U^{-n-1}, n = 0..N, in
//   C(u) = (q - q^-1) u^2 q^2 Y+(u) Y-(uq) - ((q - q^-1)/rho) Z-(u) Z+(uq) - Z-(u) - Z+(uq)
// with U = q u^2/(q + q^-1). Computed from truncated series products.
template <class T> std::vector<T> cC_series_coeffs(const AltFamily<T> &g, int N) {
  const T zero = RationalQ(0) * g.one;
  // Series in V = U^{-1}; index = power of V.
  // Coefficients up to V^{N+1} only need generators of index <= N.
  auto series = [&](auto gen) {
    std::vector<T> s(static_cast<std::size_t>(N + 3), zero);
    for (int k = 0; k <= N; ++k) s[static_cast<std::size_t>(k + 1)] = gen(k);
    return s;
  };
  // u -> uq sends U^{-j} to q^{-2j} U^{-j}.
  auto shift = [&](std::vector<T> s) {
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = RationalQ::q_pow(-2 * static_cast<int>(j)) * s[j];
    return s;
  };
  auto mul = [&](const std::vector<T> &a, const std::vector<T> &b) {
    std::vector<T> r(a.size(), zero);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; i + j < a.size(); ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    return r;
  };
  auto Yp = series([&](int k) { return g.y_plus(k + 1); });
  auto Ym = series([&](int k) { return g.y_minus(k); });
  auto Zm = series([&](int k) { return g.zz(k + 1); });
  auto Zp = series([&](int k) { return g.zzt(k + 1); });

  // (q - q^-1) q^2 u^2 = q (q^2 - q^-2) U, i.e. a factor V^{-1}.
  const RationalQ pre = RationalQ::q() * (RationalQ::q_pow(2) - RationalQ::q_pow(-2));
  auto YY = mul(Yp, shift(Ym));
  auto ZZ = mul(Zm, shift(Zp));
  auto Zps = shift(Zp);
  const RationalQ zz_coeff = qdiff() / rho_bar();
  std::vector<T> out;
  for (int n = 0; n <= N; ++n) {
    const auto j = static_cast<std::size_t>(n + 1);
    out.push_back(pre * YY[j + 1] - zz_coeff * ZZ[j] - Zm[j] - Zps[j]);
  }
  return out;
}

// Table of generators in the q-Serre quotient, built level by level.
struct GeneratorTable {
  const GradedQuotient *Q = nullptr;
  int depth = 0;
  AltFamily<QElem> gens;
};

// Level n solves the def1 and condeq equations at order n for z_{n+1}, z~_{n+1},
// then sets y_{n+2} and y_{-n-1} from def2 and def3. Requires a quotient bound
// of at least 2K+1.
inline GeneratorTable build_generators(const GradedQuotient &Q, int K) {
  if (K < 0) throw std::invalid_argument("build_generators: negative depth");
  if (Q.max_total_degree() < 2 * K + 1)
    throw TruncationError("generator depth " + std::to_string(K) + " needs total degree " +
                          std::to_string(2 * K + 1) + ", quotient is bounded by " +
                          std::to_string(Q.max_total_degree()));
  GeneratorTable t;
  t.Q = &Q;
  t.depth = K;
  auto &g = t.gens;
  g.one = QElem::scalar(&Q, 1);
  const RationalQ rb = rho_bar();
  const QElem z0 = QElem::scalar(&Q, rb / qdiff());
  const QElem y0 = QElem::gen(&Q, 0), y1 = QElem::gen(&Q, 1);
  g.ym = {y0};
  g.yp = {QElem(), y1};
  g.z = {z0};
  g.zt = {z0};
  const RationalQ rb_inv = rb.inverse();
  for (int n = 0; n < K; ++n) {
    QElem D = qsum() * comm(y1, g.ym[static_cast<std::size_t>(n)]);
    QElem S = QElem::scalar(&Q, 0);
    for (int k = 0; k <= n; ++k)
      S += (rb * qsum() * RationalQ::q_pow(-n + 2 * k)) *
           (g.yp[static_cast<std::size_t>(k + 1)] * g.ym[static_cast<std::size_t>(n - k)]);
    for (int k = 1; k <= n; ++k)
      S -= RationalQ::q_pow(2 * k - n - 1) *
           (g.z[static_cast<std::size_t>(k)] * g.zt[static_cast<std::size_t>(n + 1 - k)]);
    QElem E = (qdiff() / rb) * S;
    const RationalQ denom = RationalQ::q_pow(n + 1) + RationalQ::q_pow(-n - 1);
    QElem zn = denom.inverse() * (E + RationalQ::q_pow(-n - 1) * D);
    QElem ztn = zn - D;
    g.z.push_back(zn);
    g.zt.push_back(ztn);
    g.yp.push_back(rb_inv * qcomm(zn, y1));
    g.ym.push_back(rb_inv * qcomm(ztn, y0));
  }
  return t;
}

// sigma and S on a family: sigma swaps y_{-k} <-> y_{k+1} and z <-> z~;
// S fixes the y's and swaps z <-> z~.
template <class T> AltFamily<T> sigma_family(const AltFamily<T> &g) {
  AltFamily<T> s;
  s.one = g.one;
  const std::size_t n = std::min(g.ym.size(), g.yp.size() - 1);
  s.ym.resize(n);
  s.yp.resize(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    s.ym[k] = g.yp[k + 1];
    s.yp[k + 1] = g.ym[k];
  }
  s.z = g.zt;
  s.zt = g.z;
  return s;
}

} // namespace uqalt
