#pragma once

// The homomorphism from the equitable alternating generators into the right
// alternating subalgebra of the Drinfeld realization, built from its
// generating functions. All series are power series in w = u^{-2}.

#include "uqalt/alternating.hpp"
#include "uqalt/drinfeld_checks.hpp"

#include <functional>

namespace uqalt {

using DrEl = DrinfeldElement;

// Central parameters of the dressed K-operator. kbar are scalars; eps may
// depend on C; lambda is a single monomial lambda_coeff * C^{lambda_c2/2}.
struct HomParams {
  RationalQ kbar_plus, kbar_minus;
  DrEl eps_plus, eps_minus;
  RationalQ lambda_coeff = RationalQ(1);
  int lambda_c2 = 0;

  // kbar_+ = q^-1 (q - q^-1), kbar_- = q - q^-1, eps_+ = q + q^-1,
  // eps_- = q (q + q^-1) C^-1, lambda = C^{3/2}.
  static HomParams standard(const DrinfeldEngine *e) {
    HomParams p;
    p.kbar_plus = RationalQ::q_pow(-1) * qdiff();
    p.kbar_minus = qdiff();
    p.eps_plus = DrEl(e, qsum());
    p.eps_minus = DrEl::Cpow(e, -2, RationalQ::q() * qsum());
    p.lambda_c2 = 3;
    return p;
  }

  // lambda^{-n}
  DrEl lambda_inv_pow(const DrinfeldEngine *e, int n) const {
    return DrEl::Cpow(e, -n * lambda_c2, lambda_coeff.pow(-n));
  }
};

// gamma'_n = -((q - q^-1)^{2n-1}/n) (eps_+ eps_- lambda/(rho q))^n
inline DrEl gamma_prime(const DrinfeldEngine *e, const HomParams &p, int n) {
  if (n < 1) throw std::invalid_argument("gamma_prime: n must be positive");
  const DrEl lam = DrEl::Cpow(e, p.lambda_c2, p.lambda_coeff);
  const DrEl base = (rho_bar() * RationalQ::q()).inverse() * (p.eps_plus * p.eps_minus * lam);
  DrEl pw(e, 1);
  for (int i = 0; i < n; ++i) pw = pw * base;
  return (-(qdiff().pow(2 * n - 1) / RationalQ(n))) * pw;
}

// Source of the central elements in the exponential: gamma'_n, zero, or the
// free central symbols gamma_n.
using CentralSource = std::function<DrEl(int)>;

inline CentralSource gamma_prime_source(const DrinfeldEngine *e, const HomParams &p) {
  return [e, p](int n) { return gamma_prime(e, p, n); };
}
inline CentralSource zero_source(const DrinfeldEngine *e) {
  return [e](int) { return DrEl(e); };
}
inline CentralSource symbol_source(const DrinfeldEngine *e) {
  return [e](int n) { return DrEl::gamma(e, n); };
}

// Truncated power series in w with coefficients in the Drinfeld algebra.
struct WSeries {
  const DrinfeldEngine *eng = nullptr;
  std::vector<DrEl> c; // c[n] = coefficient of w^n

  WSeries(const DrinfeldEngine *e, int N) : eng(e), c(static_cast<std::size_t>(N + 1), DrEl(e)) {}
  int order() const { return static_cast<int>(c.size()) - 1; }
  DrEl &operator[](int n) { return c[static_cast<std::size_t>(n)]; }
  const DrEl &operator[](int n) const { return c[static_cast<std::size_t>(n)]; }

  friend WSeries operator*(const WSeries &a, const WSeries &b) {
    WSeries r(a.eng, std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order(); ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend WSeries operator+(WSeries a, const WSeries &b) {
    for (int i = 0; i <= std::min(a.order(), b.order()); ++i) a[i] += b[i];
    return a;
  }
  friend WSeries operator-(WSeries a, const WSeries &b) {
    for (int i = 0; i <= std::min(a.order(), b.order()); ++i) a[i] -= b[i];
    return a;
  }
  friend WSeries operator*(const RationalQ &s, WSeries a) {
    for (auto &x : a.c) x = s * x;
    return a;
  }
  // u -> u q^s, i.e. w^n -> q^{-2 s n} w^n.
  WSeries u_scaled(int s) const {
    WSeries r = *this;
    for (int n = 0; n <= order(); ++n) r[n] = RationalQ::q_pow(-2 * s * n) * r[n];
    return r;
  }
  bool is_zero() const {
    for (const auto &x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  std::string first_nonzero() const {
    for (int n = 0; n <= order(); ++n)
      if (!c[static_cast<std::size_t>(n)].is_zero()) {
        std::string s = "w^" + std::to_string(n) + ": " + c[static_cast<std::size_t>(n)].to_string();
        return s.size() > 400 ? s.substr(0, 400) + "..." : s;
      }
    return "";
  }
};

// exp of a series without constant term whose coefficients commute.
inline WSeries commuting_exp(const WSeries &s) {
  if (!s[0].is_zero()) throw std::invalid_argument("commuting_exp: nonzero constant term");
  WSeries E(s.eng, s.order());
  E[0] = DrEl(s.eng, 1);
  for (int m = 1; m <= s.order(); ++m) {
    DrEl acc(s.eng);
    for (int j = 1; j <= m; ++j)
      if (!s[j].is_zero()) acc += RationalQ(j) * (s[j] * E[m - j]);
    E[m] = (RationalQ(1) / RationalQ(m)) * acc;
  }
  return E;
}

// exp(-(q - q^-1) sum_n (h_n + cen(n)) / (q^n + q^-n) (q u^2 lambda)^{-n}); h_n dropped unless with_h
inline WSeries g_series(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, bool with_h, int N) {
  WSeries s(e, N);
  for (int n = 1; n <= N; ++n) {
    DrEl a = cen(n);
    if (with_h) a += DrEl::h(e, n);
    const RationalQ f = -qdiff() / (RationalQ::q_pow(n) + RationalQ::q_pow(-n)) * RationalQ::q_pow(-n);
    s[n] = f * (p.lambda_inv_pow(e, n) * a);
  }
  return commuting_exp(s);
}

// psi(u^2 lambda) = sum_k psi_k lambda^{-k} w^k
inline WSeries psi_series(const DrinfeldEngine *e, const HomParams &p, int N) {
  WSeries s(e, N);
  for (int k = 0; k <= N; ++k) s[k] = p.lambda_inv_pow(e, k) * dr_psi(*e, k);
  return s;
}

// Images of the four generating functions Y+, Y-, Z+, Z- through order N.
struct NuSeries {
  WSeries Yp, Ym, Zp, Zm;
};

inline NuSeries nu_series(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, int N) {
  const RationalQ qi = RationalQ::q_pow(-1);
  const RationalQ q2diff = RationalQ::q_pow(2) - RationalQ::q_pow(-2);
  const RationalQ rq = rho_bar() / qdiff();
  auto Qp = [](int k) { return RationalQ::q_pow(k); };
  auto C = [e](int c2) { return DrEl::Cpow(e, c2); };
  auto lam = [&](int n) { return p.lambda_inv_pow(e, n); };
  const DrEl Ki = DrEl::Kpow(e, -2);
  auto xp = [e](int k) { return DrEl::xplus(e, k); };
  auto xm = [e](int k) { return DrEl::xminus(e, k); };

  const WSeries g = g_series(e, p, cen, true, N);
  const WSeries psi = psi_series(e, p, N);

  // sum_{k+l=n-1} coefficient(k, l) C^{(k-l+1)/2} x-_{k+1} x+_l, times lambda^{-n}
  auto double_sum = [&](int n, auto coeff, bool with_Kinv) {
    DrEl s(e);
    for (int k = 0; k <= n - 1; ++k) {
      const int l = n - 1 - k;
      DrEl t = C(k - l + 1) * xm(k + 1) * xp(l);
      if (with_Kinv) t = Ki * t;
      s += coeff(k, l) * t;
    }
    return lam(n) * s;
  };

  WSeries ip(e, N), im(e, N), zp(e, N), zm(e, N);
  zp[0] = DrEl(e, rq);
  zm[0] = rq * (Ki * psi[0]);
  for (int n = 1; n <= N; ++n) {
    const int k = n - 1; // single-sum index with (q u^2 lambda)^{-k} and an extra w
    ip[n] = (-p.kbar_minus * (Qp(2) + 1) * qi) * (C(-k) * lam(k) * Ki * xp(k));
    if (n == 1) ip[n] += (qi * p.eps_plus) * Ki;

    im[n] = (-p.kbar_plus * (Qp(-2) + 1)) * (C(n) * lam(n) * xm(n));
    // eps_- q^-2 w (psi(u^2 lambda) + (q - q^-1)^2 sum q^{k-l} C^{(k-l+1)/2} x-_{k+1} x+_l (q u^2 lambda)^{-k-l-1})
    DrEl inner = psi[n - 1];
    if (n >= 2)
      inner += (qdiff() * qdiff() * Qp(-(n - 1))) *
               double_sum(n - 1, [&](int kk, int ll) { return Qp(kk - ll); }, false);
    im[n] += Qp(-2) * (p.eps_minus * inner);

    zp[n] = (-(qi * qi) * q2diff * Qp(-2 * k) * p.kbar_minus) * (p.eps_minus * C(-k) * lam(k) * xp(k));

    zm[n] = rq * (Ki * psi[n]);
    zm[n] += (-p.kbar_plus * q2diff * Qp(-2 * k)) * (p.eps_plus * C(n) * lam(n) * xm(n) * Ki);
    zm[n] += (rho_bar() * qdiff() * Qp(-n)) * double_sum(n, [&](int kk, int ll) { return Qp(-kk + ll); }, true);
  }
  NuSeries r{g * ip, im * g, zp * g, g * zm};
  r.Zp[0] -= DrEl(e, rq);
  r.Zm[0] -= DrEl(e, rq);
  return r;
}

// U^{-j} = ((q + q^-1)/q)^j w^j
inline RationalQ U_power_in_w(int j) { return (qsum() / RationalQ::q()).pow(j); }

// Generator images read off the series coefficients, up to index N.
inline AltFamily<DrEl> family_from_series(const DrinfeldEngine *e, const NuSeries &s) {
  const int N = s.Yp.order();
  AltFamily<DrEl> f;
  f.one = DrEl(e, 1);
  const DrEl z0(e, rho_bar() / qdiff());
  f.yp.push_back(DrEl(e));
  f.z.push_back(z0);
  f.zt.push_back(z0);
  for (int n = 1; n <= N; ++n) {
    const RationalQ d = U_power_in_w(n).inverse();
    f.ym.push_back(d * s.Ym[n]);
    f.yp.push_back(d * s.Yp[n]);
    f.z.push_back(d * s.Zm[n]);
    f.zt.push_back(d * s.Zp[n]);
  }
  return f;
}

// C(u) from the four series, as a series in w through order N - 1.
inline WSeries cC_from_series(const NuSeries &s) {
  const int N = s.Yp.order();
  const WSeries YY = s.Yp * s.Ym.u_scaled(1);
  const WSeries Zs = s.Zp.u_scaled(1);
  const WSeries ZZ = s.Zm * Zs;
  WSeries out(s.Yp.eng, N - 1);
  // (q - q^-1) u^2 q^2 carries w^{-1}
  for (int n = 0; n <= N - 1; ++n)
    out[n] = (qdiff() * RationalQ::q_pow(2)) * YY[n + 1] - (qdiff() / rho_bar()) * ZZ[n] - s.Zm[n] - Zs[n];
  return out;
}

// Right side of the factorized identity for C(u) - rho/(q - q^-1):
// ((q - q^-1) q^-2 eps_+ eps_- (q u^2)^{-1} - rho/(q - q^-1)) c(u) c(uq).
inline WSeries cC_factorized(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, int N) {
  const WSeries c = g_series(e, p, cen, false, N);
  const WSeries cc = c * c.u_scaled(1);
  WSeries pre(e, N);
  pre[0] = DrEl(e, -rho_bar() / qdiff());
  if (N >= 1) pre[1] = (qdiff() * RationalQ::q_pow(-3)) * (p.eps_plus * p.eps_minus);
  return pre * cc;
}

// Verification suite for nu through order N of C(u).
inline CheckList check_nu(const DrinfeldEngine &eng, int N) {
  using drc::Sweep;
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const nlohmann::json par{{"order", N}, {"window", eng.window()}};
  CheckList out;
  const NuSeries s = nu_series(e, P, gamma_prime_source(e, P), N + 1);
  const AltFamily<DrEl> f = family_from_series(e, s);
  const RationalQ q = RationalQ::q(), qi = RationalQ::q_pow(-1);
  const RationalQ d = qdiff();
  const DrEl K = DrEl::Kpow(e, 2), Ki = DrEl::Kpow(e, -2);
  auto C = [e](int c2) { return DrEl::Cpow(e, c2); };
  {
    Sweep sw("nu_images", par);
    sw.expect_zero(f.y_minus(0) - (C(-2) * K - (qi * d) * (C(-2) * DrEl::xminus(e, 1))), "y0");
    sw.expect_zero(f.y_plus(1) - (Ki - (q * d) * (Ki * DrEl::xplus(e, 0))), "y1");
    const DrEl zt1 = (-(d * d)) * (qi * (C(-3) * DrEl::h(e, 1)) + qsum() * (C(-2) * DrEl::xplus(e, 0))) + d * C(-2);
    sw.expect_zero(f.zzt(1) - zt1, "z~1");
    const DrEl z1 = (d * d) * (q * (C(-3) * DrEl::h(e, 1)) - qsum() * (C(-2) * DrEl::xminus(e, 1) * Ki) +
                               (q * (q * q - qi * qi)) * (C(-2) * DrEl::xminus(e, 1) * Ki * DrEl::xplus(e, 0))) +
                    d * C(-2);
    sw.expect_zero(f.zz(1) - z1, "z1");
    sw.finish(out);
  }
  {
    Sweep sw("nu_serre", par);
    const DrEl &y0 = f.y_minus(0), &y1 = f.y_plus(1);
    sw.expect_zero(serre_relator(y0, y1), "relator(y0, y1)");
    sw.expect_zero(serre_relator(y1, y0), "relator(y1, y0)");
    sw.finish(out);
  }
  {
    Sweep sw("nu_relations", par);
    for (AltRelation r : {AltRelation::def1, AltRelation::def2, AltRelation::def3})
      for (int k = 0; k <= std::min(1, N - 1); ++k)
        for (const DrEl &x : relation_residuals(r, k, 0, f))
          sw.expect_zero(x, std::string(relation_name(r)) + " k=" + std::to_string(k));
    sw.finish(out);
  }
  {
    // The images of y0, y1 at C = 1 agree with the equitable images of the
    // Chevalley generators.
    Sweep sw("nu_equitable_consistency", par);
    const DJImages g(e);
    for (int i = 0; i < 2; ++i) {
      const DrEl img = g.Kinv[i] - (q * d) * (g.Kinv[i] * g.E[i]);
      const DrEl &yi = i == 0 ? f.y_minus(0) : f.y_plus(1);
      sw.expect_zero(yi.at_C_one() - img.at_C_one(), "y" + std::to_string(i));
    }
    sw.finish(out);
  }
  {
    Sweep sw("nu_central_vanishing", par);
    const WSeries c = cC_from_series(s);
    for (int n = 0; n <= N; ++n) sw.expect_zero(c[n], "order " + std::to_string(n));
    const auto fam = cC_series_coeffs(f, N - 1);
    for (int n = 0; n < N; ++n) sw.expect_zero(fam[static_cast<std::size_t>(n)], "generator form, order " + std::to_string(n));
    sw.finish(out);
  }
  {
    // Factorized identity for any central source; checked with zero and with gamma'.
    Sweep sw("nu_central_factorized", par);
    for (int which = 0; which < 2; ++which) {
      const CentralSource cen = which == 0 ? zero_source(e) : gamma_prime_source(e, P);
      const WSeries c = cC_from_series(which == 0 ? nu_series(e, P, cen, N + 1) : s);
      const WSeries rhs = cC_factorized(e, P, cen, N);
      for (int n = 0; n <= N; ++n) {
        DrEl lhs = c[n];
        if (n == 0) lhs -= DrEl(e, rho_bar() / qdiff());
        sw.expect_zero(lhs - rhs[n], (which ? "gamma' " : "zero ") + std::to_string(n));
      }
    }
    sw.finish(out);
  }
  {
    // Negative control: without gamma' the image of C(u) does not vanish.
    const WSeries c = cC_from_series(nu_series(e, P, zero_source(e), N + 1));
    bool nonzero = false;
    for (int n = 0; n <= N; ++n) nonzero = nonzero || !c[n].is_zero();
    record_bool(out, "nu_negative_control", par, nonzero, "image of C(u) vanished without gamma'");
  }
  return out;
}

} // namespace uqalt
