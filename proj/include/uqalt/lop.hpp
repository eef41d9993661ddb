#pragma once

// L-operator of the FRT presentation in Drinfeld generators, the scalar
// K-operator K~0, the dressed K-operator K~-(z) = L-(z lambda) K~0(z) L-0 and
// its symmetric gauge M(u) K~-(q u^2) M(u).
//
// Spectral series here use the first slot of Series2 for z (and the second
// for w); the exponent of z^{-k} is stored as -2k like any other exponent.

#include "uqalt/kop.hpp"
#include "uqalt/nu.hpp"

namespace uqalt {

using DrSeries = Series2<DrEl>;
using DrMat = SeriesMat<DrEl>;

inline DrSeries dr_const(const DrEl &c, int floor2 = kNoFloor) { return DrSeries::monomial({0, 0}, c, floor2); }

// Series sum_k c[k] z^{-k} from a w-series.
inline DrSeries z_series(const WSeries &s, int floor2) {
  DrSeries r(floor2);
  for (int k = 0; k <= s.order(); ++k) r.add_term({-2 * k, 0}, s[k]);
  return r;
}

struct LOperator {
  DrMat L;  // L-(z lambda), entries in z^{-1}
  DrMat L0; // diag((k-_{2,0})^{-1}, (k-_{1,0})^{-1}) = diag(K^{-1/2}, K^{1/2})
};

// L-(z lambda) through order N in z^{-1}, with a_{1,n}, a_{2,n} expressed
// through h_n and the central source; k-_{1,0} = K^{-1/2}, k-_{2,0} = K^{1/2},
// q^{c/2} = C^{1/2}. With use_lambda false the argument is z itself.
inline LOperator build_L_minus(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, int N,
                               bool use_lambda = true) {
  const int floor2 = -2 * N;
  auto lam = [&](int k) { return use_lambda ? p.lambda_inv_pow(e, k) : DrEl(e, 1); };
  WSeries s1(e, N), s2(e, N), es(e, N), fs(e, N);
  for (int n = 1; n <= N; ++n) {
    const RationalQ den = RationalQ::q_pow(n) + RationalQ::q_pow(-n);
    const DrEl a1 = den.inverse() * (DrEl::h(e, n) + cen(n));
    const DrEl a2 = (-den.inverse()) * (RationalQ::q_pow(2 * n) * DrEl::h(e, n) - cen(n));
    s1[n] = (-qdiff()) * (lam(n) * a1);
    s2[n] = (-qdiff()) * (lam(n) * a2);
    es[n] = (-qdiff() * RationalQ::q_pow(n)) * (lam(n) * DrEl::Cpow(e, n) * DrEl::xminus(e, n));
  }
  for (int k = 0; k <= N; ++k)
    fs[k] = (-qdiff() * RationalQ::q_pow(k)) * (lam(k) * DrEl::Cpow(e, -k) * DrEl::xplus(e, k));
  const DrSeries k1 = dr_const(DrEl::Kpow(e, -1)) * z_series(commuting_exp(s1), floor2);
  const DrSeries k2 = dr_const(DrEl::Kpow(e, 1)) * z_series(commuting_exp(s2), floor2);
  const DrSeries ef = z_series(es, floor2), ff = z_series(fs, floor2);
  LOperator r;
  r.L = DrMat(2, floor2);
  r.L(0, 0) = k1;
  r.L(0, 1) = k1 * ff;
  r.L(1, 0) = ef * k1;
  r.L(1, 1) = k2 + ef * k1 * ff;
  r.L0 = DrMat(2);
  r.L0(0, 0) = dr_const(DrEl::Kpow(e, -1));
  r.L0(1, 1) = dr_const(DrEl::Kpow(e, 1));
  return r;
}

// K~0(z) = [[eps_+, kbar_+ (q+q^-1)/(q-q^-1)], [kbar_- (q+q^-1)/(q-q^-1), eps_- / z]]
inline DrMat build_Ktilde0(const DrinfeldEngine *e, const HomParams &p, Exp2 z = {2, 0}) {
  DrMat m(2);
  m(0, 0) = dr_const(p.eps_plus);
  m(0, 1) = dr_const(DrEl(e, p.kbar_plus * qsum() / qdiff()));
  m(1, 0) = dr_const(DrEl(e, p.kbar_minus * qsum() / qdiff()));
  m(1, 1) = DrSeries::monomial({-z.a2, -z.b2}, p.eps_minus);
  return m;
}

inline DrMat build_Ktilde_minus(const DrinfeldEngine *e, const HomParams &p, const CentralSource &cen, int N) {
  const LOperator L = build_L_minus(e, p, cen, N);
  return set_floor(L.L * build_Ktilde0(e, p) * L.L0, -2 * N);
}

// Substitute z = q u^2 (z^{-k} -> q^{-k} u^{-2k}) and multiply entry (i,j) by
// u^{gauge[i][j]/2}; the result is kept down to u^{-2N}.
inline DrMat substitute_qu2(const DrMat &Kz, int N, const int (&gauge)[2][2]) {
  DrMat r(2, -4 * N);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      DrSeries s(-4 * N);
      for (const auto &[ex, c] : Kz(i, j).terms()) {
        const int k = -ex.a2 / 2;
        s.add_term({-4 * k + gauge[i][j], 0}, RationalQ::q_pow(-k) * c);
      }
      r(i, j) = s;
    }
  return r;
}

// M(u) K~-(q u^2) M(u)
inline DrMat symmetric_gauge(const DrMat &Kz, int N) { return substitute_qu2(Kz, N, {{-2, 0}, {0, 2}}); }

inline CheckResult mat_zero_row(const std::string &name, nlohmann::json par, const DrMat &m) {
  par["nonzero_terms"] = m.nonzero_terms();
  return CheckResult{name, par, m.is_zero(), m.is_zero() ? "" : "nonzero entry " + m.first_nonzero()};
}

// Relations of the dressing construction and the agreement of the gauged
// K-operator with the K-operator of the nu-images.
inline CheckList check_lop(const DrinfeldEngine &eng, int N) {
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const CentralSource cen = gamma_prime_source(e, P);
  const nlohmann::json par{{"order", N}, {"window", eng.window()}};
  CheckList out;
  const int F = -2 * N;
  const Exp2 z{2, 0}, w{0, 2}, zw{2, -2};
  // Cleared non-symmetric R-matrix at z/w, times w: polynomial in z, w.
  const ScalarMat Rt = R_tilde_num(zw).map_entries([](const ScalarSeries &s) { return s.shifted({0, 2}); });
  const ScalarMat P2 = permutation();
  const ScalarMat Rt21 = P2 * Rt * P2;
  const ScalarMat R0 = R_zero();
  {
    const DrMat K0z = build_Ktilde0(e, P, z), K0w = build_Ktilde0(e, P, w);
    const DrMat K1 = kron_left(K0z), K2 = kron_right(K0w);
    out.push_back(mat_zero_row("ktilde0_reflection", par, Rt * K1 * R0 * K2 - K2 * R0 * K1 * Rt21));
  }
  const LOperator L = build_L_minus(e, P, cen, N, false);
  const DrMat L1 = set_floor(kron_left(L.L), F);
  const DrMat L2 = set_floor(kron_right(in_second_variable(L.L)), F);
  const DrMat L01 = kron_left(L.L0), L02 = kron_right(L.L0);
  {
    // R~ raises the total exponent by one: compare from F + 1 upwards.
    DrMat r = set_floor(Rt * L1 * L2 - L2 * L1 * Rt, F + 2);
    out.push_back(mat_zero_row("rll_lminus", par, r));
  }
  out.push_back(mat_zero_row("rll_l0", par, Rt21 * L01 * L02 - L02 * L01 * Rt21));
  out.push_back(mat_zero_row("l0_r0_l", par, set_floor(L01 * R0 * L2 - L2 * R0 * L01, F)));
  out.push_back(mat_zero_row("l_r0_l0", par, set_floor(L1 * R0 * L02 - L02 * R0 * L1, F)));
  {
    // Dressed K-operator in the symmetric gauge against K(u) of the nu-images.
    const DrMat Kg = symmetric_gauge(build_Ktilde_minus(e, P, cen, N), N);
    const AltFamily<DrEl> f = family_from_series(e, nu_series(e, P, cen, N));
    const DrMat Kn = build_K_equitable(f, P.kbar_plus, P.kbar_minus, -4 * N);
    out.push_back(mat_zero_row("dressed_k_matches_images", par, Kg - Kn));
  }
  {
    // Entry (1,1) in closed form: -kbar_- (q^2 + 1) g1(z) sum_k q^k C^{-k/2} K^-1 x+_k (z lambda)^{-k}
    // + eps_+ K^-1 g1(z), with g1(z) = exp(-(q - q^-1) sum a_{1,n} (z lambda)^{-n}).
    const DrMat Kz = build_Ktilde_minus(e, P, cen, N);
    WSeries s1(e, N), sx(e, N);
    for (int n = 1; n <= N; ++n) {
      const RationalQ den = RationalQ::q_pow(n) + RationalQ::q_pow(-n);
      s1[n] = (-qdiff() / den) * (P.lambda_inv_pow(e, n) * (DrEl::h(e, n) + cen(n)));
    }
    for (int k = 0; k <= N; ++k)
      sx[k] = RationalQ::q_pow(k) *
              (P.lambda_inv_pow(e, k) * DrEl::Cpow(e, -k) * DrEl::Kpow(e, -2) * DrEl::xplus(e, k));
    const WSeries g1 = commuting_exp(s1);
    const DrEl Ki = DrEl::Kpow(e, -2);
    WSeries closed = (-P.kbar_minus * (RationalQ::q_pow(2) + 1)) * (g1 * sx);
    for (int n = 0; n <= N; ++n) closed[n] += P.eps_plus * Ki * g1[n];
    const DrSeries d = Kz(0, 0) - z_series(closed, F);
    DrMat m(1);
    m(0, 0) = d;
    out.push_back(mat_zero_row("dressed_k11_closed_form", par, m));
  }
  return out;
}

} // namespace uqalt
