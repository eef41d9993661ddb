#pragma once

// Images of the central extension: the nu-series with the central modes kept
// as free symbols gamma_n, the quantum determinant Gamma(u) of the resulting
// K-operator and its factorized forms.

#include "uqalt/kop.hpp"
#include "uqalt/nu.hpp"

namespace uqalt {

inline NuSeries mu_series(const DrinfeldEngine *e, const HomParams &p, int N) {
  return nu_series(e, p, symbol_source(e), N);
}

inline CentralSource negated(CentralSource s) {
  return [s](int n) { return RationalQ(-1) * s(n); };
}

// The same images through nu: Y -> nu(Y) c^-1 c_sym, Z -> (nu(Z) + r) c^-1 c_sym - r.
inline NuSeries mu_series_via_nu(const DrinfeldEngine *e, const HomParams &p, int N) {
  const NuSeries s = nu_series(e, p, gamma_prime_source(e, p), N);
  const WSeries f = g_series(e, p, negated(gamma_prime_source(e, p)), false, N) *
                    g_series(e, p, symbol_source(e), false, N);
  const DrEl r(e, rho_bar() / qdiff());
  auto z = [&](WSeries x) {
    x[0] += r;
    x = x * f;
    x[0] -= r;
    return x;
  };
  return {s.Yp * f, s.Ym * f, z(s.Zp), z(s.Zm)};
}

// w-series to a series in u (w = u^-2).
inline Series2<DrEl> w_to_u(const WSeries &s) {
  Series2<DrEl> r(-4 * s.order());
  for (int n = 0; n <= s.order(); ++n) r.add_term({-4 * n, 0}, s[n]);
  return r;
}

inline WSeries u_to_w(const Series2<DrEl> &s, int N, const DrinfeldEngine *e) {
  WSeries r(e, N);
  for (const auto &[x, c] : s.terms()) {
    if (x.b2 != 0 || x.a2 > 0 || x.a2 % 4 != 0)
      throw std::invalid_argument("u_to_w: term " + Series2<DrEl>::monomial_string(x) + " is not a power of u^-2");
    const int n = -x.a2 / 4;
    if (n <= N) r[n] += c;
  }
  return r;
}

// Gamma(u) of the K-operator built from a family, as a w-series through order N.
inline WSeries gamma_of_family(const AltFamily<DrEl> &f, const HomParams &p, int N, const DrinfeldEngine *e) {
  const SeriesMat<DrEl> K = build_K_equitable(f, p.kbar_plus, p.kbar_minus, -4 * N);
  return u_to_w(quantum_determinant(K, -4 * N), N, e);
}

// Gamma(u) from the central generating function: (C(u) - r)/(q - q^-1), with
// C(u) = sum_n C_{n+1} U^{-n-1}.
inline WSeries gamma_from_center(const AltFamily<DrEl> &f, int N, const DrinfeldEngine *e) {
  const auto c = cC_series_coeffs(f, N - 1);
  WSeries r(e, N);
  r[0] = DrEl(e, -rho_bar() / (qdiff() * qdiff()));
  for (int n = 1; n <= N; ++n) r[n] = (qdiff().inverse() * U_power_in_w(n)) * c[static_cast<std::size_t>(n - 1)];
  return r;
}

// (eps_+ eps_- q^-3 w - rho/(q - q^-1)^2) * series
inline WSeries gamma_prefactor_times(const DrinfeldEngine *e, const HomParams &p, const WSeries &s) {
  WSeries pre(e, s.order());
  pre[0] = DrEl(e, -rho_bar() / (qdiff() * qdiff()));
  if (s.order() >= 1) pre[1] = RationalQ::q_pow(-3) * (p.eps_plus * p.eps_minus);
  return pre * s;
}

// exp(-(q - q^-1) sum_n gamma_n (q^2 u^2 lambda)^{-n})
inline WSeries gamma_exponential(const DrinfeldEngine *e, const HomParams &p, int N) {
  WSeries s(e, N);
  for (int n = 1; n <= N; ++n)
    s[n] = (-qdiff() * RationalQ::q_pow(-2 * n)) * (p.lambda_inv_pow(e, n) * DrEl::gamma(e, n));
  return commuting_exp(s);
}

// g(u) K^-1 psi(q^2 u^2 lambda) g(uq), g(u) = exp(-(q - q^-1) sum a_{1,n} (q u^2 lambda)^{-n})
inline WSeries gamma_via_psi(const DrinfeldEngine *e, const HomParams &p, int N, bool with_Kinv = true) {
  const WSeries g = g_series(e, p, symbol_source(e), true, N);
  WSeries psi = psi_series(e, p, N).u_scaled(1);
  if (with_Kinv)
    for (auto &c : psi.c) c = DrEl::Kpow(e, -2) * c;
  return g * psi * g.u_scaled(1);
}

inline std::vector<DrEl> gamma_prime_values(const DrinfeldEngine *e, const HomParams &p, int N) {
  std::vector<DrEl> v;
  for (int n = 1; n <= N; ++n) v.push_back(gamma_prime(e, p, n));
  return v;
}

// Opposite multiplication: evaluating an expression in Opp<T> evaluates its
// image under an antiautomorphism that fixes the letters.
template <class T> struct Opp {
  T v;
  bool is_zero() const { return v.is_zero(); }
  friend Opp operator+(const Opp &a, const Opp &b) { return {a.v + b.v}; }
  friend Opp operator-(const Opp &a, const Opp &b) { return {a.v - b.v}; }
  Opp &operator+=(const Opp &o) { return *this = *this + o; }
  friend Opp operator*(const Opp &a, const Opp &b) { return {b.v * a.v}; }
  friend Opp operator*(const RationalQ &s, const Opp &a) { return {s * a.v}; }
};

// The family under S (y fixed, z <-> z~) in the opposite algebra.
template <class T> AltFamily<Opp<T>> s_family(const AltFamily<T> &g) {
  auto wrap = [](const std::vector<T> &v) {
    std::vector<Opp<T>> r;
    for (const T &x : v) r.push_back({x});
    return r;
  };
  AltFamily<Opp<T>> s;
  s.one = {g.one};
  s.ym = wrap(g.ym);
  s.yp = wrap(g.yp);
  s.z = wrap(g.zt);
  s.zt = wrap(g.z);
  return s;
}

inline CheckList check_mu(const DrinfeldEngine &eng, int N) {
  using drc::Sweep;
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const nlohmann::json par{{"order", N}, {"window", eng.window()}};
  CheckList out;
  const int M = std::max(N + 1, 3);
  const NuSeries s = mu_series(e, P, M);
  const AltFamily<DrEl> f = family_from_series(e, s);
  {
    Sweep sw("mu_routes_agree", par);
    const NuSeries t = mu_series_via_nu(e, P, M);
    const WSeries *a[4] = {&s.Yp, &s.Ym, &s.Zp, &s.Zm}, *b[4] = {&t.Yp, &t.Ym, &t.Zp, &t.Zm};
    const char *names[4] = {"Y+", "Y-", "Z+", "Z-"};
    for (int i = 0; i < 4; ++i)
      for (int n = 0; n <= M; ++n) sw.expect_zero((*a[i])[n] - (*b[i])[n], std::string(names[i]) + " w^" + std::to_string(n));
    sw.finish(out);
  }
  {
    Sweep sw("mu_relations", par);
    for (AltRelation r : kDefRelations)
      for (int k = 0; k <= 1; ++k)
        for (int l = 0; k + l <= 1; ++l) {
          if (single_index(r) && l > 0) continue;
          const std::string where = relation_name(r) + " " + drc::idx(k, l);
          for (const DrEl &x : relation_residuals(r, k, l, f)) sw.expect_zero(x, where);
        }
    sw.finish(out);
  }
  const WSeries G = gamma_of_family(f, P, N, e);
  {
    Sweep sw("mu_gamma_center", par);
    const WSeries Gc = gamma_from_center(f, N, e);
    for (int n = 0; n <= N; ++n) sw.expect_zero(G[n] - Gc[n], "w^" + std::to_string(n));
    sw.finish(out);
  }
  {
    // Gamma coefficients commute with the generator images.
    Sweep sw("mu_gamma_central", par);
    std::vector<std::pair<std::string, DrEl>> gens;
    for (int k = 0; k + 1 <= N; ++k) gens.push_back({"y-" + std::to_string(k), f.y_minus(k)});
    for (int k = 1; k <= N; ++k) {
      gens.push_back({"y" + std::to_string(k), f.y_plus(k)});
      gens.push_back({"z" + std::to_string(k), f.zz(k)});
      gens.push_back({"z~" + std::to_string(k), f.zzt(k)});
    }
    for (int n = 1; n <= N; ++n)
      for (const auto &[name, x] : gens) sw.expect_zero(G[n] * x - x * G[n], "Gamma_" + std::to_string(n) + ", " + name);
    sw.finish(out);
  }
  {
    Sweep sw("mu_gamma_factorized", par);
    const WSeries rhs = gamma_prefactor_times(e, P, gamma_exponential(e, P, N));
    for (int n = 0; n <= N; ++n) sw.expect_zero(G[n] - rhs[n], "w^" + std::to_string(n));
    sw.finish(out);
  }
  {
    Sweep sw("mu_gamma_factorized_psi", par);
    const WSeries rhs = gamma_prefactor_times(e, P, gamma_via_psi(e, P, N));
    for (int n = 0; n <= N; ++n) sw.expect_zero(G[n] - rhs[n], "w^" + std::to_string(n));
    sw.finish(out);
  }
  {
    Sweep sw("mu_gamma_specialization", par);
    const auto vals = gamma_prime_values(e, P, N);
    for (int n = 0; n <= N; ++n) {
      DrEl x = G[n].substitute_gamma(vals);
      if (n == 0) x += DrEl(e, rho_bar() / (qdiff() * qdiff()));
      sw.expect_zero(x, "w^" + std::to_string(n));
    }
    sw.finish(out);
  }
  {
    // sigma and S fix the central elements C_{n+1}: C built from the swapped
    // family, and from the S-family with reversed products, agrees.
    Sweep sw("mu_center_sigma_invariant", par);
    Sweep sw_s("mu_center_s_invariant", par);
    const int n_max = std::min(N, 3) - 1;
    const auto a = cC_series_coeffs(f, n_max);
    const auto b = cC_series_coeffs(sigma_family(f), n_max);
    const auto c = cC_series_coeffs(s_family(f), n_max);
    for (int n = 0; n <= n_max; ++n) {
      const auto i = static_cast<std::size_t>(n);
      sw.expect_zero(a[i] - b[i], "C_" + std::to_string(n + 1));
      sw_s.expect_zero(a[i] - c[i].v, "C_" + std::to_string(n + 1));
    }
    sw.finish(out);
    sw_s.finish(out);
  }
  {
    // The extension is proper: the image of C_1 is not a scalar.
    const auto c = cC_series_coeffs(f, 0);
    bool proper = false;
    for (const auto &[m, v] : c[0].terms()) proper = proper || !m.gam.empty();
    record_bool(out, "mu_center_nontrivial", par, proper, "C_1 image has no central symbol");
  }
  return out;
}

// Freidel-Maillet relation for the central-extension K-operator of the mu-images.
inline CheckList check_mu_fm(const DrinfeldEngine &eng, int order) {
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const int M = order / 2 + 1;
  const AltFamily<DrEl> f = family_from_series(e, mu_series(e, P, M));
  return check_fm(f, order, "mu_freidel_maillet");
}

} // namespace uqalt
