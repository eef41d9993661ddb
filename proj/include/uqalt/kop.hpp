#pragma once

// K-operator of the alternating generators, its Freidel-Maillet residual and
// the quantum determinant.

#include "uqalt/alternating.hpp"
#include "uqalt/rmatrix.hpp"

namespace uqalt {

// U^{-j} with U = q u^2/(q + q^-1), as a scalar times u^{-2j}.
inline RationalQ U_inverse_power_coeff(int j) { return (qsum() / RationalQ::q()).pow(j); }

// Generating function sum_k gen(k) U^{-k-1} in the variable u, keeping
// exactly the terms whose u-exponent (after the optional factor u) is >= floor.
// Throws TruncationError if a needed generator is missing from the family.
template <class T, class Gen>
Series2<T> alt_series(Gen gen, int floor2, bool times_u, int max_index) {
  Series2<T> s(floor2);
  for (int k = 0;; ++k) {
    const int a2 = -2 * (2 * k + 2) + (times_u ? 2 : 0);
    if (floor2 != kNoFloor && a2 < floor2) break;
    if (k > max_index)
      throw TruncationError("generating function needs index " + std::to_string(k) +
                            " beyond the generator table");
    s.add_term({a2, 0}, U_inverse_power_coeff(k + 1) * gen(k));
  }
  return s;
}

// K(u) of the Freidel-Maillet presentation, truncated at u-exponent floor2/2.
// kbar_plus * kbar_minus * (q + q^-1)^2 must equal rho-bar.
template <class T>
SeriesMat<T> build_K_equitable(const AltFamily<T> &g, const RationalQ &kp, const RationalQ &km, int floor2) {
  if (kp * km * qsum() * qsum() != rho_bar())
    throw std::invalid_argument("K-operator parameters violate kbar_+ kbar_- (q+q^-1)^2 = rho-bar");
  const int ny = static_cast<int>(std::min(g.ym.size(), g.yp.size() - 1)) - 1;
  const int nz = static_cast<int>(std::min(g.z.size(), g.zt.size())) - 2;
  const RationalQ q = RationalQ::q();
  SeriesMat<T> K(2, floor2);
  K(0, 0) = q * alt_series<T>([&](int k) { return g.y_plus(k + 1); }, floor2, true, ny);
  K(1, 1) = q * alt_series<T>([&](int k) { return g.y_minus(k); }, floor2, true, ny);
  K(0, 1) = (km * qsum()).inverse() * alt_series<T>([&](int k) { return g.zzt(k + 1); }, floor2, false, nz);
  K(0, 1).add_term({0, 0}, (kp * qsum() / qdiff()) * g.one);
  K(1, 0) = (kp * qsum()).inverse() * alt_series<T>([&](int k) { return g.zz(k + 1); }, floor2, false, nz);
  K(1, 0).add_term({0, 0}, (km * qsum() / qdiff()) * g.one);
  return K;
}

// Default normalization kbar_+ = q^-1 (q - q^-1), kbar_- = q - q^-1.
inline RationalQ default_kbar_plus() { return RationalQ::q_pow(-1) * qdiff(); }
inline RationalQ default_kbar_minus() { return qdiff(); }

template <class T> SeriesMat<T> in_second_variable(const SeriesMat<T> &K) {
  return K.map_entries([](const Series2<T> &s) { return s.swapped_vars(); });
}

template <class T> SeriesMat<T> set_floor(SeriesMat<T> m, int floor2) {
  return m.map_entries([&](Series2<T> s) {
    s.set_floor(floor2);
    return s;
  });
}

// R(u/v)(K(u) x I) R0 (I x K(v)) - (I x K(v)) R0 (K(u) x I) R(u/v), with every
// coefficient of u^a v^b, a + b >= floor, exact.
template <class T> SeriesMat<T> freidel_maillet_residual(const SeriesMat<T> &Ku, int floor2) {
  const SeriesMat<T> K1 = set_floor(kron_left(Ku), floor2);
  const SeriesMat<T> K2 = set_floor(kron_right(in_second_variable(Ku)), floor2);
  const ScalarMat R = R_sym({2, -2}), R0 = R_zero();
  return R * K1 * R0 * K2 - K2 * R0 * K1 * R;
}

// tr_12(P^-_12 (K(u) x I) R0 (I x K(uq))) as a series in u, exact down to floor.
template <class T> Series2<T> quantum_determinant(const SeriesMat<T> &Ku, int floor2) {
  const SeriesMat<T> K1 = set_floor(kron_left(Ku), floor2);
  const SeriesMat<T> K2 =
      set_floor(kron_right(Ku.map_entries([](const Series2<T> &s) { return s.rescaled(1, 0); })), floor2);
  const SeriesMat<T> X = K1 * R_zero() * K2;
  // tr(P^- X) = (tr X - tr(P X)) / 2
  const ScalarMat P = permutation();
  Series2<T> tr(floor2), trP(floor2);
  for (int i = 0; i < 4; ++i) tr += X(i, i);
  const SeriesMat<T> PX = P * X;
  for (int i = 0; i < 4; ++i) trP += PX(i, i);
  return (RationalQ(1) / RationalQ(2)) * (tr - trP);
}

// C(u) assembled from the generating functions, exact down to floor.
template <class T> Series2<T> cC_series(const AltFamily<T> &g, int floor2) {
  const int ny = static_cast<int>(std::min(g.ym.size(), g.yp.size() - 1)) - 1;
  const int nz = static_cast<int>(std::min(g.z.size(), g.zt.size())) - 2;
  // The YY product carries u^2, so compute it two units deeper.
  const int deep = floor2 - 4;
  auto Yp = alt_series<T>([&](int k) { return g.y_plus(k + 1); }, deep, false, ny);
  auto Ym = alt_series<T>([&](int k) { return g.y_minus(k); }, deep, false, ny).rescaled(1, 0);
  auto Zm = alt_series<T>([&](int k) { return g.zz(k + 1); }, floor2, false, nz);
  auto Zp = alt_series<T>([&](int k) { return g.zzt(k + 1); }, floor2, false, nz).rescaled(1, 0);
  const RationalQ q2 = RationalQ::q_pow(2);
  Series2<T> out = (qdiff() * q2) * (Yp * Ym).shifted({4, 0});
  out.set_floor(floor2);
  out -= (qdiff() / rho_bar()) * (Zm * Zp);
  out -= Zm;
  out -= Zp;
  return out;
}

// qdet in terms of C(u): (C + sigma(C) - 2 rho/(q - q^-1)) / (2 (q - q^-1)).
// sigma is an algebra automorphism, so sigma(C) is C built from the swapped family.
template <class T> Series2<T> qdet_from_cC(const Series2<T> &C, const Series2<T> &Csigma, const T &one) {
  Series2<T> s = C + Csigma;
  s.add_term({0, 0}, (RationalQ(-2) * rho_bar() / qdiff()) * one);
  return (RationalQ(2) * qdiff()).inverse() * s;
}

// Freidel-Maillet and quantum-determinant checks for a generator family.
template <class T>
CheckList check_fm(const AltFamily<T> &g, int order, const std::string &name = "freidel_maillet") {
  CheckList out;
  const SeriesMat<T> K = build_K_equitable(g, default_kbar_plus(), default_kbar_minus(), -2 * order);
  const SeriesMat<T> r = freidel_maillet_residual(K, -2 * order);
  record_bool(out, name, {{"order", order}, {"nonzero_terms", r.nonzero_terms()}}, r.is_zero(),
              "nonzero entry " + r.first_nonzero());
  return out;
}

// qdet through order N in U^-1: constant -rho/(q - q^-1)^2, all else zero.
template <class T> CheckList check_qdet(const AltFamily<T> &g, int order) {
  CheckList out;
  const int floor2 = -4 * order;
  const SeriesMat<T> K = build_K_equitable(g, default_kbar_plus(), default_kbar_minus(), floor2);
  Series2<T> d = quantum_determinant(K, floor2);
  d.add_term({0, 0}, (rho_bar() / (qdiff() * qdiff())) * g.one);
  record_bool(out, "quantum_determinant", {{"order", order}, {"nonzero_terms", d.terms().size()}}, d.is_zero(),
              "nonzero residual " + d.to_string().substr(0, 400));
  return out;
}

// qdet computed from the K-operator equals its expression through C(u).
template <class T> CheckList check_qdet_reduced(const AltFamily<T> &g, int order) {
  CheckList out;
  const int floor2 = -4 * order;
  const SeriesMat<T> K = build_K_equitable(g, default_kbar_plus(), default_kbar_minus(), floor2);
  const Series2<T> d = quantum_determinant(K, floor2);
  const Series2<T> r = d - qdet_from_cC(cC_series(g, floor2), cC_series(sigma_family(g), floor2), g.one);
  record_bool(out, "quantum_determinant_reduced", {{"order", order}, {"nonzero_terms", r.terms().size()}},
              r.is_zero(), "nonzero residual " + r.to_string().substr(0, 400));
  return out;
}

} // namespace uqalt
