#pragma once

// Scalar R-matrices, the Yang-Baxter residuals and the similarity transform
// between the symmetric and non-symmetric R-matrices.

#include "uqalt/check.hpp"
#include "uqalt/series.hpp"

namespace uqalt {

// Symmetric R-matrix evaluated at the spectral monomial x.
inline ScalarMat R_sym(Exp2 x) {
  const Exp2 xi{-x.a2, -x.b2};
  const RationalQ q = RationalQ::q(), qi = RationalQ::q_pow(-1);
  ScalarMat m(4);
  const ScalarSeries d = smono(x, q) - smono(xi, qi);
  m(0, 0) = d;
  m(3, 3) = d;
  m(1, 1) = smono(x) - smono(xi);
  m(2, 2) = m(1, 1);
  m(1, 2) = sconst(qdiff());
  m(2, 1) = m(1, 2);
  return m;
}

inline ScalarMat R_zero() {
  ScalarMat m(4);
  m(0, 0) = sconst(1);
  m(1, 1) = sconst(RationalQ::q_pow(-1));
  m(2, 2) = m(1, 1);
  m(3, 3) = sconst(1);
  return m;
}

// (zq - q^-1) times the non-symmetric R-matrix at z: polynomial entries.
inline ScalarMat R_tilde_num(Exp2 z) {
  const RationalQ q = RationalQ::q(), qi = RationalQ::q_pow(-1);
  const ScalarSeries den = smono(z, q) - sconst(qi);
  ScalarMat m(4);
  m(0, 0) = den;
  m(3, 3) = den;
  m(1, 1) = smono(z) - sconst(1);
  m(2, 2) = m(1, 1);
  m(1, 2) = smono(z, qdiff());
  m(2, 1) = sconst(qdiff());
  return m;
}

inline ScalarMat permutation() {
  ScalarMat m(4);
  m(0, 0) = sconst(1);
  m(1, 2) = sconst(1);
  m(2, 1) = sconst(1);
  m(3, 3) = sconst(1);
  return m;
}

// Evaluate every entry at u = v = 1.
inline ScalarMat at_one(const ScalarMat &m) {
  ScalarMat r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r(i, j) = sconst(m(i, j).at_one(RationalQ(0)));
  return r;
}

enum class RKind { symmetric, nonsymmetric };

// R12(u/v) R13(u) R23(v) - R23(v) R13(u) R12(u/v) as an 8x8 matrix.
// For the non-symmetric matrix all three factors carry their cleared
// denominators; the common scalar factor is the same on both sides.
inline ScalarMat yang_baxter_residual(RKind which) {
  const Exp2 u{2, 0}, v{0, 2}, uv{2, -2};
  auto R = [&](Exp2 x) { return which == RKind::symmetric ? R_sym(x) : R_tilde_num(x); };
  const ScalarMat R12 = embed3(R(uv), 0, 1), R13 = embed3(R(u), 0, 2), R23 = embed3(R(v), 1, 2);
  return R12 * R13 * R23 - R23 * R13 * R12;
}

inline ScalarMat diag2(const ScalarSeries &a, const ScalarSeries &b) {
  ScalarMat m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// M(x) = diag(x^{-1/2}, x^{1/2}) for a variable x given by its doubled unit exponent.
inline ScalarMat gauge_M(Exp2 x, bool inverse = false) {
  const Exp2 h{x.a2 / 2, x.b2 / 2}, hi{-x.a2 / 2, -x.b2 / 2};
  return inverse ? diag2(smono(h), smono(hi)) : diag2(smono(hi), smono(h));
}

// Residuals of the two similarity identities, multiplied through by
// (zq - q^-1) with z = u^2/v^2, which turns the scalar prefactor into u/v.
struct SimilarityResiduals {
  ScalarMat first, second;
};

inline SimilarityResiduals similarity_residuals() {
  const Exp2 u{2, 0}, v{0, 2};
  const ScalarMat Mu = kron_left(gauge_M(u)), Mui = kron_left(gauge_M(u, true));
  const ScalarMat Mv = kron_right(gauge_M(v)), Mvi = kron_right(gauge_M(v, true));
  const ScalarMat lhs = R_sym({2, -2}).map_entries([](const ScalarSeries &s) { return s.shifted({2, -2}); });
  const ScalarMat Rt = R_tilde_num({4, -4});
  const ScalarMat P = permutation();
  const ScalarMat Rt21 = P * Rt * P;
  return {lhs - Mu * Mv * Rt * Mvi * Mui, lhs - Mui * Mvi * Rt21 * Mv * Mu};
}

inline CheckList check_ybe() {
  CheckList out;
  auto add = [&](const char *name, RKind k) {
    ScalarMat r = yang_baxter_residual(k);
    record_bool(out, name, {{"nonzero_terms", r.nonzero_terms()}}, r.is_zero(), "nonzero entry " + r.first_nonzero());
  };
  add("ybe_symmetric", RKind::symmetric);
  add("ybe_nonsymmetric", RKind::nonsymmetric);
  return out;
}

inline CheckList check_permutation_points() {
  CheckList out;
  const ScalarMat P = permutation();
  const ScalarMat a = qdiff().inverse() * at_one(R_sym({2, 0}));
  record_bool(out, "permutation_from_symmetric", nlohmann::json::object(), a == P, "R(1)/(q-q^-1) differs");
  // R~(1) = P; the cleared denominator at z = 1 is q - q^-1.
  const ScalarMat b = qdiff().inverse() * at_one(R_tilde_num({2, 0}));
  record_bool(out, "permutation_from_nonsymmetric", nlohmann::json::object(), b == P, "R~(1) differs");
  return out;
}

inline CheckList check_similarity() {
  CheckList out;
  const auto r = similarity_residuals();
  record_bool(out, "similarity_first", {{"nonzero_terms", r.first.nonzero_terms()}}, r.first.is_zero(),
              "nonzero entry " + r.first.first_nonzero());
  record_bool(out, "similarity_second", {{"nonzero_terms", r.second.nonzero_terms()}}, r.second.is_zero(),
              "nonzero entry " + r.second.first_nonzero());
  // At v = u both conjugations collapse to (q - q^-1) P.
  const Exp2 u{2, 0}, v{0, 2};
  const ScalarMat conj = kron_left(gauge_M(u)) * kron_right(gauge_M(v)) * R_tilde_num({4, -4}) *
                         kron_right(gauge_M(v, true)) * kron_left(gauge_M(u, true));
  const ScalarMat at_diag = conj.map_entries([](const ScalarSeries &s) { return s.diagonal(); });
  record_bool(out, "similarity_equal_parameters", nlohmann::json::object(), at_diag == qdiff() * permutation(),
              "conjugated matrix at v = u is not (q - q^-1) P");
  return out;
}

} // namespace uqalt
