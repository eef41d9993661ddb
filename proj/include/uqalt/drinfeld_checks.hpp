#pragma once

// Relation sweeps for the Drinfeld engine: (gl1)-(gl4) within the mode window,
// the right alternating subalgebra, theta, the Drinfeld-Jimbo images and the
// equitable images, and rewrite-order independence.

#include "check.hpp"
#include "drinfeld.hpp"
#include "ncpoly.hpp"

#include <random>

namespace uqalt {

namespace drc {

using E = DrinfeldElement;

inline RationalQ q(int e = 1) { return RationalQ::q_pow(e); }

// Aggregate many residuals into one row; the first failure is reported.
class Sweep {
public:
  explicit Sweep(std::string name, nlohmann::json params) : name_(std::move(name)), params_(std::move(params)) {}
  template <class T> void expect_zero(const T &res, const std::string &where) {
    ++cases_;
    if (!res.is_zero() && detail_.empty()) {
      std::string s = res.to_string();
      if (s.size() > 300) s = s.substr(0, 300) + "...";
      detail_ = where + ": " + s;
    }
    if (!res.is_zero()) ++failures_;
  }
  void finish(CheckList &out) {
    params_["cases"] = cases_;
    out.push_back(CheckResult{name_, params_, failures_ == 0, detail_});
  }

private:
  std::string name_;
  nlohmann::json params_;
  int cases_ = 0;
  int failures_ = 0;
  std::string detail_;
};

inline std::string idx(int k, int l) { return "k=" + std::to_string(k) + ",l=" + std::to_string(l); }

} // namespace drc

inline DrinfeldElement dr_psi(const DrinfeldEngine &e, int m) {
  return DrinfeldElement::from_combination(&e, e.psi(m));
}
inline DrinfeldElement dr_phi(const DrinfeldEngine &e, int m) {
  return DrinfeldElement::from_combination(&e, e.phi(m));
}

// (gl1)-(gl4) for every admissible mode combination in the window.
inline CheckList check_drinfeld_relations(const DrinfeldEngine &eng) {
  using namespace drc;
  const DrinfeldEngine *e = &eng;
  const int M = eng.window();
  const nlohmann::json P{{"window", M}};
  CheckList out;
  const E one(e, 1);
  const E K = E::Kpow(e, 2), Kinv = E::Kpow(e, -2);

  {
    Sweep s("gl1", P);
    s.expect_zero(K * Kinv - one, "K K^-1");
    s.expect_zero(Kinv * K - one, "K^-1 K");
    s.expect_zero(E::Cpow(e, 1) * E::Cpow(e, -1) - one, "C^1/2 C^-1/2");
    s.finish(out);
  }
  {
    Sweep s("hh", P);
    for (int k = -M; k <= M; ++k)
      for (int l = -M; l <= M; ++l) {
        if (k == 0 || l == 0) continue;
        E res = comm(E::h(e, k), E::h(e, l));
        if (k + l == 0) {
          const RationalQ f = qint(2 * k) / RationalQ(k) / qdiff();
          res -= E::Cpow(e, 2 * k, f) - E::Cpow(e, -2 * k, f);
        }
        s.expect_zero(res, idx(k, l));
      }
    s.finish(out);
  }
  {
    Sweep s("hx", P);
    for (int k = -M; k <= M; ++k)
      for (int l = -M; l <= M; ++l) {
        if (k == 0 || k + l < -M || k + l > M) continue;
        const RationalQ f = qint(2 * k) / RationalQ(k);
        const int a = k < 0 ? -k : k;
        s.expect_zero(comm(E::h(e, k), E::xplus(e, l)) - E::Cpow(e, -a, f) * E::xplus(e, k + l),
                      "+," + idx(k, l));
        s.expect_zero(comm(E::h(e, k), E::xminus(e, l)) + E::Cpow(e, a, f) * E::xminus(e, k + l),
                      "-," + idx(k, l));
      }
    s.finish(out);
  }
  {
    Sweep s("gl2", P);
    for (int k = -M; k <= M; ++k) {
      s.expect_zero(K * E::xplus(e, k) * Kinv - q(2) * E::xplus(e, k), "+," + std::to_string(k));
      s.expect_zero(K * E::xminus(e, k) * Kinv - q(-2) * E::xminus(e, k), "-," + std::to_string(k));
    }
    s.finish(out);
  }
  {
    Sweep s("gl3", P);
    for (int sign : {1, -1}) {
      auto X = [&](int m) { return sign > 0 ? E::xplus(e, m) : E::xminus(e, m); };
      const RationalQ f = q(2 * sign);
      for (int k = -M; k + 1 <= M; ++k)
        for (int l = -M; l + 1 <= M; ++l)
          s.expect_zero(X(k + 1) * X(l) - f * (X(l) * X(k + 1)) - f * (X(k) * X(l + 1)) + X(l + 1) * X(k),
                        (sign > 0 ? "+," : "-,") + idx(k, l));
    }
    s.finish(out);
  }
  {
    Sweep s("gl4", P);
    const RationalQ inv = qdiff().inverse();
    for (int k = -M; k <= M; ++k)
      for (int l = -M; l <= M; ++l) {
        if (k + l < -M || k + l > M) continue;
        E rhs = inv * (E::Cpow(e, k - l) * dr_psi(eng, k + l) - E::Cpow(e, l - k) * dr_phi(eng, k + l));
        s.expect_zero(comm(E::xplus(e, k), E::xminus(e, l)) - rhs, idx(k, l));
      }
    s.finish(out);
  }
  return out;
}

// Right alternating subalgebra: A+_k = C^{-k/2} K^-1 x+_k, A-_l = C^{l/2} x-_l,
// B_k = K^-1 psi_k.
struct AltDrinfeld {
  const DrinfeldEngine *e;
  DrinfeldElement Ap(int k) const {
    return DrinfeldElement::Cpow(e, -k) * DrinfeldElement::Kpow(e, -2) * DrinfeldElement::xplus(e, k);
  }
  DrinfeldElement Am(int l) const { return DrinfeldElement::Cpow(e, l) * DrinfeldElement::xminus(e, l); }
  DrinfeldElement B(int k) const { return DrinfeldElement::Kpow(e, -2) * dr_psi(*e, k); }
};

inline CheckList check_alternating_subalgebra(const DrinfeldEngine &eng, int bound) {
  using namespace drc;
  const DrinfeldEngine *e = &eng;
  const AltDrinfeld A{e};
  const nlohmann::json P{{"window", eng.window()}, {"bound", bound}};
  const E K = E::Kpow(e, 2), Kinv = E::Kpow(e, -2), Ch = E::Cpow(e, 1);
  CheckList out;
  {
    Sweep s("alt1", P);
    for (int k = 1; k <= bound; ++k)
      for (int l = 1; l <= bound; ++l) s.expect_zero(comm(E::h(e, k), E::h(e, l)), "hh," + idx(k, l));
    for (int k = 1; k <= bound; ++k)
      for (int l = 0; l <= bound; ++l) s.expect_zero(comm(E::h(e, k), A.B(l)), "hB," + idx(k, l));
    s.finish(out);
  }
  {
    Sweep s("alt2", P);
    for (int k = 1; k <= bound; ++k)
      for (int l = 0; l <= bound; ++l) {
        const RationalQ f = qint(2 * k) / RationalQ(k);
        s.expect_zero(comm(E::h(e, k), A.Ap(l)) - f * A.Ap(k + l), "+," + idx(k, l));
        if (l >= 1) s.expect_zero(comm(E::h(e, k), A.Am(l)) + f * A.Am(k + l), "-," + idx(k, l));
      }
    s.finish(out);
  }
  {
    Sweep s("alt3", P);
    for (int k = 0; k <= bound; ++k)
      for (int l = 0; l <= bound; ++l) {
        s.expect_zero(A.Ap(k + 1) * A.Ap(l) - q(2) * (A.Ap(l) * A.Ap(k + 1)) - q(2) * (A.Ap(k) * A.Ap(l + 1)) +
                          A.Ap(l + 1) * A.Ap(k),
                      "+," + idx(k, l));
        if (k >= 1 && l >= 1)
          s.expect_zero(A.Am(k + 1) * A.Am(l) - q(-2) * (A.Am(l) * A.Am(k + 1)) -
                            q(-2) * (A.Am(k) * A.Am(l + 1)) + A.Am(l + 1) * A.Am(k),
                        "-," + idx(k, l));
      }
    s.finish(out);
  }
  {
    Sweep s("alt4", P);
    for (int k = 0; k <= bound; ++k)
      for (int l = 1; l <= bound; ++l)
        s.expect_zero(qinvcomm(A.Ap(k), A.Am(l)) - (q(-1) / qdiff()) * A.B(k + l), idx(k, l));
    s.finish(out);
  }
  {
    Sweep s("alt5", P);
    for (int k = 1; k <= bound; ++k) s.expect_zero(comm(E::h(e, k), K), "hK," + std::to_string(k));
    for (int k = 0; k <= bound; ++k) s.expect_zero(comm(A.B(k), K), "BK," + std::to_string(k));
    for (int k = 0; k <= bound; ++k) {
      s.expect_zero(comm(Ch, A.Ap(k)), "C A+," + std::to_string(k));
      if (k >= 1) s.expect_zero(comm(Ch, A.Am(k)), "C A-," + std::to_string(k));
      if (k >= 1) s.expect_zero(comm(Ch, E::h(e, k)), "C h," + std::to_string(k));
    }
    s.finish(out);
  }
  {
    Sweep s("alt6", P);
    for (int k = 0; k <= bound; ++k) {
      s.expect_zero(K * A.Ap(k) * Kinv - q(2) * A.Ap(k), "+," + std::to_string(k));
      if (k >= 1) s.expect_zero(K * A.Am(k) * Kinv - q(-2) * A.Am(k), "-," + std::to_string(k));
    }
    s.finish(out);
  }
  return out;
}

// A random element: a sum of a few products of generators with small modes.
inline DrinfeldElement random_drinfeld(const DrinfeldEngine &eng, std::mt19937_64 &rng, int max_len = 4,
                                       int max_mode = 1) {
  const DrinfeldEngine *e = &eng;
  std::uniform_int_distribution<int> nterms(1, 3), len(0, max_len), kind(0, 4), mode(-max_mode, max_mode),
      ex(-2, 2), co(-3, 3);
  DrinfeldElement r(e);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    DrinfeldElement p(e, RationalQ(LaurentQ::monomial(co(rng) == 0 ? 1 : co(rng), ex(rng))));
    const int L = len(rng);
    for (int i = 0; i < L; ++i) {
      int m = mode(rng);
      switch (kind(rng)) {
      case 0: p = p * DrinfeldElement::xplus(e, m); break;
      case 1: p = p * DrinfeldElement::xminus(e, m); break;
      case 2: p = p * DrinfeldElement::h(e, m == 0 ? 1 : m); break;
      case 3: p = p * DrinfeldElement::Kpow(e, m == 0 ? 2 : 2 * m); break;
      default: p = p * DrinfeldElement::Cpow(e, m); break;
      }
    }
    r += p;
  }
  return r;
}

inline CheckList check_theta(const DrinfeldEngine &eng, int samples, std::uint64_t seed) {
  using namespace drc;
  CheckList out;
  std::mt19937_64 rng(seed);
  Sweep s("theta_involution", {{"samples", samples}, {"seed", seed}});
  for (int i = 0; i < samples; ++i) {
    E p = random_drinfeld(eng, rng);
    s.expect_zero(p.theta().theta() - p, "sample " + std::to_string(i));
  }
  s.finish(out);
  // theta sends x+_0 to x-_0 and the gl4 relation at (1,-1) to a relation.
  const DrinfeldEngine *e = &eng;
  Sweep t("theta_images", {{"window", eng.window()}});
  t.expect_zero(E::xplus(e, 0).theta() - E::xminus(e, 0), "x+_0");
  t.expect_zero(E::h(e, 1).theta() + E::h(e, 1), "h_1");
  const RationalQ inv = qdiff().inverse();
  for (int k = -1; k <= 1; ++k)
    for (int l = -1; l <= 1; ++l) {
      E res = comm(E::xplus(e, k), E::xminus(e, l)) -
              inv * (E::Cpow(e, k - l) * dr_psi(eng, k + l) - E::Cpow(e, l - k) * dr_phi(eng, k + l));
      t.expect_zero(res.theta(), "gl4 " + idx(k, l));
    }
  t.finish(out);
  return out;
}

// Leftmost and rightmost rewriting must agree on random words.
inline CheckList check_confluence(int window, int samples, std::uint64_t seed) {
  using namespace drc;
  DrinfeldEngine left(window, RewriteStrategy::leftmost), right(window, RewriteStrategy::rightmost);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(2, 5), kind(0, 3), mode(-1, 1);
  Sweep s("rewrite_order_independence", {{"window", window}, {"samples", samples}, {"seed", seed}});
  for (int i = 0; i < samples; ++i) {
    DrWord w;
    const int L = len(rng);
    for (int j = 0; j < L; ++j) {
      const int m = mode(rng);
      switch (kind(rng)) {
      case 0: w.push_back(dr::xp(m)); break;
      case 1: w.push_back(dr::xm(m)); break;
      case 2: w.push_back(dr::h(m == 0 ? 1 : m)); break;
      default: w.push_back(dr::Kh(m == 0 ? -2 : 2 * m)); break;
      }
    }
    // Both results are expressed over the left engine so they can be subtracted.
    E a = E::from_combination(&left, *left.straighten(w));
    E b = E::from_combination(&left, *right.straighten(w));
    s.expect_zero(a - b, "sample " + std::to_string(i));
  }
  CheckList out;
  s.finish(out);
  return out;
}

// Images of the Drinfeld-Jimbo generators:
// K0 -> C K^-1, K1 -> K, E1 -> x+_0, E0 -> x-_1 K^-1, F1 -> x-_0, F0 -> K x+_{-1}.
struct DJImages {
  DrinfeldElement K[2], Kinv[2], E[2], F[2];
  explicit DJImages(const DrinfeldEngine *e) {
    using D = DrinfeldElement;
    K[0] = D::Cpow(e, 2) * D::Kpow(e, -2);
    Kinv[0] = D::Cpow(e, -2) * D::Kpow(e, 2);
    K[1] = D::Kpow(e, 2);
    Kinv[1] = D::Kpow(e, -2);
    E[1] = D::xplus(e, 0);
    E[0] = D::xminus(e, 1) * D::Kpow(e, -2);
    F[1] = D::xminus(e, 0);
    F[0] = D::Kpow(e, 2) * D::xplus(e, -1);
  }
};

inline CheckList check_iso_dj(const DrinfeldEngine &eng) {
  using namespace drc;
  const DrinfeldEngine *e = &eng;
  const DJImages g(e);
  const nlohmann::json P{{"window", eng.window()}};
  const E one(e, 1);
  CheckList out;
  auto a = [](int i, int j) { return i == j ? 2 : -2; };
  {
    Sweep s("dj_cartan", P);
    for (int i = 0; i < 2; ++i) {
      s.expect_zero(g.K[i] * g.Kinv[i] - one, "K K^-1 " + std::to_string(i));
      s.expect_zero(g.Kinv[i] * g.K[i] - one, "K^-1 K " + std::to_string(i));
      for (int j = 0; j < 2; ++j) {
        s.expect_zero(comm(g.K[i], g.K[j]), "KK " + idx(i, j));
        s.expect_zero(g.K[i] * g.E[j] * g.Kinv[i] - q(a(i, j)) * g.E[j], "KE " + idx(i, j));
        s.expect_zero(g.K[i] * g.F[j] * g.Kinv[i] - q(-a(i, j)) * g.F[j], "KF " + idx(i, j));
      }
    }
    s.finish(out);
  }
  {
    Sweep s("dj_ef", P);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        E rhs(e);
        if (i == j) rhs = qdiff().inverse() * (g.K[i] - g.Kinv[i]);
        s.expect_zero(comm(g.E[i], g.F[j]) - rhs, idx(i, j));
      }
    s.finish(out);
  }
  {
    Sweep s("dj_serre", P);
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i;
      s.expect_zero(comm(g.E[i], qinvcomm(g.E[i], qcomm(g.E[i], g.E[j]))), "E " + idx(i, j));
      s.expect_zero(comm(g.F[i], qinvcomm(g.F[i], qcomm(g.F[i], g.F[j]))), "F " + idx(i, j));
    }
    s.finish(out);
  }
  {
    Sweep s("dj_central", P);
    const E C = g.K[0] * g.K[1];
    s.expect_zero(C - E::Cpow(e, 2), "K0 K1 = C");
    for (int i = 0; i < 2; ++i) {
      s.expect_zero(comm(C, g.E[i]), "E" + std::to_string(i));
      s.expect_zero(comm(C, g.F[i]), "F" + std::to_string(i));
    }
    s.finish(out);
  }
  // Equitable images y+_i -> K_i^-1 - q(q-q^-1) K_i^-1 E_i, y-_i -> K_i^-1 + (q-q^-1) F_i, k_i -> K_i.
  E yp[2], ym[2];
  for (int i = 0; i < 2; ++i) {
    yp[i] = g.Kinv[i] - (q() * qdiff()) * (g.Kinv[i] * g.E[i]);
    ym[i] = g.Kinv[i] + qdiff() * g.F[i];
  }
  {
    Sweep s("equitable_images", P);
    const RationalQ inv = qdiff().inverse();
    const E k01 = g.K[0] * g.K[1], k01inv = g.Kinv[0] * g.Kinv[1];
    for (int i = 0; i < 2; ++i) {
      s.expect_zero(comm(k01, yp[i]), "k0k1 central y+" + std::to_string(i));
      s.expect_zero(comm(k01, ym[i]), "k0k1 central y-" + std::to_string(i));
      s.expect_zero(inv * qcomm(yp[i], g.K[i]) - one, "[y+,k]_q " + std::to_string(i));
      s.expect_zero(inv * qcomm(g.K[i], ym[i]) - one, "[k,y-]_q " + std::to_string(i));
      s.expect_zero(inv * qcomm(ym[i], yp[i]) - one, "[y-,y+]_q " + std::to_string(i));
      s.expect_zero(inv * qcomm(yp[i], ym[1 - i]) - k01inv, "[y+,y-]_q " + idx(i, 1 - i));
      s.expect_zero(serre_relator(yp[i], yp[1 - i]), "serre y+ " + idx(i, 1 - i));
      s.expect_zero(serre_relator(ym[i], ym[1 - i]), "serre y- " + idx(i, 1 - i));
    }
    s.finish(out);
  }
  return out;
}

} // namespace uqalt
