#include "uqalt/drinfeld_checks.hpp"

#include <catch_amalgamated.hpp>

using namespace uqalt;
using D = DrinfeldElement;

namespace {

RationalQ q(int e = 1) { return RationalQ::q_pow(e); }

void require_all(const CheckList &l) {
  for (const auto &r : l) {
    INFO(r.check << " " << r.params.dump() << " " << r.detail);
    CHECK(r.pass);
  }
}

} // namespace

TEST_CASE("basic straightening") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  const D K = D::Kpow(e, 2), Kinv = D::Kpow(e, -2);
  CHECK(K * D::xplus(e, 0) == q(2) * (D::xplus(e, 0) * K));
  // x+_0 x-_0 = x-_0 x+_0 + (K - K^-1)/(q - q^-1)
  CHECK(D::xplus(e, 0) * D::xminus(e, 0) ==
        D::xminus(e, 0) * D::xplus(e, 0) + qdiff().inverse() * (K - Kinv));
  // x+_2 x+_0 = q^2 x+_0 x+_2 + (q^2 - 1) x+_1^2
  CHECK(D::xplus(e, 2) * D::xplus(e, 0) ==
        q(2) * (D::xplus(e, 0) * D::xplus(e, 2)) + (q(2) - 1) * (D::xplus(e, 1) * D::xplus(e, 1)));
  CHECK((D::xplus(e, 2) * D::xplus(e, 0)).to_string() ==
        "q^2 * x+[0].x+[2] + (q^2 - 1) * x+[1].x+[1]");
  CHECK(K * Kinv == D(e, 1));
  CHECK(D::Kpow(e, 1) * D::Kpow(e, 1) == K);
}

TEST_CASE("psi and phi expansions") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  const D K = D::Kpow(e, 2);
  CHECK(dr_psi(eng, 0) == K);
  CHECK(dr_phi(eng, 0) == D::Kpow(e, -2));
  CHECK(dr_psi(eng, 1) == qdiff() * (D::h(e, 1) * K));
  CHECK(dr_psi(eng, 2) == qdiff() * (D::h(e, 2) * K) + (qdiff() * qdiff() / RationalQ(2)) * (D::h(e, 1) * D::h(e, 1) * K));
  CHECK(dr_phi(eng, -1) == -qdiff() * (D::h(e, -1) * D::Kpow(e, -2)));
  CHECK(dr_psi(eng, -1).is_zero());
  CHECK(dr_phi(eng, 1).is_zero());
  // Oracle: psi_3 from the explicit cubic expansion of the exponential.
  const RationalQ s = qdiff();
  D expect = s * D::h(e, 3) + (s * s) * (D::h(e, 1) * D::h(e, 2)) +
             (s * s * s / RationalQ(6)) * (D::h(e, 1) * D::h(e, 1) * D::h(e, 1));
  CHECK(dr_psi(eng, 3) == expect * K);
}

TEST_CASE("window overflow is a hard error") {
  DrinfeldEngine eng(2);
  const DrinfeldEngine *e = &eng;
  CHECK_THROWS_AS(D::xplus(e, 3), WindowError);
  CHECK_THROWS_AS(D::h(e, 2) * D::xminus(e, 1), WindowError);
  try {
    (void)(D::h(e, 2) * D::xminus(e, 1));
  } catch (const WindowError &err) {
    CHECK(std::string(err.what()).find("mode 3") != std::string::npos);
  }
}

TEST_CASE("theta") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  CHECK(D::xplus(e, 0).theta() == D::xminus(e, 0));
  CHECK(D::Cpow(e, 1, q()).theta() == D::Cpow(e, -1, q(-1)));
  require_all(check_theta(eng, 50, 2024));
}

TEST_CASE("Drinfeld relations in the window") { require_all(check_drinfeld_relations(DrinfeldEngine(6))); }

TEST_CASE("alternating subalgebra relations") {
  DrinfeldEngine eng(6);
  require_all(check_alternating_subalgebra(eng, 3));
  // examples: [A+_1, A-_1]_{q^-1} = q^-1 B_2/(q - q^-1)
  AltDrinfeld A{&eng};
  CHECK(qinvcomm(A.Ap(1), A.Am(1)) == (q(-1) / qdiff()) * A.B(2));
  CHECK(comm(D::h(&eng, 1), A.B(2)).is_zero());
}

TEST_CASE("Drinfeld-Jimbo and equitable images") {
  DrinfeldEngine eng(6);
  require_all(check_iso_dj(eng));
  // A wrong image fails: E0 -> x-_1 without the K^-1 breaks [E0, F0].
  DJImages g(&eng);
  D bad = D::xminus(&eng, 1);
  CHECK_FALSE((comm(bad, g.F[0]) - qdiff().inverse() * (g.K[0] - g.Kinv[0])).is_zero());
}

TEST_CASE("rewrite order independence") { require_all(check_confluence(6, 200, 7)); }

TEST_CASE("gamma symbols, C specialization, counit") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  D g1 = D::gamma(e, 1);
  CHECK(g1 * D::xplus(e, 0) == D::xplus(e, 0) * g1);
  D val = D::Cpow(e, 1, q());
  CHECK(g1.substitute_gamma({val}) == val);
  CHECK((g1 * D::h(e, 1)).substitute_gamma({D(e)}).is_zero());
  CHECK_THROWS_AS(D::gamma(e, 2).substitute_gamma({val}), std::invalid_argument);
  CHECK((D::Cpow(e, 3, q()) + D::Cpow(e, -1, q())).at_C_one() == D(e, 2 * q()));
  CHECK((D::Kpow(e, 2) * D::Cpow(e, 1) + D::xplus(e, 0) + g1).counit() == RationalQ(1));
}
