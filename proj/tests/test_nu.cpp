#include "uqalt/nu.hpp"

#include <catch_amalgamated.hpp>

using namespace uqalt;

namespace {

void require_all(const CheckList &l) {
  for (const auto &r : l) {
    INFO(r.check << " " << r.params.dump() << " " << r.detail);
    CHECK(r.pass);
  }
}

} // namespace

TEST_CASE("nu suite") {
  DrinfeldEngine eng(6);
  const CheckList l = check_nu(eng, 3);
  CHECK(l.size() == 7);
  require_all(l);
}

TEST_CASE("gamma' values") {
  DrinfeldEngine eng(4);
  const DrinfeldEngine *e = &eng;
  HomParams p = HomParams::standard(e);
  // Hand value: -q C^{1/2} / (q - q^-1)
  CHECK((gamma_prime(e, p, 1) - DrEl::Cpow(e, 1, -RationalQ::q() / qdiff())).is_zero());
  // gamma'_2 = -(q - q^-1)^3/2 (q C^{1/2}/(q - q^-1)^2)^2
  CHECK((gamma_prime(e, p, 2) - DrEl::Cpow(e, 2, -(qdiff().inverse() * RationalQ::q_pow(2)) / RationalQ(2))).is_zero());
  p.eps_plus = DrEl(e);
  for (int n = 1; n <= 3; ++n) CHECK(gamma_prime(e, p, n).is_zero());
  CHECK_THROWS_AS(gamma_prime(e, p, 0), std::invalid_argument);
}

TEST_CASE("c(u) c(uq) is a geometric series") {
  DrinfeldEngine eng(4);
  const DrinfeldEngine *e = &eng;
  const HomParams p = HomParams::standard(e);
  const WSeries c = g_series(e, p, gamma_prime_source(e, p), false, 5);
  const WSeries cc = c * c.u_scaled(1);
  // 1/(1 - x) with x = q^-1 C^-1 w for the standard parameters
  for (int n = 0; n <= 5; ++n) {
    INFO("order " << n);
    CHECK((cc[n] - DrEl::Cpow(e, -2 * n, RationalQ::q_pow(-n))).is_zero());
  }
}

TEST_CASE("commuting exponential") {
  DrinfeldEngine eng(4);
  const DrinfeldEngine *e = &eng;
  WSeries s(e, 4);
  s[1] = DrEl(e, RationalQ(1));
  const WSeries E = commuting_exp(s);
  RationalQ f(1);
  for (int n = 0; n <= 4; ++n) {
    if (n > 0) f = f / RationalQ(n);
    CHECK((E[n] - DrEl(e, f)).is_zero());
  }
  s[0] = DrEl(e, RationalQ(1));
  CHECK_THROWS_AS(commuting_exp(s), std::invalid_argument);
}

TEST_CASE("nu images of y0 and y1 in a small window") {
  DrinfeldEngine eng(2);
  const DrinfeldEngine *e = &eng;
  const HomParams p = HomParams::standard(e);
  const AltFamily<DrEl> f = family_from_series(e, nu_series(e, p, gamma_prime_source(e, p), 1));
  const DrEl y0 = DrEl::Cpow(e, -2) * DrEl::Kpow(e, 2) -
                  (RationalQ::q_pow(-1) * qdiff()) * (DrEl::Cpow(e, -2) * DrEl::xminus(e, 1));
  CHECK((f.y_minus(0) - y0).is_zero());
}
