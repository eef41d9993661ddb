#include "uqalt/lop.hpp"

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

TEST_CASE("dressing suite") {
  DrinfeldEngine eng(6);
  const CheckList l = check_lop(eng, 3);
  CHECK(l.size() == 7);
  require_all(l);
}

TEST_CASE("leading coefficient of the dressed (1,1) entry") {
  DrinfeldEngine eng(4);
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const DrMat Kz = build_Ktilde_minus(e, P, gamma_prime_source(e, P), 1);
  const DrEl *c0 = Kz(0, 0).find({0, 0});
  REQUIRE(c0 != nullptr);
  const DrEl Ki = DrEl::Kpow(e, -2), x0 = DrEl::xplus(e, 0);
  const DrEl good = P.eps_plus * Ki - (P.kbar_minus * (RationalQ::q_pow(2) + 1)) * (Ki * x0);
  const DrEl bad = P.eps_plus * Ki - (P.kbar_minus * qsum()) * (Ki * x0);
  CHECK((*c0 - good).is_zero());
  CHECK_FALSE((*c0 - bad).is_zero());
}

TEST_CASE("dressing needs the shift by lambda") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const CentralSource cen = gamma_prime_source(e, P);
  const int N = 2;
  const LOperator L = build_L_minus(e, P, cen, N, false);
  const DrMat Kg = symmetric_gauge(set_floor(L.L * build_Ktilde0(e, P) * L.L0, -2 * N), N);
  const DrMat Kn =
      build_K_equitable(family_from_series(e, nu_series(e, P, cen, N)), P.kbar_plus, P.kbar_minus, -4 * N);
  CHECK_FALSE((Kg - Kn).is_zero());
}

TEST_CASE("RLL fails with the transposed R-matrix") {
  DrinfeldEngine eng(6);
  const DrinfeldEngine *e = &eng;
  const HomParams P = HomParams::standard(e);
  const int N = 2, F = -2 * N;
  const LOperator L = build_L_minus(e, P, gamma_prime_source(e, P), N, false);
  const DrMat L1 = set_floor(kron_left(L.L), F);
  const DrMat L2 = set_floor(kron_right(in_second_variable(L.L)), F);
  const ScalarMat Rt = R_tilde_num({2, -2}).map_entries([](const ScalarSeries &s) { return s.shifted({0, 2}); });
  const ScalarMat Rt21 = permutation() * Rt * permutation();
  CHECK(set_floor(Rt * L1 * L2 - L2 * L1 * Rt, F + 2).is_zero());
  CHECK_FALSE(set_floor(Rt21 * L1 * L2 - L2 * L1 * Rt21, F + 2).is_zero());
}
