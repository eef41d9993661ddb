#include "uqalt/rmatrix.hpp"

#include <catch_amalgamated.hpp>

using namespace uqalt;

namespace {

void require_all(const CheckList &l) {
  for (const auto &r : l) {
    INFO(r.check << " " << r.detail);
    CHECK(r.pass);
  }
}

} // namespace

TEST_CASE("R-matrix entries") {
  const ScalarMat R = R_sym({2, 0});
  CHECK(R(0, 0).to_string() == "[u^-1 v^0](-q^-1) + [u^1 v^0](q)");
  CHECK(R(1, 2).to_string() == "[u^0 v^0](q - q^-1)");
  CHECK(R(0, 1).is_zero());
  const ScalarMat Rt = R_tilde_num({2, 0});
  CHECK(Rt(1, 2).to_string() == "[u^1 v^0](q - q^-1)");
  CHECK(Rt(2, 1).to_string() == "[u^0 v^0](q - q^-1)");
}

TEST_CASE("Yang-Baxter, permutation points, similarity") {
  require_all(check_ybe());
  require_all(check_permutation_points());
  require_all(check_similarity());
}

TEST_CASE("a perturbed R-matrix violates Yang-Baxter") {
  const Exp2 u{2, 0}, v{0, 2}, uv{2, -2};
  auto bad = [](Exp2 x) {
    ScalarMat m = R_sym(x);
    m(1, 2) = sconst(RationalQ(1)); // off-diagonal entry no longer q - q^-1
    return m;
  };
  const ScalarMat R12 = embed3(bad(uv), 0, 1), R13 = embed3(bad(u), 0, 2), R23 = embed3(bad(v), 1, 2);
  CHECK_FALSE((R12 * R13 * R23 - R23 * R13 * R12).is_zero());
}

TEST_CASE("embedding into three tensor factors") {
  // R13 = P23 R12 P23
  const ScalarMat R = R_sym({2, 0});
  const ScalarMat P23 = embed3(permutation(), 1, 2);
  CHECK(embed3(R, 0, 2) == P23 * embed3(R, 0, 1) * P23);
  CHECK(embed3(identity_mat(4), 0, 2) == identity_mat(8));
}

TEST_CASE("series floors record dropped terms") {
  ScalarSeries a = ScalarSeries::monomial({-2, 0}, RationalQ(1), -2);
  ScalarSeries b = smono({0, -2}, RationalQ(3));
  auto p = a * b;
  CHECK(p.is_zero());
  CHECK(p.discarded());
  CHECK_FALSE((a * sconst(2)).discarded());
  CHECK(smono({2, 0}, RationalQ(1)).rescaled(1, 0) == smono({2, 0}, RationalQ::q()));
  CHECK_THROWS_AS(smono({1, 0}).rescaled(1, 0), std::invalid_argument);
}
