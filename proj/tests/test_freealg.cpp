#include "uqalt/ncpoly.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace uqalt;

namespace {

const AlphabetPtr A = Alphabet::y01();
NCPoly y0() { return NCPoly::letter(A, 0); }
NCPoly y1() { return NCPoly::letter(A, 1); }
RationalQ q(int e = 1) { return RationalQ::q_pow(e); }

NCPoly random_poly(std::mt19937_64 &rng, int max_len) {
  std::uniform_int_distribution<int> n_terms(1, 4), len(0, max_len), bit(0, 1), ex(-2, 2), co(-3, 3);
  NCPoly p(A);
  int n = n_terms(rng);
  for (int i = 0; i < n; ++i) {
    Word w;
    int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(static_cast<std::uint8_t>(bit(rng)));
    p.add_term(w, RationalQ(LaurentQ::monomial(co(rng), ex(rng))));
  }
  return p;
}

} // namespace

TEST_CASE("multiplication") {
  CHECK((y0() * y1()).to_string() == "1 * y0.y1");
  CHECK((y0() + y1()) * NCPoly::one(A) == y0() + y1());
  NCPoly z = q() * (y1() * y0()) - q(-1) * (y0() * y1());
  CHECK(z.to_string() == "-q^-1 * y0.y1 + q * y1.y0");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    NCPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("alphabet mismatch is reported") {
  auto other = std::make_shared<const Alphabet>(std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(y0() * NCPoly::letter(other, 0), std::invalid_argument);
  CHECK_THROWS_AS(y0() + NCPoly::letter(other, 1), std::invalid_argument);
}

TEST_CASE("q-commutator") {
  CHECK(qcomm(y0(), y1()) == q() * (y0() * y1()) - q(-1) * (y1() * y0()));
  NCPoly X = y0() + q(2) * y1();
  CHECK(qcomm(X, X) == qdiff() * (X * X));
  CHECK(qcomm(NCPoly::one(A), y1()) == qdiff() * y1());
  // swapping arguments and inverting q negates
  std::mt19937_64 rng(2);
  auto inv = [](const RationalQ &c) { return c.inverted_q(); };
  for (int i = 0; i < 20; ++i) {
    NCPoly a = random_poly(rng, 2), b = random_poly(rng, 2);
    CHECK(qcomm(b.map_coeffs(inv), a.map_coeffs(inv)).map_coeffs(inv) == -qcomm(a, b));
  }
}

TEST_CASE("Serre relator") {
  NCPoly r = serre_relator(y0(), y1());
  NCPoly expect(A);
  expect.add_term({0, 0, 0, 1}, 1);
  expect.add_term({0, 0, 1, 0}, -qint(3));
  expect.add_term({0, 1, 0, 0}, qint(3));
  expect.add_term({1, 0, 0, 0}, -1);
  CHECK(r == expect);
  CHECK(serre_relator(y1(), y0()) == sigma_words(r));
  NCPoly X = y0() - q() * y1();
  CHECK(serre_relator(X, X).is_zero());
}

TEST_CASE("bidegree is additive") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    NCPoly a = NCPoly::word(A, {0, 1, 1}), b = NCPoly::word(A, {1, 0});
    auto da = a.homogeneous_degree(), db = b.homogeneous_degree(), dab = (a * b).homogeneous_degree();
    CHECK(dab[0] == da[0] + db[0]);
    CHECK(dab[1] == da[1] + db[1]);
  }
  CHECK_FALSE((y0() + y0() * y1()).is_homogeneous());
}

TEST_CASE("json dump") {
  auto j = (q(-1) * y0() * y1()).to_json();
  REQUIRE(j.size() == 1);
  CHECK(j[0]["coeff"] == "q^-1");
  CHECK(j[0]["word"] == nlohmann::json({"y0", "y1"}));
}
