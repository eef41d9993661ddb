#include "uqalt/qserre.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

using namespace uqalt;

namespace {

const AlphabetPtr A = Alphabet::y01();
NCPoly y0() { return NCPoly::letter(A, 0); }
NCPoly y1() { return NCPoly::letter(A, 1); }

// Oracle: enumerate ordered monomials y_{-k} < z_{n+1} < y_{l+1} directly as
// nondecreasing sequences in a fixed listing of the symbols.
long long brute_pbw(int a, int b) {
  std::vector<std::pair<int, int>> sym;
  for (int k = 0; k <= a + b; ++k) sym.push_back({k + 1, k});
  for (int n = 0; n <= a + b; ++n) sym.push_back({n + 1, n + 1});
  for (int l = 0; l <= a + b; ++l) sym.push_back({l, l + 1});
  long long count = 0;
  auto rec = [&](auto &&self, std::size_t from, int ra, int rb) -> void {
    if (ra == 0 && rb == 0) {
      ++count;
      return;
    }
    for (std::size_t i = from; i < sym.size(); ++i)
      if (sym[i].first <= ra && sym[i].second <= rb) self(self, i, ra - sym[i].first, rb - sym[i].second);
  };
  rec(rec, 0, a, b);
  return count;
}

NCPoly random_word(std::mt19937_64 &rng, int len) {
  std::uniform_int_distribution<int> bit(0, 1);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<std::uint8_t>(bit(rng)));
  return NCPoly::word(A, w);
}

} // namespace

TEST_CASE("PBW counts") {
  CHECK(pbw_count(0, 0) == 1);
  CHECK(pbw_count(1, 0) == 1);
  CHECK(pbw_count(1, 1) == 2);
  CHECK(pbw_count(2, 1) == 3);
  CHECK(pbw_count(3, 1) == 3);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 8; ++b) CHECK(pbw_count(a, b) == brute_pbw(a, b));
}

TEST_CASE("small components") {
  GradedQuotient Q(8);
  CHECK(Q.component_dimension(1, 0) == 1);
  CHECK(Q.component_dimension(1, 1) == 2);
  CHECK(Q.component_dimension(3, 1) == 3);
  NCPoly w = y0() * y1();
  CHECK(Q.normal_form(w) == w);
}

TEST_CASE("normal form of the leading relator word") {
  GradedQuotient Q(4);
  NCPoly expect(A);
  expect.add_term({0, 0, 1, 0}, qint(3));
  expect.add_term({0, 1, 0, 0}, -qint(3));
  expect.add_term({1, 0, 0, 0}, 1);
  CHECK(Q.normal_form(NCPoly::word(A, {0, 0, 0, 1})) == expect);
  CHECK(Q.normal_form(serre_relator(y0(), y1())).is_zero());
  CHECK(Q.normal_form(serre_relator(y1(), y0())).is_zero());
}

TEST_CASE("dimensions match PBW counts", "[slow]") {
  GradedQuotient Q(7);
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; a + b <= 7; ++b) CHECK(Q.component_dimension(a, b) == pbw_count(a, b));
}

TEST_CASE("ideal membership, projection and symmetry") {
  GradedQuotient Q(8);
  std::mt19937_64 rng(5);
  const NCPoly rel[2] = {serre_relator(y0(), y1()), serre_relator(y1(), y0())};
  for (int i = 0; i < 20; ++i) {
    NCPoly u = random_word(rng, i % 3), v = random_word(rng, (i / 3) % 3);
    CHECK(Q.normal_form(u * rel[i % 2] * v).is_zero());
    NCPoly p = random_word(rng, 6) + RationalQ::q() * random_word(rng, 5);
    NCPoly nf = Q.normal_form(p);
    CHECK(Q.normal_form(nf) == nf);
    // sigma and reversal commute with the projection modulo the ideal
    CHECK(Q.normal_form(sigma_words(p)) == Q.normal_form(sigma_words(nf)));
    CHECK(Q.normal_form(reverse_words(p)) == Q.normal_form(reverse_words(nf)));
  }
}

TEST_CASE("truncation is an explicit error") {
  GradedQuotient Q(4);
  CHECK_THROWS_AS(Q.normal_form(NCPoly::word(A, {0, 0, 0, 1, 1})), TruncationError);
  try {
    Q.component_dimension(3, 2);
  } catch (const TruncationError &e) {
    CHECK(std::string(e.what()).find("(3,2)") != std::string::npos);
  }
}

TEST_CASE("concurrent component construction") {
  GradedQuotient Q(6);
  std::vector<std::thread> ts;
  std::vector<int> dims(8);
  for (int i = 0; i < 8; ++i) ts.emplace_back([&, i] { dims[i] = Q.component_dimension(3, 3); });
  for (auto &t : ts) t.join();
  for (int d : dims) CHECK(d == pbw_count(3, 3));
  CHECK(&Q.component({3, 3}) == &Q.component({3, 3}));
}
