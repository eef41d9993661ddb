// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include "uqalt/report.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace uqalt;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;
};

void require(Outcome &o, const CheckList &l) {
  for (const auto &r : l)
    if (!r.pass || r.skipped) {
      o.ok = false;
      if (o.why.empty()) o.why = r.check + " " + r.status() + " " + r.params.dump() + " " + r.detail;
    }
}

void require(Outcome &o, bool ok, const std::string &why) {
  if (!ok && o.ok) {
    o.ok = false;
    o.why = why;
  }
}

int failures = 0;

void criterion(int id, const char *title, double limit_s, const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && dt >= limit_s) o = {false, "time limit exceeded"};
  if (!o.ok) ++failures;
  std::printf("criterion %2d %-4s %8.3fs (limit %gs)  %s%s%s\n", id, o.ok ? "PASS" : "FAIL", dt, limit_s, title,
              o.ok ? "" : ": ", o.why.c_str());
  std::fflush(stdout);
}

NCPoly words(std::initializer_list<std::pair<RationalQ, std::vector<int>>> terms) {
  NCPoly p(Alphabet::y01(), RationalQ(0));
  for (const auto &[c, w] : terms) {
    Word v;
    for (int l : w) v.push_back(static_cast<std::uint8_t>(l));
    p = p + NCPoly::word(Alphabet::y01(), v, c);
  }
  return p;
}

} // namespace

int main() {
  const std::uint64_t seed = 2024;

  criterion(1, "Yang-Baxter for both R-matrices", 1.0, [] {
    Outcome o;
    require(o, check_ybe());
    return o;
  });

  criterion(2, "similarity identities", 1.0, [] {
    Outcome o;
    require(o, check_similarity());
    return o;
  });

  criterion(3, "q-Serre dimensions equal PBW counts, a+b <= 8", 120.0, [] {
    Outcome o;
    const GradedQuotient Q(8);
    require(o, check_pbw_dimensions(Q, 8));
    return o;
  });

  criterion(4, "z_1, y_-1 byte-exact, z~_1 = sigma(z_1)", 1.0, [] {
    Outcome o;
    const GradedQuotient Q(3);
    const GeneratorTable T = build_generators(Q, 1);
    const RationalQ q = RationalQ::q();
    require(o, T.gens.zz(1).to_string() == "-q^-1 * y0.y1 + q * y1.y0", "z_1 = " + T.gens.zz(1).to_string());
    const QElem z1(&Q, words({{q, {1, 0}}, {-q.inverse(), {0, 1}}}));
    require(o, T.gens.zz(1).to_string() == z1.to_string(), "z_1 differs from its closed form");
    const RationalQ r = rho_bar().inverse();
    const QElem ym1(&Q, words({{r * (RationalQ::q_pow(2) + RationalQ::q_pow(-2)), {0, 1, 0}},
                               {-r, {0, 0, 1}},
                               {-r, {1, 0, 0}}}));
    require(o, T.gens.y_minus(1).to_string() == ym1.to_string(), "y_-1 = " + T.gens.y_minus(1).to_string());
    require(o, T.gens.zzt(1) == sigma(T.gens.zz(1)), "z~_1 = " + T.gens.zzt(1).to_string());
    return o;
  });

  criterion(5, "def1-def11 for k+l <= 2 and condeq for n <= 2, depth 3", 600.0, [] {
    Outcome o;
    // Commutators of z_3 with z_3 reach total degree 8.
    const GradedQuotient Q(8);
    const GeneratorTable T = build_generators(Q, 3);
    const CheckList l = check_relations(T, 2);
    require(o, l.size() == 12, "expected 12 relation rows");
    require(o, l);
    return o;
  });

  criterion(6, "Freidel-Maillet through order 8, quantum determinant through order 3", 900.0, [] {
    Outcome o;
    const GradedQuotient Q(9);
    const GeneratorTable T = build_generators(Q, 4);
    require(o, check_fm(T.gens, 8));
    require(o, check_qdet(T.gens, 3));
    require(o, check_qdet_reduced(T.gens, 3));
    return o;
  });

  criterion(7, "Drinfeld relations in window 6, alt k,l <= 3, theta on 50 samples, DJ images", 600.0, [seed] {
    Outcome o;
    const DrinfeldEngine eng(6);
    require(o, check_drinfeld_relations(eng));
    require(o, check_alternating_subalgebra(eng, 3));
    require(o, check_theta(eng, 50, seed));
    require(o, check_iso_dj(eng));
    return o;
  });

  criterion(8, "nu-images, central vanishing through order 3, negative control", 900.0, [] {
    Outcome o;
    const DrinfeldEngine eng(6);
    require(o, check_nu(eng, 3));
    return o;
  });

  criterion(9, "coaction images, Serre relators, counit and coassociativity", 600.0, [] {
    Outcome o;
    const DrinfeldEngine eng(6);
    const GradedQuotient Q(7);
    const GeneratorTable T = build_generators(Q, 3);
    require(o, check_coaction(eng, T, 3));
    return o;
  });

  criterion(10, "central extension through order 2, sigma and S invariance of C_1, C_2", 1200.0, [] {
    Outcome o;
    const DrinfeldEngine eng(6);
    const CheckList l = check_mu(eng, 2);
    bool sigma = false, s = false;
    for (const auto &r : l) {
      sigma = sigma || r.check == "mu_center_sigma_invariant";
      s = s || r.check == "mu_center_s_invariant";
    }
    require(o, sigma && s, "invariance rows missing");
    require(o, l);
    return o;
  });

  std::printf("acceptance: %d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
