#pragma once

// Suite runner and report rendering for the command-line driver.

#include "uqalt/coaction.hpp"
#include "uqalt/drinfeld_checks.hpp"
#include "uqalt/mu.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace uqalt {

inline constexpr const char *kReportVersion = "1.0";

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> n = {"serre", "alternating", "ybe",      "fm", "qdet",
                                             "drinfeld", "nu",        "coaction", "mu"};
  return n;
}

// Requested suites in canonical order, "all" expanded, duplicates dropped.
inline std::vector<std::string> canonical_suites(const std::vector<std::string> &req) {
  const bool all = std::find(req.begin(), req.end(), "all") != req.end();
  std::vector<std::string> out;
  for (const auto &n : suite_names())
    if (all || std::find(req.begin(), req.end(), n) != req.end()) out.push_back(n);
  return out;
}

struct RunConfig {
  std::vector<std::string> suites;
  int max_total_degree = 8;
  int max_index = 3;
  int order = 3;
  int window = 6;
  bool central_extension = false;
  std::uint64_t seed = 2024;
  bool timings = false;
  std::string format = "text";

  nlohmann::json to_json() const {
    return {{"suites", canonical_suites(suites)},
            {"max_total_degree", max_total_degree},
            {"max_index", max_index},
            {"order", order},
            {"window", window},
            {"central_extension", central_extension},
            {"seed", seed}};
  }
};

// Throws std::invalid_argument on a configuration that cannot run.
inline void validate(const RunConfig &c) {
  auto need = [](bool ok, const std::string &msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  need(c.max_total_degree >= 1, "max-total-degree must be at least 1");
  need(c.max_index >= 1, "max-index must be at least 1");
  need(c.order >= 1, "order must be at least 1");
  need(c.window >= 1, "window must be at least 1");
  need(c.format == "text" || c.format == "json", "format must be text or json");
  for (const auto &s : c.suites)
    need(s == "all" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end(),
         "unknown suite '" + s + "'");
}

struct SuiteRow {
  std::string suite;
  CheckResult result;
  double seconds = 0; // wall time of the group the row belongs to
};

// Runs one group of checks; an exceeded bound turns into a single skipped row.
class SuiteRunner {
public:
  SuiteRunner(std::string suite, std::vector<SuiteRow> &rows) : suite_(std::move(suite)), rows_(rows) {}

  void run(const std::string &group, nlohmann::json params, const std::function<CheckList()> &f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList l;
    try {
      l = f();
    } catch (const WindowError &e) {
      l = {skipped(group, params, e.what())};
    } catch (const TruncationError &e) {
      l = {skipped(group, params, e.what())};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto &r : l) rows_.push_back({suite_, std::move(r), dt});
  }

private:
  static CheckResult skipped(const std::string &group, nlohmann::json params, const std::string &why) {
    CheckResult r{group, std::move(params), false, why};
    r.skipped = true;
    return r;
  }
  std::string suite_;
  std::vector<SuiteRow> &rows_;
};

inline int generator_depth(const RunConfig &c) { return c.max_index; }

inline CheckList check_pbw_dimensions(const GradedQuotient &Q, int D) {
  CheckList out;
  std::vector<std::pair<int, int>> bidegrees;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) bidegrees.push_back({a, b});
  // Components are independent; build them concurrently.
  std::vector<std::future<int>> dims;
  for (auto [a, b] : bidegrees)
    dims.push_back(std::async(std::launch::async, [&Q, a = a, b = b] { return Q.component_dimension(a, b); }));
  int bad = 0;
  std::string first;
  for (std::size_t i = 0; i < bidegrees.size(); ++i) {
    const auto [a, b] = bidegrees[i];
    const int d = dims[i].get();
    const long long p = pbw_count(a, b);
    if (d != p) {
      if (first.empty())
        first = "(" + std::to_string(a) + "," + std::to_string(b) + "): quotient " + std::to_string(d) + ", PBW " +
                std::to_string(p);
      ++bad;
    }
  }
  record_bool(out, "pbw_dimensions", {{"max_total_degree", D}, {"components", bidegrees.size()}}, bad == 0, first);
  return out;
}

inline CheckList check_serre_relators(const GradedQuotient &Q) {
  CheckList out;
  const AlphabetPtr A = Alphabet::y01();
  const NCPoly y0 = NCPoly::letter(A, 0), y1 = NCPoly::letter(A, 1);
  record_zero(out, "serre_relators", {{"relator", "y0,y1"}}, Q.normal_form(serre_relator(y0, y1)));
  record_zero(out, "serre_relators", {{"relator", "y1,y0"}}, Q.normal_form(serre_relator(y1, y0)));
  return out;
}

inline CheckList check_generator_forms(const GeneratorTable &T) {
  CheckList out;
  const auto &g = T.gens;
  const AlphabetPtr A = Alphabet::y01();
  auto w = [&](std::initializer_list<int> letters) {
    Word v;
    for (int l : letters) v.push_back(static_cast<std::uint8_t>(l));
    return NCPoly::word(A, v);
  };
  const RationalQ q = RationalQ::q(), qi = RationalQ::q_pow(-1);
  const NCPoly z1 = q * w({1, 0}) - qi * w({0, 1});
  record_bool(out, "generator_z1", {{"depth", T.depth}}, g.zz(1).rep() == z1, "z1 = " + g.zz(1).to_string());
  const NCPoly ym1 =
      rho_bar().inverse() * ((RationalQ::q_pow(2) + RationalQ::q_pow(-2)) * w({0, 1, 0}) - w({0, 0, 1}) - w({1, 0, 0}));
  record_bool(out, "generator_y_minus1", {{"depth", T.depth}}, g.y_minus(1) == QElem(T.Q, ym1), "y_-1 = " + g.y_minus(1).to_string());
  record_bool(out, "generator_z1_tilde_sigma", {{"depth", T.depth}}, g.zzt(1) == sigma(g.zz(1)), "z~1 = " + g.zzt(1).to_string());
  bool sym = true;
  for (int k = 0; k < T.depth; ++k) sym = sym && sigma(g.y_minus(k)) == g.y_plus(k + 1);
  for (int j = 1; j <= T.depth; ++j) sym = sym && sigma(g.zz(j)) == g.zzt(j) && antiS(g.zz(j)) == g.zzt(j);
  record_bool(out, "generator_symmetries", {{"depth", T.depth}}, sym, "sigma or S does not act as a swap");
  return out;
}

inline CheckList check_relations(const GeneratorTable &T, int bound) {
  using drc::Sweep;
  CheckList out;
  const auto &g = T.gens;
  for (AltRelation r : kDefRelations) {
    Sweep sw(relation_name(r), {{"bound", bound}});
    for (int k = 0; k <= bound; ++k)
      for (int l = 0; k + l <= bound; ++l) {
        if (single_index(r) && l > 0) continue;
        for (const QElem &x : relation_residuals(r, k, l, g)) sw.expect_zero(x, drc::idx(k, l));
      }
    sw.finish(out);
  }
  Sweep sw("condeq", {{"bound", bound}});
  for (int n = 0; n <= bound; ++n)
    for (const QElem &x : relation_residuals(AltRelation::condeq, n, 0, g)) sw.expect_zero(x, "n=" + std::to_string(n));
  sw.finish(out);
  return out;
}

inline std::vector<SuiteRow> run_suites(const RunConfig &cfg) {
  validate(cfg);
  const std::vector<std::string> ordered = canonical_suites(cfg.suites);
  std::vector<SuiteRow> rows;
  const int K = generator_depth(cfg);
  const int N = cfg.order;
  const nlohmann::json gpar{{"max_index", K}, {"max_total_degree", cfg.max_total_degree}};
  for (const auto &name : ordered) {
    SuiteRunner run(name, rows);
    if (name == "serre") {
      GradedQuotient Q(cfg.max_total_degree);
      run.run("pbw_dimensions", gpar, [&] { return check_pbw_dimensions(Q, cfg.max_total_degree); });
      run.run("serre_relators", gpar, [&] { return check_serre_relators(Q); });
    } else if (name == "alternating") {
      // Relations up to k + l = K - 1 reach total degree 2K + 2.
      GradedQuotient Q(std::max(cfg.max_total_degree, 2 * K + 2));
      run.run("generators", gpar, [&] { return check_generator_forms(build_generators(Q, K)); });
      run.run("relations", gpar, [&] { return check_relations(build_generators(Q, K), K - 1); });
    } else if (name == "ybe") {
      run.run("ybe", {}, [] { return check_ybe(); });
    } else if (name == "fm") {
      run.run("r_matrix_points", {}, [] {
        CheckList l = check_permutation_points();
        append(l, check_similarity());
        return l;
      });
      GradedQuotient Q(std::max(cfg.max_total_degree, 2 * K + 1));
      run.run("freidel_maillet", gpar, [&] { return check_fm(build_generators(Q, K).gens, N); });
      if (cfg.central_extension) {
        DrinfeldEngine eng(cfg.window);
        run.run("mu_freidel_maillet", {{"window", cfg.window}}, [&] { return check_mu_fm(eng, N); });
      }
    } else if (name == "qdet") {
      GradedQuotient Q(std::max(cfg.max_total_degree, 2 * K + 1));
      run.run("quantum_determinant", gpar, [&] {
        const GeneratorTable T = build_generators(Q, K);
        CheckList l = check_qdet(T.gens, N);
        append(l, check_qdet_reduced(T.gens, N));
        return l;
      });
    } else if (name == "drinfeld") {
      DrinfeldEngine eng(cfg.window);
      const nlohmann::json wpar{{"window", cfg.window}};
      run.run("drinfeld_relations", wpar, [&] { return check_drinfeld_relations(eng); });
      run.run("alternating_subalgebra", wpar, [&] { return check_alternating_subalgebra(eng, K); });
      run.run("theta", wpar, [&] { return check_theta(eng, 50, cfg.seed); });
      run.run("confluence", wpar, [&] { return check_confluence(cfg.window, 50, cfg.seed); });
      run.run("iso_dj", wpar, [&] { return check_iso_dj(eng); });
    } else if (name == "nu") {
      DrinfeldEngine eng(cfg.window);
      run.run("nu", {{"window", cfg.window}, {"order", N}}, [&] { return check_nu(eng, N); });
      run.run("dressing", {{"window", cfg.window}, {"order", N}}, [&] { return check_lop(eng, N); });
    } else if (name == "coaction") {
      DrinfeldEngine eng(cfg.window);
      GradedQuotient Q(std::max({cfg.max_total_degree, 2 * N + 1, 4}));
      run.run("coaction", {{"window", cfg.window}, {"order", N}}, [&] {
        const GeneratorTable T = build_generators(Q, N);
        return check_coaction(eng, T, N);
      });
    } else if (name == "mu") {
      DrinfeldEngine eng(cfg.window);
      run.run("mu", {{"window", cfg.window}, {"order", N}}, [&] { return check_mu(eng, N); });
      if (cfg.central_extension)
        run.run("mu_freidel_maillet", {{"window", cfg.window}}, [&] { return check_mu_fm(eng, N); });
    }
  }
  return rows;
}

inline nlohmann::json report_json(const RunConfig &cfg, const std::vector<SuiteRow> &rows) {
  nlohmann::json res = nlohmann::json::array();
  for (const auto &r : rows) {
    nlohmann::json j = r.result.to_json();
    j["suite"] = r.suite;
    if (cfg.timings) j["group_wall_time_s"] = r.seconds;
    res.push_back(j);
  }
  return {{"version", kReportVersion}, {"config", cfg.to_json()}, {"results", res}};
}

// One line per check: suite, check, status, parameters, detail on failure.
inline std::string report_text(const nlohmann::json &report) {
  std::ostringstream os;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto &r : report.at("results")) {
    const std::string st = r.at("status").get<std::string>();
    (st == "pass" ? pass : st == "fail" ? fail : skipped)++;
    os << r.value("suite", std::string("-")) << "  " << r.at("check").get<std::string>() << "  " << st << "  "
       << r.value("params", nlohmann::json::object()).dump();
    if (r.contains("group_wall_time_s")) os << "  group " << r.at("group_wall_time_s").get<double>() << "s";
    if (r.contains("detail")) os << "\n    " << r.at("detail").get<std::string>();
    os << "\n";
  }
  os << "summary: " << pass << " pass, " << fail << " fail, " << skipped << " skipped-overflow\n";
  return os.str();
}

inline bool report_has_failure(const nlohmann::json &report) {
  for (const auto &r : report.at("results"))
    if (r.at("status") == "fail") return true;
  return false;
}

} // namespace uqalt
