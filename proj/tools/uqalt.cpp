// uqalt: verify the algebra identities, print generators, render saved reports.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 configuration error.

#include "uqalt/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace uqalt;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int to_int(const std::string &key, const std::string &v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception &) {
    throw ConfigError("config: " + key + " expects an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string &key, const std::string &v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: " + key + " expects true or false, got '" + v + "'");
}

// key = value lines; '#' starts a comment. Keys use the long flag names.
std::map<std::string, std::string> read_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

struct Flags {
  RunConfig cfg;
  std::string config_file, output, input;
  std::vector<std::string> suites;
  std::map<std::string, CLI::Option *> opts;
};

void add_run_options(CLI::App *app, Flags &f, bool generators_only) {
  f.opts["max-index"] = app->add_option("--max-index", f.cfg.max_index, "Generator depth K");
  f.opts["max-total-degree"] =
      app->add_option("--max-total-degree", f.cfg.max_total_degree, "Bound on the total degree of the quotient");
  f.opts["format"] = app->add_option("--format", f.cfg.format, "text or json");
  app->add_option("--output", f.output, "Write the result to a file instead of stdout");
  app->add_option("--config", f.config_file, "File of key = value defaults; flags win");
  if (generators_only) return;
  f.opts["order"] = app->add_option("--order", f.cfg.order, "Spectral order N");
  f.opts["window"] = app->add_option("--window", f.cfg.window, "Mode window of the Drinfeld engine");
  f.opts["seed"] = app->add_option("--seed", f.cfg.seed, "Seed for randomized samples");
  f.opts["central-extension"] =
      app->add_flag("--central-extension", f.cfg.central_extension, "Also run the central-extension variants");
  f.opts["timings"] = app->add_flag("--timings", f.cfg.timings, "Add wall times to the output");
}

// Config values apply only where the flag was not given.
void apply_config(Flags &f) {
  if (f.config_file.empty()) return;
  for (const auto &[k, v] : read_config(f.config_file)) {
    const auto it = f.opts.find(k);
    if (it == f.opts.end()) throw ConfigError("config: unknown key '" + k + "'");
    if (it->second->count() > 0) continue;
    RunConfig &c = f.cfg;
    if (k == "max-index") c.max_index = to_int(k, v);
    else if (k == "max-total-degree") c.max_total_degree = to_int(k, v);
    else if (k == "order") c.order = to_int(k, v);
    else if (k == "window") c.window = to_int(k, v);
    else if (k == "seed") c.seed = static_cast<std::uint64_t>(to_int(k, v));
    else if (k == "format") c.format = v;
    else if (k == "central-extension") c.central_extension = to_bool(k, v);
    else if (k == "timings") c.timings = to_bool(k, v);
  }
}

void emit(const std::string &text, const std::string &output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw ConfigError("cannot write " + output);
  out << text;
}

std::string render(const nlohmann::json &report, const std::string &format) {
  return format == "json" ? report.dump(2) + "\n" : report_text(report);
}

int cmd_verify(Flags &f) {
  apply_config(f);
  f.cfg.suites = f.suites;
  try {
    validate(f.cfg);
  } catch (const std::invalid_argument &e) {
    throw ConfigError(e.what());
  }
  const nlohmann::json report = report_json(f.cfg, run_suites(f.cfg));
  emit(render(report, f.cfg.format), f.output);
  return report_has_failure(report) ? 1 : 0;
}

int cmd_gens(Flags &f) {
  apply_config(f);
  const RunConfig &c = f.cfg;
  if (c.max_index < 0) throw ConfigError("max-index must be non-negative");
  if (c.format != "text" && c.format != "json") throw ConfigError("format must be text or json");
  const GradedQuotient Q(std::max(c.max_total_degree, 2 * c.max_index + 1));
  const GeneratorTable T = build_generators(Q, c.max_index);
  const auto &g = T.gens;
  std::vector<std::pair<std::string, const QElem *>> rows;
  for (int k = 0; k <= c.max_index; ++k) rows.push_back({"y_-" + std::to_string(k), &g.y_minus(k)});
  for (int j = 1; j <= c.max_index + 1; ++j) rows.push_back({"y_" + std::to_string(j), &g.y_plus(j)});
  for (int j = 1; j <= c.max_index; ++j) {
    rows.push_back({"z_" + std::to_string(j), &g.zz(j)});
    rows.push_back({"z~_" + std::to_string(j), &g.zzt(j)});
  }
  std::string text;
  if (c.format == "json") {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &[name, x] : rows)
      gens.push_back({{"name", name}, {"expr", x->to_string()}, {"terms", x->rep().to_json()}});
    text = nlohmann::json{{"version", kReportVersion}, {"max_index", c.max_index}, {"generators", gens}}.dump(2) + "\n";
  } else {
    for (const auto &[name, x] : rows) text += name + " = " + x->to_string() + "\n";
  }
  emit(text, f.output);
  return 0;
}

int cmd_report(Flags &f) {
  std::ifstream in(f.input);
  if (!in) throw ConfigError("cannot open " + f.input);
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(in);
    if (!report.contains("results") || !report.at("results").is_array()) throw ConfigError("no results array");
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(f.input + ": " + e.what());
  } catch (const ConfigError &e) {
    throw ConfigError(f.input + ": " + e.what());
  }
  if (f.cfg.format != "text" && f.cfg.format != "json") throw ConfigError("format must be text or json");
  emit(render(report, f.cfg.format), f.output);
  return report_has_failure(report) ? 1 : 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of the alternating presentation identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kReportVersion);
  Flags verify, gens, report;

  auto *v = app.add_subcommand("verify", "Run verification suites");
  std::string suite_help = "Suites: all";
  for (const auto &s : suite_names()) suite_help += ", " + s;
  v->add_option("suites", verify.suites, suite_help)->required();
  add_run_options(v, verify, false);

  auto *g = app.add_subcommand("gens", "Print the alternating generators in the q-Serre quotient");
  add_run_options(g, gens, true);

  auto *r = app.add_subcommand("report", "Render a saved JSON report");
  r->add_option("--input", report.input, "JSON report from verify --format json")->required();
  r->add_option("--format", report.cfg.format, "text or json");
  r->add_option("--output", report.output, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (v->parsed()) return cmd_verify(verify);
    if (g->parsed()) return cmd_gens(gens);
    return cmd_report(report);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
