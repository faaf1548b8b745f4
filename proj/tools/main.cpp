// multisecant: command-line front end.  JSON goes to stdout (or --out), a
// short human summary to stderr.
//
// Exit codes: 0 ok, 1 corpus expectation failed, 2 bad input, 3 Gröbner
// budget exhausted, 4 internal invariant violated.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "multisecant/io.hpp"

using namespace msec;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBadInput = 2, kBudget = 3, kInvariant = 4 };

struct RunConfig {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  int reps = 3;
  std::string out;

  std::vector<std::uint64_t> seeds() const {
    std::vector<std::uint64_t> s;
    for (int i = 0; i < reps; ++i) s.push_back(seed + static_cast<std::uint64_t>(i));
    return s;
  }
};

class Stopwatch {
public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json envelope(const std::string& command, const RunConfig& cfg) {
  Json j;
  j["command"] = command;
  j["prime"] = cfg.prime;
  j["seed"] = cfg.seed;
  j["reps"] = cfg.reps;
  j["budget"] = default_pair_budget();
  return j;
}

void emit(Json doc, const RunConfig& cfg, double seconds) {
  doc["timing"] = {{"seconds", seconds}};
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ParseError("cannot write " + cfg.out);
  f << text;
}

std::string show(int d) { return d < 0 ? "empty" : std::to_string(d); }

int cmd_fano(const std::string& file, const RunConfig& cfg) {
  Stopwatch sw;
  auto doc = read_variety_file(file, cfg.prime);
  auto report = fano_dimension(doc.variety, cfg.seeds(), doc.lines);
  Json j = envelope("fano", cfg);
  j["input"] = file;
  j["result"] = to_json(report);
  std::cerr << "fano dimension: " << show(report.dimension) << (report.seeds_agree ? "" : " (charts disagree)") << "\n";
  emit(std::move(j), cfg, sw.seconds());
  return kOk;
}

int cmd_secancy(const std::string& file, int k, bool order, const RunConfig& cfg) {
  Stopwatch sw;
  auto doc = read_variety_file(file, cfg.prime);
  auto report = sigma_k_dimension(doc.variety, k, {cfg.seeds(), doc.lines, false});
  if (order) report.order = congruence_order(doc.variety, k, cfg.seeds());
  Json j = envelope("secancy", cfg);
  j["input"] = file;
  j["result"] = to_json(report);
  std::cerr << "sigma_" << k << " = " << show(report.sigma) << ", true " << k
            << "-secant family: " << show(report.sigma_true);
  if (report.order) std::cerr << ", q_" << k << " = " << (report.order->defined ? std::to_string(report.order->q) : "undefined");
  std::cerr << "\n";
  emit(std::move(j), cfg, sw.seconds());
  return kOk;
}

int cmd_focal(const std::string& file, const std::string& line_text, const RunConfig& cfg) {
  Stopwatch sw;
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file);
  Json input;
  try {
    input = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(file + ": " + e.what());
  }
  Json j = envelope("focal", cfg);
  j["input"] = file;
  if (input.contains("char_matrix")) {
    const std::uint32_t p = input.contains("field") ? parse_field_tag(input["field"].get<std::string>()).prime : cfg.prime;
    CharMatrix M = read_char_matrix(input, p ? p : cfg.prime);
    auto report = focal_points(M);
    j["result"] = {{"char_matrix", to_json(M)}, {"focal", to_json(report)}};
    std::cerr << report.note << (report.fixed_direction ? ", fixed tangent plane" : ", no fixed tangent plane") << "\n";
  } else {
    auto doc = read_variety(input, cfg.prime);
    std::optional<Line<Fp>> r;
    if (!line_text.empty())
      r = parse_line(line_text, doc.variety.ambient(), doc.variety.ring()->field.p);
    else if (!doc.lines.empty())
      r = doc.lines.front();
    else
      throw ParseError("focal analysis needs --line or a line listed in the file");
    auto analysis = analyze_line(doc.variety, *r, cfg.seed);
    j["result"] = to_json(analysis);
    std::cerr << analysis.focal.note;
    if (analysis.reducedness) std::cerr << ", Fano scheme " << (analysis.reducedness->reduced ? "reduced" : "not reduced") << " at the line";
    std::cerr << "\n";
  }
  emit(std::move(j), cfg, sw.seconds());
  return kOk;
}

int cmd_corpus_list(const RunConfig& cfg) {
  Json j = envelope("corpus list", cfg);
  j["result"] = Json::array();
  for (auto& name : corpus_names()) {
    auto e = build_entry(name, cfg.seed, cfg.prime);
    j["result"].push_back({{"name", name}, {"ambient", e.variety.ambient()}, {"row", e.expected.row}, {"stretch", e.expected.stretch}});
    std::cerr << name << "\n";
  }
  emit(std::move(j), cfg, 0);
  return kOk;
}

int cmd_corpus_check(const std::vector<std::string>& names, bool orders, const RunConfig& cfg) {
  Stopwatch sw;
  Json j = envelope(names.size() == 1 ? "corpus check" : "corpus check-all", cfg);
  j["result"] = Json::array();
  bool all_pass = true, complete = true;
  for (auto& name : names) {
    CheckReport r;
    try {
      r = check_entry(build_entry(name, cfg.seed, cfg.prime), {cfg.seeds(), orders});
    } catch (const BudgetExceeded& e) {
      r.name = name;
      r.complete = false;
      r.pass = false;
      r.error = e.what();
    }
    all_pass = all_pass && r.pass;
    complete = complete && r.complete;
    std::cerr << (r.complete ? (r.pass ? "PASS " : "FAIL ") : "INCOMPLETE ") << name << (r.error.empty() ? "" : ": " + r.error) << "\n";
    for (auto& item : r.items)
      if (!item.pass) std::cerr << "  " << item.what << ": expected " << item.expected << ", measured " << item.measured << "\n";
    j["result"].push_back(to_json(r));
  }
  emit(std::move(j), cfg, sw.seconds());
  if (!complete) return kBudget;
  return all_pass ? kOk : kMismatch;
}

int cmd_corpus_export(const std::string& name, const RunConfig& cfg) {
  auto e = build_entry(name, cfg.seed, cfg.prime);
  Json j = variety_json(e.variety, e.known_lines);
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty())
    std::cout << text;
  else
    std::ofstream(cfg.out) << text;
  return kOk;
}

int cmd_corpus_expectations(const RunConfig& cfg) {
  const std::string text = expectations_table().dump(2) + "\n";
  if (cfg.out.empty())
    std::cout << text;
  else
    std::ofstream(cfg.out) << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines, multisecant lines and focal loci of projective varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--prime", cfg.prime, "working prime for files over QQ")->envname("MSEC_PRIME");
  app.add_option("--seed", cfg.seed, "first random seed")->envname("MSEC_SEED");
  app.add_option("--budget", cfg.budget, "Gröbner pair budget per basis")->envname("MSEC_BUDGET");
  app.add_option("--reps", cfg.reps, "number of seeds (charts, points) per analysis")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write JSON here instead of stdout");

  std::string file, line, name;
  int k = 4;
  bool no_order = false;

  auto* fano = app.add_subcommand("fano", "dimension of the Fano scheme of lines");
  fano->add_option("file", file, "variety JSON")->required();

  auto* secancy = app.add_subcommand("secancy", "dimension of the family of k-secant lines and the order q_k");
  secancy->add_option("file", file, "variety JSON")->required();
  secancy->add_option("--k", k, "secancy")->check(CLI::Range(2, 20));
  secancy->add_flag("--no-order", no_order, "skip the congruence order");

  auto* focal = app.add_subcommand("focal", "focal points of the family of lines along a line");
  focal->add_option("file", file, "variety JSON or {\"char_matrix\": ...}")->required();
  focal->add_option("--line", line, "\"x2=x3=x4=0\" or \"[1:0:0:0:0],[0:1:0:0:0]\"");

  auto* corpus = app.add_subcommand("corpus", "built-in test varieties");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto* list = corpus->add_subcommand("list", "names of the entries");
  auto* check = corpus->add_subcommand("check", "check one entry against its expectations");
  check->add_option("name", name)->required();
  check->add_flag("--no-order", no_order, "skip congruence orders");
  auto* check_all = corpus->add_subcommand("check-all", "check every entry");
  check_all->add_flag("--no-order", no_order, "skip congruence orders");
  auto* exp = corpus->add_subcommand("export", "write an entry as a variety file");
  exp->add_option("name", name)->required();
  auto* table = corpus->add_subcommand("expectations", "the expectations table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (!is_prime(cfg.prime) || cfg.prime > 0x7fffffffu) throw ParseError("--prime must be a prime below 2^31");
    if (cfg.budget) set_default_pair_budget(cfg.budget);
    if (*fano) return cmd_fano(file, cfg);
    if (*secancy) return cmd_secancy(file, k, !no_order, cfg);
    if (*focal) return cmd_focal(file, line, cfg);
    if (*list) return cmd_corpus_list(cfg);
    if (*check) return cmd_corpus_check({name}, !no_order, cfg);
    if (*check_all) return cmd_corpus_check(corpus_names(), !no_order, cfg);
    if (*exp) return cmd_corpus_export(name, cfg);
    if (*table) return cmd_corpus_expectations(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
