#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "qproof/error.hpp"
#include "qproof/mres.hpp"
#include "qproof/qdimacs.hpp"
#include "qproof/qrat.hpp"
#include "qproof/semantics.hpp"
#include "qproof/squaredeq.hpp"
#include "qproof/translate.hpp"

namespace qproof::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse error annotated with the file it came from.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned n = 0;
  std::string formula;
  std::string proof = "-";
  std::string mres;
  std::string output;
  std::string at = "prop";
  std::string univ_rule = "ur";
  bool qrat_adds = false;
  std::size_t max_vars = 24;
  bool verbose = false;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

std::string display_name(const std::string& path) { return path.empty() || path == "-" ? "<stdin>" : path; }

template <typename Parse>
auto parse_file(const std::string& path, std::istream& in, Parse parse) {
  const std::string text = read_text(path, in);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(display_name(path) + ":" + std::to_string(e.line()) +
                     (e.column() ? ":" + std::to_string(e.column()) : std::string()) + ": " + e.detail());
  }
}

QbfFormula load_formula(const std::string& path, std::istream& in) {
  return parse_file(path, in, [](const std::string& t) { return parse_qdimacs(t); });
}

// Runs `write` against the -o file if given, else against `out`.
template <typename Write>
void emit(const Options& opt, std::ostream& out, Write write) {
  if (opt.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + opt.output);
  write(file);
}

CheckerConfig checker_config(const Options& opt) {
  CheckerConfig cfg;
  cfg.at_mode = opt.at == "univ" ? AtMode::UniversalAware : AtMode::Propositional;
  cfg.univ_rule = opt.univ_rule == "eur" ? UnivRule::Eur : UnivRule::Ur;
  cfg.allow_qrat_additions = opt.qrat_adds;
  return cfg;
}

// A relative reference is looked up next to the proof file first, then in
// the working directory.
std::string resolve_formula(const Options& opt, const std::optional<std::string>& ref, const std::string& proof_path) {
  if (!opt.formula.empty()) return opt.formula;
  if (!ref) throw UsageError("no formula given: pass --formula or reference one in the proof");
  const std::filesystem::path target(*ref);
  if (target.is_relative() && !proof_path.empty() && proof_path != "-") {
    const auto beside = std::filesystem::path(proof_path).parent_path() / target;
    if (std::filesystem::exists(beside)) return beside.string();
  }
  return *ref;
}

void print_verdict(std::ostream& out, Verdict v, std::optional<std::size_t> step, std::string_view reason,
                   std::size_t num_steps) {
  if (v == Verdict::VerifiedRefutation) {
    out << "VERIFIED\n";
  } else if (v == Verdict::VerifiedDerivation) {
    out << "REJECTED step=" << num_steps + 1 << " reason=no-empty-clause\n";
  } else {
    out << "REJECTED step=" << step.value_or(0) << " reason=" << reason << '\n';
  }
}

int exit_code(Verdict v) { return v == Verdict::VerifiedRefutation ? kOk : kRejected; }

void print_qrat_stats(std::ostream& out, const QratProof& p, const QratStats& s) {
  out << "format: qrat\n"
      << "steps: " << p.steps.size() << '\n'
      << "add-at: " << s.adds_at << '\n'
      << "add-qrat: " << s.adds_qrat << '\n'
      << "delete: " << s.deletes << '\n'
      << "ureduce-qratu: " << s.ureduce_qratu << '\n'
      << "ureduce-ur: " << s.ureduce_ur << '\n'
      << "ureduce-eur: " << s.ureduce_eur << '\n'
      << "max-clause-width: " << s.max_clause_width << '\n'
      << "at-checks: " << s.at_checks << '\n'
      << "qrat-checks: " << s.qrat_checks << '\n'
      << "propagation-calls: " << s.propagation.calls << '\n'
      << "propagation-assignments: " << s.propagation.assignments << '\n'
      << "propagation-clause-visits: " << s.propagation.clause_visits << '\n';
}

void print_mres_stats(std::ostream& out, const MResProof& p, const MResReport& r) {
  std::size_t width = 0;
  for (const auto& line : r.lines) width = std::max(width, line.clause.size());
  out << "format: mres\n"
      << "lines: " << p.lines.size() << '\n'
      << "axioms: " << r.stats.axioms << '\n'
      << "resolutions: " << r.stats.resolutions << '\n'
      << "selects: " << r.stats.selects << '\n'
      << "merges: " << r.stats.merges << '\n'
      << "forced-merges: " << r.stats.forced_merges << '\n'
      << "tautological-resolvents: " << r.stats.tautological_resolvents << '\n'
      << "max-map-size: " << r.stats.max_map_size << '\n'
      << "max-clause-width: " << width << '\n';
}

int cmd_gen_eq2(const Options& opt, Io io) {
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  const auto inst = generate_eq2(opt.n);
  emit(opt, io.out, [&](std::ostream& os) { write_qdimacs(os, inst.formula); });
  return kOk;
}

int cmd_refute_eq2(const Options& opt, Io io) {
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  const auto proof = emit_eq2_refutation(opt.n);
  emit(opt, io.out, [&](std::ostream& os) { write_qrat(os, proof); });
  return kOk;
}

int cmd_check_qrat(const Options& opt, Io io) {
  const auto proof = parse_file(opt.proof, io.in, [](const std::string& t) { return parse_qrat(t); });
  const auto formula = load_formula(resolve_formula(opt, proof.formula_ref, opt.proof), io.in);
  const auto report = check_proof(formula, proof, checker_config(opt));
  print_verdict(io.out, report.verdict, report.failed_step, report.reason ? to_code(*report.reason) : "",
                proof.steps.size());
  if (report.verdict == Verdict::Rejected) io.err << "step " << *report.failed_step << ": " << report.message << '\n';
  if (opt.verbose) print_qrat_stats(io.err, proof, report.stats);
  return exit_code(report.verdict);
}

int cmd_check_mres(const Options& opt, Io io) {
  const auto proof = parse_file(opt.proof, io.in, [](const std::string& t) { return parse_mres(t); });
  const auto formula = load_formula(resolve_formula(opt, proof.formula_ref, opt.proof), io.in);
  const auto report = check_proof(formula, proof);
  print_verdict(io.out, report.verdict, report.failed_step, report.reason ? to_code(*report.reason) : "",
                proof.lines.size());
  for (const auto& w : report.warnings) io.err << "warning: " << w << '\n';
  if (report.verdict == Verdict::Rejected) io.err << "line " << *report.failed_step << ": " << report.message << '\n';
  if (opt.verbose) print_mres_stats(io.err, proof, report);
  return exit_code(report.verdict);
}

int cmd_translate(const Options& opt, Io io) {
  const auto proof = parse_file(opt.mres, io.in, [](const std::string& t) { return parse_mres(t); });
  const std::string formula_path = resolve_formula(opt, proof.formula_ref, opt.mres);
  const auto formula = load_formula(formula_path, io.in);
  const auto report = check_proof(formula, proof);
  if (report.verdict != Verdict::VerifiedRefutation) {
    print_verdict(io.err, report.verdict, report.failed_step, report.reason ? to_code(*report.reason) : "",
                  proof.lines.size());
    io.err << "translate: input is not a verified MRes refutation\n";
    return kRejected;
  }
  auto qrat = translate(formula, proof);
  if (formula_path != "-") qrat.formula_ref = formula_path;
  emit(opt, io.out, [&](std::ostream& os) { write_qrat(os, qrat); });
  return kOk;
}

int cmd_eval(const Options& opt, Io io) {
  const auto formula = load_formula(opt.formula.empty() ? "-" : opt.formula, io.in);
  const bool value = brute_force_truth(formula, OracleOptions{opt.max_vars});
  io.out << (value ? "TRUE" : "FALSE") << '\n';
  return kOk;
}

bool looks_like_mres(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream words(line);
    std::string first, second;
    if (!(words >> first) || first[0] == 'c') continue;
    return first == "p" && (words >> second) && second == "mres";
  }
  return false;
}

int cmd_stats(const Options& opt, Io io) {
  const std::string text = read_text(opt.proof, io.in);
  std::istringstream replay(text);
  if (looks_like_mres(text)) {
    const auto proof = parse_file("-", replay, [](const std::string& t) { return parse_mres(t); });
    const auto formula = load_formula(resolve_formula(opt, proof.formula_ref, opt.proof), io.in);
    const auto report = check_proof(formula, proof);
    print_mres_stats(io.out, proof, report);
    print_verdict(io.out, report.verdict, report.failed_step, report.reason ? to_code(*report.reason) : "",
                  proof.lines.size());
    return exit_code(report.verdict);
  }
  const auto proof = parse_file("-", replay, [](const std::string& t) { return parse_qrat(t); });
  const auto formula = load_formula(resolve_formula(opt, proof.formula_ref, opt.proof), io.in);
  const auto report = check_proof(formula, proof, checker_config(opt));
  print_qrat_stats(io.out, proof, report.stats);
  print_verdict(io.out, report.verdict, report.failed_step, report.reason ? to_code(*report.reason) : "",
                proof.steps.size());
  return exit_code(report.verdict);
}

void add_checker_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--at", opt.at, "AT mode")->check(CLI::IsMember({"prop", "univ"}));
  cmd->add_option("--univ-rule", opt.univ_rule, "universal reduction rule")->check(CLI::IsMember({"ur", "eur"}));
  cmd->add_flag("--qrat-adds", opt.qrat_adds, "allow QRAT additions besides AT");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"QBF proof toolkit: QRAT and MRes checking, EQ2 generation, MRes-to-QRAT translation", "qproof"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a formula family");
  gen->require_subcommand(1);
  auto* gen_eq2 = gen->add_subcommand("eq2", "write EQ2(n) as QDIMACS");
  gen_eq2->add_option("--n", opt.n, "size parameter")->required();
  gen_eq2->add_option("-o,--output", opt.output, "output file");

  auto* refute = app.add_subcommand("refute", "emit a known refutation");
  refute->require_subcommand(1);
  auto* refute_eq2 = refute->add_subcommand("eq2", "write the QRAT refutation of EQ2(n)");
  refute_eq2->add_option("--n", opt.n, "size parameter")->required();
  refute_eq2->add_option("-o,--output", opt.output, "output file");

  auto* check = app.add_subcommand("check", "check a proof");
  check->require_subcommand(1);
  auto* check_qrat = check->add_subcommand("qrat", "check a QRAT proof");
  check_qrat->add_option("--formula", opt.formula, "QDIMACS file");
  check_qrat->add_option("proof", opt.proof, "proof file (default: stdin)");
  add_checker_flags(check_qrat, opt);
  check_qrat->add_flag("-v,--verbose", opt.verbose, "print statistics");
  auto* check_mres = check->add_subcommand("mres", "check an MRes proof");
  check_mres->add_option("--formula", opt.formula, "QDIMACS file");
  check_mres->add_option("proof", opt.proof, "proof file (default: stdin)");
  check_mres->add_flag("-v,--verbose", opt.verbose, "print statistics");

  auto* translate_cmd = app.add_subcommand("translate", "compile an MRes refutation into QRAT");
  translate_cmd->add_option("--formula", opt.formula, "QDIMACS file");
  translate_cmd->add_option("--mres", opt.mres, "MRes proof file")->required();
  translate_cmd->add_option("-o,--output", opt.output, "output file");

  auto* eval = app.add_subcommand("eval", "decide a small formula by brute force");
  eval->add_option("--formula", opt.formula, "QDIMACS file (default: stdin)");
  eval->add_option("--max-vars", opt.max_vars, "variable cap")->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "check a proof and print rule counts");
  stats->add_option("--formula", opt.formula, "QDIMACS file");
  stats->add_option("proof", opt.proof, "proof file (default: stdin)");
  add_checker_flags(stats, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qproof: " << e.what() << '\n';
    return kUsage;
  }

  Io io{in, out, err};
  try {
    if (gen_eq2->parsed()) return cmd_gen_eq2(opt, io);
    if (refute_eq2->parsed()) return cmd_refute_eq2(opt, io);
    if (check_qrat->parsed()) return cmd_check_qrat(opt, io);
    if (check_mres->parsed()) return cmd_check_mres(opt, io);
    if (translate_cmd->parsed()) return cmd_translate(opt, io);
    if (eval->parsed()) return cmd_eval(opt, io);
    if (stats->parsed()) return cmd_stats(opt, io);
  } catch (const InputError& e) {
    err << "qproof: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "qproof: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "qproof: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qproof::cli
