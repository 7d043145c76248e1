// Command-line front end: group validation, equation solving, DFA export,
// dovetailing, and pumping-lemma refutation reports.
//
// Exit codes: 0 positive answer, 1 negative answer, 2 budget/limit
// exhausted, 3 input or format error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "geq/brute.hpp"
#include "geq/cfl.hpp"
#include "geq/dfa.hpp"
#include "geq/error.hpp"
#include "geq/group.hpp"
#include "geq/polynomial.hpp"
#include "geq/re_solver.hpp"

namespace {

enum Exit : int { kPositive = 0, kNegative = 1, kExhausted = 2, kInputError = 3 };

std::string join_labels(const geq::Alphabet& alphabet, const geq::Word& w) {
  std::string out;
  for (geq::Letter a : w) {
    if (!out.empty()) out += ' ';
    out += alphabet.labels[a];
  }
  return out;
}

std::string compact_word(std::uint64_t a_count, std::uint64_t b_count) {
  return "a^" + std::to_string(a_count) + " b^" + std::to_string(b_count);
}

std::unique_ptr<geq::WordProblemOracle> make_oracle(const std::string& spec) {
  if (spec.starts_with("free:")) {
    const std::string rest = spec.substr(5);
    if (!rest.empty() && std::ranges::all_of(rest, [](char c) { return c >= '0' && c <= '9'; })) {
      return std::make_unique<geq::FreeGroupOracle>(geq::free_group_oracle(std::stoul(rest)));
    }
    std::vector<std::string> names;
    std::istringstream in(rest);
    std::string name;
    while (std::getline(in, name, ',')) names.push_back(name);
    return std::make_unique<geq::FreeGroupOracle>(std::move(names));
  }
  if (spec.starts_with("group:")) {
    return std::make_unique<geq::FiniteGroupOracle>(geq::load_group_file(spec.substr(6)));
  }
  throw geq::ParseError("unknown oracle '" + spec + "' (expected free:<rank> or group:<file>)");
}

struct EqOptions {
  std::string group_file;
  std::size_t arity = 1;
};

int cmd_validate(const std::string& file) {
  const auto g = geq::load_group_file(file);
  std::cout << "GROUP " << g.name() << "\nORDER " << g.order() << "\nGENERATORS";
  for (geq::Element a : g.generators()) std::cout << ' ' << g.label(a);
  std::cout << '\n';
  return kPositive;
}

int cmd_solve(const EqOptions& opt, const std::string& method, const std::string& equation) {
  const auto g = geq::load_group_file(opt.group_file);
  const auto p = geq::parse_polynomial(equation, g.alphabet(), opt.arity);
  std::optional<bool> dfa_member;
  std::optional<geq::SolutionReport> brute;
  if (method == "dfa" || method == "both") dfa_member = geq::membership(g, opt.arity, p);
  if (method == "brute" || method == "both") brute = geq::solve_brute(g, opt.arity, p);
  if (dfa_member && brute && *dfa_member != brute->found()) {
    std::cerr << "error: dfa and brute force disagree on '" << equation << "'\n";
    return kInputError;
  }
  const bool member = dfa_member ? *dfa_member : brute->found();
  std::cout << "MEMBER " << (member ? "yes" : "no") << '\n';
  if (brute && brute->found()) {
    std::cout << "WITNESS";
    for (std::size_t k = 0; k < brute->witness->size(); ++k) {
      std::cout << " x" << k + 1 << '=' << g.label((*brute->witness)[k]);
    }
    std::cout << '\n';
  }
  return member ? kPositive : kNegative;
}

int cmd_build_dfa(const EqOptions& opt, bool minimize, std::size_t limit, const std::string& format,
                  const std::string& output) {
  const auto fmt = geq::parse_export_format(format);
  const auto g = geq::load_group_file(opt.group_file);
  auto d = geq::build_reachable_dfa(g, opt.arity, limit);
  if (minimize) d = geq::minimize_dfa(d);
  std::cout << "STATES " << d.state_count() << "\nACCEPTING " << d.accepting_count() << '\n';
  const std::string text = geq::export_dfa(d, fmt);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw geq::ParseError("cannot write '" + output + "'");
    out << text;
    std::cout << "OUTPUT " << output << '\n';
  }
  return kPositive;
}

int cmd_enumerate(const EqOptions& opt, std::size_t max_len) {
  const auto g = geq::load_group_file(opt.group_file);
  for (const auto& w : geq::enumerate_language(g, opt.arity, max_len)) std::cout << w << '\n';
  return kPositive;
}

int cmd_dovetail(const std::string& oracle_spec, std::size_t arity, std::size_t max_steps,
                 std::size_t max_tuples, const std::string& equation) {
  const auto oracle = make_oracle(oracle_spec);
  const auto p = geq::parse_polynomial(equation, oracle->alphabet(), arity);
  const auto r = geq::dovetail_solve(*oracle, arity, p, {max_steps, max_tuples});
  if (!r.solved()) {
    std::cout << "EXHAUSTED max_steps=" << r.steps << '\n';
    return kExhausted;
  }
  std::cout << "SOLVED m=" << r.steps << "\nWITNESS";
  for (std::size_t k = 0; k < r.witness.size(); ++k) {
    std::cout << " x" << k + 1 << "=\"" << join_labels(oracle->alphabet(), r.witness[k]) << '"';
  }
  std::cout << '\n';
  return kPositive;
}

int cmd_pump(const std::string& set, std::size_t p, const std::string& word, bool auto_witness, unsigned t_max,
             bool allow_t0, bool quiet) {
  const auto q = geq::RationalSet::parse(set);
  if (auto_witness == !word.empty()) throw geq::ParseError("give exactly one of --word or --auto-witness");
  std::cout << "SET " << q.describe() << '\n';
  std::string s = word;
  if (auto_witness) {
    const auto aw = geq::auto_witness(q, p);
    std::cout << "WITNESS M=" << aw.point.value.num << " N=" << aw.point.value.den
              << " epsilon=" << (aw.point.epsilon ? aw.point.epsilon->str() : "inf") << " n=" << aw.witness.multiplier
              << " word=" << compact_word(aw.witness.a_count, aw.witness.b_count) << '\n';
    s = aw.witness.word();
  }
  const auto report = geq::refute_pumping(q, p, s, t_max, allow_t0 ? 0 : 1);
  if (quiet) {
    std::cout << "DECOMPOSITIONS " << report.decompositions.size() << '\n'
              << (report.refuted ? "REFUTED p=" + std::to_string(p) : std::string("NOT-REFUTED")) << '\n';
  } else {
    std::cout << geq::format_report(report);
  }
  return report.refuted ? kPositive : kNegative;
}

int cmd_demo_z(std::uint64_t max_m, std::uint64_t max_n) {
  const auto pairs = geq::z_counterexample_language(max_m, max_n);
  for (const auto& [m, n] : pairs) std::cout << "PAIR m=" << m << " n=" << n << '\n';
  std::size_t mismatches = 0;
  const auto bound = static_cast<std::int64_t>(max_m);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const bool listed = std::ranges::find(pairs, std::pair{m, n}) != pairs.end();
      if (listed != geq::z_solvable_by_search(m, n, bound)) ++mismatches;
    }
  }
  std::cout << "PAIRS " << pairs.size() << "\nMISMATCHES " << mismatches << '\n';
  return mismatches == 0 ? kPositive : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equations over finitely generated groups: DFA solving, dovetailing, pumping refutation"};
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "Group file utilities");
  group->require_subcommand(1);
  std::string validate_file;
  auto* validate = group->add_subcommand("validate", "Load and validate a group file");
  validate->add_option("file", validate_file, "Group file")->required();

  auto* eq = app.add_subcommand("eq", "Equations over a finite group or oracle");
  eq->require_subcommand(1);
  EqOptions opt;
  auto add_group_opts = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group_file, "Group file")->required();
    sub->add_option("--arity", opt.arity, "Number of variables n")->required();
  };

  std::string method = "both";
  std::string equation;
  auto* solve = eq->add_subcommand("solve", "Decide solvability of one equation");
  add_group_opts(solve);
  solve->add_option("--method", method, "dfa, brute or both")->check(CLI::IsMember({"dfa", "brute", "both"}));
  solve->add_option("equation", equation, "Equation tokens")->required();

  bool minimize = false;
  std::size_t limit = geq::kDefaultStateLimit;
  std::string format = "dot";
  std::string output;
  auto* build = eq->add_subcommand("build-dfa", "Build the reachable automaton for Eq_n");
  add_group_opts(build);
  build->add_flag("--minimize", minimize, "Minimize before export");
  build->add_option("--limit", limit, "State limit")->check(CLI::PositiveNumber);
  build->add_option("--format", format, "dot or table");
  build->add_option("-o,--output", output, "Write the export here instead of stdout");

  std::size_t max_len = 0;
  auto* enumerate = eq->add_subcommand("enumerate", "List solvable equations up to a length");
  add_group_opts(enumerate);
  enumerate->add_option("--maxlen", max_len, "Maximum equation length")->required();

  std::string oracle_spec;
  std::size_t dovetail_arity = 1;
  std::size_t max_steps = 8;
  std::size_t max_tuples = geq::DovetailOptions{}.max_tuples_per_step;
  auto* dovetail = eq->add_subcommand("dovetail", "Semi-decide solvability with a word-problem oracle");
  dovetail->add_option("--oracle", oracle_spec, "free:<rank>, free:<name,...> or group:<file>")->required();
  dovetail->add_option("--arity", dovetail_arity, "Number of variables n")->required();
  dovetail->add_option("--max-steps", max_steps, "Largest step m")->check(CLI::PositiveNumber);
  dovetail->add_option("--max-tuples", max_tuples, "Cap on word tuples per step")->check(CLI::PositiveNumber);
  dovetail->add_option("equation", equation, "Equation tokens")->required();

  auto* cfl = app.add_subcommand("cfl", "Context-free sets of rationals");
  cfl->require_subcommand(1);
  std::string set;
  std::size_t p = 1;
  std::string word;
  bool auto_wit = false;
  unsigned t_max = geq::kDefaultTMax;
  bool allow_t0 = false;
  bool quiet = false;
  auto* pump = cfl->add_subcommand("pump", "Exhaustive pumping-lemma refutation");
  pump->add_option("--set", set, "integers, divisor, all, or list:<m/n,...>")->required();
  pump->add_option("--p", p, "Pumping length")->required()->check(CLI::PositiveNumber);
  pump->add_option("--word", word, "Word over {a,b}");
  pump->add_flag("--auto-witness", auto_wit, "Build the witness from an isolated point");
  pump->add_option("--tmax", t_max, "Largest pumping exponent tried");
  pump->add_flag("--allow-t0", allow_t0, "Also try the deletion exponent t = 0");
  pump->add_flag("--quiet", quiet, "Print only the verdict");

  std::uint64_t max_m = 0;
  std::uint64_t max_n = 0;
  auto* demo = cfl->add_subcommand("demo-z", "Divisor language of the Z instantiation with cross-check");
  demo->add_option("--max-m", max_m, "Bound on m")->required()->check(CLI::PositiveNumber);
  demo->add_option("--max-n", max_n, "Bound on n")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) return cmd_validate(validate_file);
    if (*solve) return cmd_solve(opt, method, equation);
    if (*build) return cmd_build_dfa(opt, minimize, limit, format, output);
    if (*enumerate) return cmd_enumerate(opt, max_len);
    if (*dovetail) return cmd_dovetail(oracle_spec, dovetail_arity, max_steps, max_tuples, equation);
    if (*pump) return cmd_pump(set, p, word, auto_wit, t_max, allow_t0, quiet);
    if (*demo) return cmd_demo_z(max_m, max_n);
  } catch (const geq::LimitExceeded& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExhausted;
  } catch (const geq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
