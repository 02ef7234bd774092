#include "chromakernel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "chromakernel/campaign.hpp"
#include "chromakernel/chroma_paths.hpp"
#include "chromakernel/conjecture_search.hpp"
#include "chromakernel/error.hpp"
#include "chromakernel/generators.hpp"
#include "chromakernel/kernel.hpp"
#include "chromakernel/patterns.hpp"

namespace ck {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidParams, "cannot write " + path);
  f << text;
}

struct CheckArgs {
  std::string input;
  int k = 1;
  int cap = 24;
};

struct ClosureArgs {
  std::string input;
  int k = 1;
  std::string output;
};

struct CensusArgs {
  std::string input;
  std::string pattern;
  bool json = false;
};

struct VerifyArgs {
  std::string theorem;
  int trials = 100;
  std::vector<int> parts{1, 1, 1};
  int m = 2;
  double psym = 0.0;
  std::optional<int> k;
  std::uint64_t seed = 0;
  int workers = 1;
  int rejection_samples = 0;
  double coarsen = 0.0;
  std::string report;
  bool json = false;
};

struct SearchArgs {
  std::vector<int> parts;
  bool symmetric = true;
  int coarsenings = 0;
  std::string checkpoint;
  int workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t checkpoint_every = 1000;
  std::optional<std::uint64_t> limit;
  std::string report;
  bool json = false;
};

struct GenerateArgs {
  std::vector<int> parts;
  double psym = 0.0;
  double bias = 0.5;
  int m = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const ColoredDigraph d = load_digraph(a.input);
  const KernelResult r = find_k_colored_kernel(d, a.k, KernelSolverOptions{a.cap});
  out << r.describe() << '\n';
  return r.found() ? kExitOk : kExitDomain;
}

int cmd_closure(const ClosureArgs& a, std::ostream& out) {
  const ColoredDigraph d = load_digraph(a.input);
  write_text(serialize(as_colored(k_closure(d, a.k))), a.output, out);
  return kExitOk;
}

int cmd_census(const CensusArgs& a, std::ostream& out, std::ostream& err) {
  const auto kind = parse_pattern_kind(a.pattern);
  if (!kind) {
    err << "unknown pattern '" << a.pattern << "' (expected c3, c4, c5, c3c3 or c4c4)\n";
    return kExitUsage;
  }
  const ColoredDigraph d = load_digraph(a.input);
  const auto occurrences = enumerate_pattern(d, *kind);
  if (a.json) {
    Json j;
    j["pattern"] = to_string(*kind);
    j["count"] = occurrences.size();
    Json list = Json::array();
    for (const auto& o : occurrences) list.push_back(to_json(o));
    j["occurrences"] = std::move(list);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << to_string(*kind) << ": " << occurrences.size() << (occurrences.size() == 1 ? " occurrence" : " occurrences")
      << '\n';
  for (const auto& o : occurrences) {
    const auto colors = o.colors.to_vector();
    out << "  " << format_vertex_set(o.vertices) << " colors " << format_vertex_set(colors) << " ("
        << colors.size() << "-colored)\n";
  }
  return kExitOk;
}

int cmd_hypotheses(const std::string& input, std::ostream& out) {
  out << hypothesis_report(load_digraph(input)).to_json().dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto id = parse_theorem_id(a.theorem);
  if (!id) {
    err << "unknown theorem '" << a.theorem << "' (expected t1, t2, t3, t4k2 or t4k3)\n";
    return kExitUsage;
  }
  Campaign c;
  c.theorem = *id;
  c.trials = a.trials;
  c.part_size_choices = {a.parts};
  c.p_symmetric_choices = {a.psym};
  c.m_choices = {a.m};
  c.k = a.k;
  c.seed = a.seed;
  c.workers = a.workers;
  c.rejection_samples = a.rejection_samples;
  c.coarsen_probability = a.coarsen;
  const CampaignReport report = verify_theorem(c);
  const std::string json = report.to_json().dump(2) + "\n";
  if (!a.report.empty()) write_text(json, a.report, out);
  out << (a.json ? json : render_summary(report));
  return report.verified() ? kExitOk : kExitDomain;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions opt;
  opt.part_sizes = a.parts;
  opt.allow_symmetric = a.symmetric;
  opt.coarsenings = a.coarsenings;
  opt.seed = a.seed;
  opt.workers = a.workers;
  opt.checkpoint_every = a.checkpoint_every;
  if (!a.checkpoint.empty()) opt.checkpoint_path = a.checkpoint;
  opt.max_orientations = a.limit;
  const SearchReport report = search_conjecture(opt);
  const std::string json = report.to_json().dump(2) + "\n";
  if (!a.report.empty()) write_text(json, a.report, out);
  if (a.json) {
    out << json;
  } else {
    const auto& s = report.state;
    out << "orientations " << s.orientations_examined << " / " << report.orientations_total
        << (report.complete ? " (complete)" : " (partial)") << '\n'
        << "instances examined " << s.instances_examined << '\n'
        << "counterexamples " << s.counterexamples.size() << '\n';
    for (const auto& c : s.counterexamples) {
      out << "counterexample orientation " << c.orientation << " coloring " << c.coloring
          << (c.oracle_agrees ? " (oracle confirms)" : " (ORACLE DISAGREES)") << '\n'
          << serialize(c.digraph);
    }
  }
  return report.state.counterexamples.empty() ? kExitOk : kExitDomain;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GenParams p;
  p.part_sizes = a.parts;
  p.p_symmetric = a.psym;
  p.orientation_bias = a.bias;
  p.m = a.m;
  p.seed = a.seed;
  write_text(serialize(random_colored_smp(p)), a.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-colored kernels in colored semicomplete multipartite digraphs"};
  app.name(args.empty() ? "ckern" : args.front());
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Find a k-colored kernel of a digraph file");
  check_cmd->add_option("--input", check.input, "Digraph JSON file")->required();
  check_cmd->add_option("--k", check.k, "Color bound k")->required()->check(CLI::PositiveNumber);
  check_cmd->add_option("--cap", check.cap, "Kernel solver vertex cap")->check(CLI::Range(1, 64));

  ClosureArgs closure;
  auto* closure_cmd = app.add_subcommand("closure", "Emit the k-colored closure as a digraph file");
  closure_cmd->add_option("--input", closure.input)->required();
  closure_cmd->add_option("--k", closure.k)->required()->check(CLI::PositiveNumber);
  closure_cmd->add_option("--output", closure.output, "Output path (stdout when omitted)");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "List occurrences of a cycle pattern");
  census_cmd->add_option("--input", census.input)->required();
  census_cmd->add_option("--pattern", census.pattern, "c3, c4, c5, c3c3 or c4c4")->required();
  census_cmd->add_flag("--json", census.json);

  std::string hyp_input;
  auto* hyp_cmd = app.add_subcommand("hypotheses", "Evaluate every coloring hypothesis");
  hyp_cmd->add_option("--input", hyp_input)->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized theorem campaign");
  verify_cmd->add_option("--theorem", verify.theorem, "t1, t2, t3, t4k2 or t4k3")->required();
  verify_cmd->add_option("--trials", verify.trials)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--parts", verify.parts, "Part sizes, comma separated")->delimiter(',');
  verify_cmd->add_option("--m", verify.m, "Number of colors");
  verify_cmd->add_option("--psym", verify.psym, "Probability of a symmetric pair");
  verify_cmd->add_option("--k", verify.k);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--workers", verify.workers)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--rejection-samples", verify.rejection_samples, "Extra T2 samples with 3+ colors");
  verify_cmd->add_option("--coarsen", verify.coarsen, "T3: probability of coarsening the finest coloring");
  verify_cmd->add_option("--report", verify.report, "Write the JSON report here");
  verify_cmd->add_flag("--json", verify.json, "Print the JSON report instead of the table");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search-conjecture", "Exhaustive counterexample search for 1-colored kernels");
  search_cmd->add_option("--parts", search.parts)->delimiter(',')->required();
  search_cmd->add_option("--symmetric", search.symmetric, "Allow symmetric arcs (true/false)");
  search_cmd->add_option("--coarsenings", search.coarsenings)->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--checkpoint", search.checkpoint, "Checkpoint file (resumed when present)");
  search_cmd->add_option("--workers", search.workers)->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--checkpoint-every", search.checkpoint_every)->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", search.limit, "Stop after this many orientations");
  search_cmd->add_option("--report", search.report);
  search_cmd->add_flag("--json", search.json);

  GenerateArgs generate;
  auto* gen_cmd = app.add_subcommand("generate", "Random colored semicomplete multipartite digraph");
  gen_cmd->add_option("--parts", generate.parts)->delimiter(',')->required();
  gen_cmd->add_option("--psym", generate.psym);
  gen_cmd->add_option("--bias", generate.bias, "Probability of u -> v for a single arc, u < v");
  gen_cmd->add_option("--m", generate.m);
  gen_cmd->add_option("--seed", generate.seed);
  gen_cmd->add_option("--output", generate.output);

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*closure_cmd) return cmd_closure(closure, out);
    if (*census_cmd) return cmd_census(census, out, err);
    if (*hyp_cmd) return cmd_hypotheses(hyp_input, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*search_cmd) return cmd_search(search, out);
    if (*gen_cmd) return cmd_generate(generate, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace ck
