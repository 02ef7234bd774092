#include "chromakernel/campaign.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "chromakernel/certify.hpp"
#include "chromakernel/error.hpp"
#include "chromakernel/generators.hpp"
#include "chromakernel/parallel.hpp"
#include "chromakernel/patterns.hpp"
#include "chromakernel/random.hpp"

namespace ck {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_k_ge_4: return "T1_k_ge_4";
    case TheoremId::T2_k3: return "T2_k3";
    case TheoremId::T3_k2: return "T3_k2";
    case TheoremId::T4_bipartite_k2: return "T4_bipartite_k2";
    case TheoremId::T4_bipartite_k3: return "T4_bipartite_k3";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
  if (name == "t1" || name == "T1_k_ge_4") return TheoremId::T1_k_ge_4;
  if (name == "t2" || name == "T2_k3") return TheoremId::T2_k3;
  if (name == "t3" || name == "T3_k2") return TheoremId::T3_k2;
  if (name == "t4k2" || name == "T4_bipartite_k2") return TheoremId::T4_bipartite_k2;
  if (name == "t4k3" || name == "T4_bipartite_k3") return TheoremId::T4_bipartite_k3;
  return std::nullopt;
}

int default_k(TheoremId id) {
  switch (id) {
    case TheoremId::T1_k_ge_4: return 4;
    case TheoremId::T2_k3: return 3;
    case TheoremId::T3_k2: return 2;
    case TheoremId::T4_bipartite_k2: return 2;
    case TheoremId::T4_bipartite_k3: return 3;
  }
  return 0;
}

namespace {

void invalid(const std::string& what) { throw Error(ErrorKind::InvalidCampaign, what); }

bool gate(TheoremId id, const ColoredDigraph& d) {
  switch (id) {
    case TheoremId::T1_k_ge_4: return true;
    case TheoremId::T2_k3:
      return holds(d, Hypothesis::AllC4AtMost2Colored) &&
             (holds(d, Hypothesis::AllC5AtMost3Colored) || holds(d, Hypothesis::AllC3joinC3AtMost2Colored));
    case TheoremId::T3_k2:
      return holds(d, Hypothesis::AllC3Monochromatic) && holds(d, Hypothesis::AllC4Monochromatic);
    case TheoremId::T4_bipartite_k2: return holds(d, Hypothesis::AllC4joinC4AtMost2Colored);
    case TheoremId::T4_bipartite_k3: return holds(d, Hypothesis::AllC4joinC4AtMost3Colored);
  }
  return false;
}

struct Instance {
  ColoredDigraph digraph;
  std::string source;
};

struct TrialOutcome {
  std::string source;
  bool gated = false;
  bool found = false;
  std::optional<CampaignFailure> failure;
};

int effective_k(const Campaign& c) { return c.k.value_or(default_k(c.theorem)); }

constexpr std::uint64_t kRejectionStream = 0x72656a6563740000ULL;

Instance draw_instance(const Campaign& c, Rng& rng, const std::vector<int>& m_choices) {
  GenParams params;
  params.part_sizes = rng.pick(c.part_size_choices);
  params.p_symmetric = rng.pick(c.p_symmetric_choices);
  params.m = c.theorem == TheoremId::T3_k2 ? 1 : rng.pick(m_choices);
  params.seed = rng.next();
  ColoredDigraph d = random_colored_smp(params);
  if (c.theorem != TheoremId::T3_k2) return {std::move(d), "random"};

  static constexpr int kShortCycles[] = {3, 4};
  ColoredDigraph finest = finest_short_cycle_coloring(d, kShortCycles);
  const int used = finest.used_color_count();
  if (used >= 2 && rng.chance(c.coarsen_probability)) {
    const int merges = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(used - 1)));
    return {coarsen_coloring(finest, merges, rng.next()), "coarsened"};
  }
  return {std::move(finest), "finest"};
}

TrialOutcome run_instance(const Campaign& c, Instance inst, bool require_three_colors, std::uint64_t stream) {
  TrialOutcome out;
  out.source = std::move(inst.source);
  const ColoredDigraph& d = inst.digraph;
  out.gated = gate(c.theorem, d) && (!require_three_colors || d.used_color_count() >= 3);
  if (!out.gated) return out;

  const int k = effective_k(c);
  Json diag;
  diag["stream"] = stream;
  diag["source"] = out.source;
  try {
    const KernelResult r = find_k_colored_kernel(d, k, c.solver);
    out.found = r.found();
    if (out.found) return out;
    diag["solver"] = r.describe();
  } catch (const std::logic_error& e) {
    diag["solver"] = std::string("certification failed: ") + e.what();
  }
  // Escalate every failure to the independent oracle before reporting it.
  if (d.n() <= certify::kMaxVertices) {
    const auto verdict = certify::k_colored_kernel_oracle(d, k);
    diag["oracle_kernel_exists"] = verdict.kernel_exists;
    diag["oracle_agrees"] = !verdict.kernel_exists;
    if (verdict.kernel) diag["oracle_kernel"] = *verdict.kernel;
  } else {
    diag["oracle_agrees"] = nullptr;
  }
  diag["hypotheses"] = hypothesis_report(d).to_json();
  out.failure = CampaignFailure{d, k, std::move(diag)};
  return out;
}

}  // namespace

void validate(const Campaign& c) {
  if (c.trials < 0) invalid("trials must be non-negative");
  if (c.rejection_samples < 0) invalid("rejection_samples must be non-negative");
  if (c.rejection_samples > 0 && c.theorem != TheoremId::T2_k3) invalid("rejection sampling applies to T2 only");
  if (c.part_size_choices.empty() || c.p_symmetric_choices.empty() || c.m_choices.empty()) {
    invalid("choice lists must be nonempty");
  }
  for (const auto& sizes : c.part_size_choices) {
    const auto r = static_cast<int>(sizes.size());
    switch (c.theorem) {
      case TheoremId::T1_k_ge_4:
        if (r < 2) invalid("T1 needs r >= 2");
        break;
      case TheoremId::T2_k3:
      case TheoremId::T3_k2:
        if (r < 3) invalid(std::string(to_string(c.theorem)) + " needs r >= 3");
        break;
      case TheoremId::T4_bipartite_k2:
      case TheoremId::T4_bipartite_k3:
        if (r != 2) invalid(std::string(to_string(c.theorem)) + " needs r = 2");
        break;
    }
    int n = 0;
    for (int s : sizes) {
      if (s < 1) invalid("part sizes must be positive");
      n += s;
    }
    if (n > c.solver.max_vertices) invalid("instance size exceeds the kernel solver cap");
  }
  for (double p : c.p_symmetric_choices) {
    if (!(p >= 0.0 && p <= 1.0)) invalid("p_symmetric must lie in [0, 1]");
  }
  for (const auto* list : {&c.m_choices, &c.rejection_m_choices}) {
    for (int m : *list) {
      if (m < 1 || m > ColorSet::kCapacity) invalid("m must lie in 1..64");
    }
  }
  if (c.theorem == TheoremId::T2_k3 && c.rejection_samples > 0 && c.rejection_m_choices.empty()) {
    invalid("rejection sampling needs color choices");
  }
  if (!(c.coarsen_probability >= 0.0 && c.coarsen_probability <= 1.0)) invalid("coarsen_probability must lie in [0, 1]");
  const int k = effective_k(c);
  if (c.theorem == TheoremId::T1_k_ge_4 ? k < 4 : k != default_k(c.theorem)) {
    invalid(std::string(to_string(c.theorem)) + " does not apply at k = " + std::to_string(k));
  }
}

CampaignReport verify_theorem(const Campaign& c) {
  validate(c);
  const auto main_trials = static_cast<std::size_t>(c.trials);
  const auto total = main_trials + static_cast<std::size_t>(c.rejection_samples);
  auto outcomes = parallel_map(total, c.workers, [&](std::size_t i) {
    if (i < main_trials) {
      Rng rng(derive_seed(c.seed, i));
      return run_instance(c, draw_instance(c, rng, c.m_choices), false, i);
    }
    const std::size_t j = i - main_trials;
    Rng rng(derive_seed(c.seed ^ kRejectionStream, j));
    Instance inst = draw_instance(c, rng, c.rejection_m_choices);
    inst.source = "rejection";
    return run_instance(c, std::move(inst), true, i);
  });

  CampaignReport report;
  report.theorem = c.theorem;
  report.k = effective_k(c);
  report.campaign = c;
  for (auto& o : outcomes) {
    SourceStats& s = report.sources[o.source];
    ++report.trials;
    ++s.trials;
    if (o.gated) {
      ++report.hypothesis_satisfied;
      ++s.hypothesis_satisfied;
    }
    if (o.found) {
      ++report.kernel_found;
      ++s.kernel_found;
    }
    if (o.failure) report.failures.push_back(std::move(*o.failure));
  }
  return report;
}

Json CampaignReport::to_json() const {
  Json j;
  j["theorem_id"] = to_string(theorem);
  j["k"] = k;
  j["trials"] = trials;
  j["hypothesis_satisfied"] = hypothesis_satisfied;
  j["kernel_found"] = kernel_found;
  j["verified"] = verified();
  Json src = Json::object();
  for (const auto& [name, s] : sources) {
    src[name] = {{"trials", s.trials}, {"hypothesis_satisfied", s.hypothesis_satisfied}, {"kernel_found", s.kernel_found}};
  }
  j["sources"] = std::move(src);
  Json fails = Json::array();
  for (const auto& f : failures) {
    fails.push_back({{"k", f.k}, {"digraph", ck::to_json(f.digraph)}, {"diagnostics", f.diagnostics}});
  }
  j["failures"] = std::move(fails);
  Json camp;
  camp["seed"] = campaign.seed;
  camp["trials"] = campaign.trials;
  camp["rejection_samples"] = campaign.rejection_samples;
  camp["seed_streams"] = {0, campaign.trials + campaign.rejection_samples};
  camp["part_size_choices"] = campaign.part_size_choices;
  camp["p_symmetric_choices"] = campaign.p_symmetric_choices;
  camp["m_choices"] = campaign.m_choices;
  if (campaign.rejection_samples > 0) camp["rejection_m_choices"] = campaign.rejection_m_choices;
  if (campaign.theorem == TheoremId::T3_k2) camp["coarsen_probability"] = campaign.coarsen_probability;
  j["campaign"] = std::move(camp);
  return j;
}

std::string render_summary(const CampaignReport& report) {
  std::ostringstream os;
  os << "theorem " << to_string(report.theorem) << " (k = " << report.k << ")\n";
  os << std::left << std::setw(12) << "source" << std::right << std::setw(10) << "trials" << std::setw(10) << "gated"
     << std::setw(10) << "found" << '\n';
  for (const auto& [name, s] : report.sources) {
    os << std::left << std::setw(12) << name << std::right << std::setw(10) << s.trials << std::setw(10)
       << s.hypothesis_satisfied << std::setw(10) << s.kernel_found << '\n';
  }
  os << std::left << std::setw(12) << "total" << std::right << std::setw(10) << report.trials << std::setw(10)
     << report.hypothesis_satisfied << std::setw(10) << report.kernel_found << '\n';
  os << "failures: " << report.failures.size() << (report.verified() ? " (verified)" : " (NOT verified)") << '\n';
  return os.str();
}

}  // namespace ck
