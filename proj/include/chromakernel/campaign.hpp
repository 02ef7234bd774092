#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromakernel/digraph.hpp"
#include "chromakernel/kernel.hpp"

namespace ck {

enum class TheoremId { T1_k_ge_4, T2_k3, T3_k2, T4_bipartite_k2, T4_bipartite_k3 };

std::string_view to_string(TheoremId id);
// Accepts the CLI names t1, t2, t3, t4k2, t4k3 and the full ids.
std::optional<TheoremId> parse_theorem_id(std::string_view name);
int default_k(TheoremId id);

// One randomized verification run of a kernel-existence theorem.
//
// Every trial draws part sizes, p_symmetric and m from the choice lists with a
// per-trial seed derived from `seed`, generates an instance, applies the
// theorem's coloring gate and, when the gate passes, asks for a k-colored
// kernel. T3 instances are recolored with the finest short-cycle coloring
// (optionally coarsened). T2 additionally draws `rejection_samples` instances
// with colors from rejection_m_choices and keeps those that pass the gate
// while using at least three colors.
struct Campaign {
  TheoremId theorem = TheoremId::T1_k_ge_4;
  int trials = 100;
  std::vector<std::vector<int>> part_size_choices{{1, 1, 1}};
  std::vector<double> p_symmetric_choices{0.0};
  std::vector<int> m_choices{2};
  std::optional<int> k;
  std::uint64_t seed = 0;
  int workers = 1;
  int rejection_samples = 0;
  std::vector<int> rejection_m_choices{3, 4};
  double coarsen_probability = 0.0;
  KernelSolverOptions solver;
};

struct CampaignFailure {
  ColoredDigraph digraph;
  int k = 0;
  Json diagnostics;
};

struct SourceStats {
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_satisfied = 0;
  std::uint64_t kernel_found = 0;
};

struct CampaignReport {
  TheoremId theorem = TheoremId::T1_k_ge_4;
  int k = 0;
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_satisfied = 0;
  std::uint64_t kernel_found = 0;
  std::vector<CampaignFailure> failures;
  std::map<std::string, SourceStats> sources;
  Campaign campaign;

  bool verified() const { return failures.empty(); }
  Json to_json() const;
};

// Throws InvalidCampaign when the theorem's structural requirements (part
// count, k) or the choice lists are violated.
void validate(const Campaign& campaign);

CampaignReport verify_theorem(const Campaign& campaign);

std::string render_summary(const CampaignReport& report);

}  // namespace ck
