#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromakernel/digraph.hpp"
#include "chromakernel/generators.hpp"
#include "chromakernel/kernel.hpp"

namespace ck {

struct Counterexample {
  std::uint64_t orientation = 0;  // enumeration index
  int coloring = 0;               // 0 = finest, i = i-th sampled coarsening
  ColoredDigraph digraph;
  bool oracle_agrees = false;     // subset oracle also finds no 1-colored kernel
};

struct SearchCheckpoint {
  std::vector<int> part_sizes;
  bool allow_symmetric = false;
  int coarsenings = 0;
  std::uint64_t seed = 0;
  std::uint64_t cursor = 0;  // next orientation; also positions the coarsening seed stream
  std::uint64_t orientations_examined = 0;
  std::uint64_t instances_examined = 0;
  std::vector<Counterexample> counterexamples;

  Json to_json() const;
};

SearchCheckpoint checkpoint_from_json(const Json& j);  // throws CorruptCheckpoint
SearchCheckpoint load_checkpoint(const std::string& path);
void save_checkpoint(const SearchCheckpoint& cp, const std::string& path);  // write-then-rename

struct SearchOptions {
  std::vector<int> part_sizes;
  bool allow_symmetric = true;
  int coarsenings = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t checkpoint_every = 1000;  // orientations between checkpoint writes
  std::optional<std::string> checkpoint_path;
  // Stop after this many orientations in this call (resume later).
  std::optional<std::uint64_t> max_orientations;
  std::uint64_t budget = kDefaultEnumerationBudget;
  KernelSolverOptions solver;
};

struct SearchReport {
  SearchCheckpoint state;
  std::uint64_t orientations_total = 0;
  bool complete = false;

  Json to_json() const;
};

// Looks for semicomplete multipartite digraphs whose directed 3- and 4-cycles
// are all monochromatic yet which have no 1-colored kernel. Each orientation
// is tried with its finest short-cycle coloring and `coarsenings` random
// coarsenings of it; the coloring space is sampled, not exhausted.
//
// With a checkpoint path the state is loaded from it when the file exists and
// written back every checkpoint_every orientations and at the end. `resume`
// takes precedence over the file.
SearchReport search_conjecture(const SearchOptions& options, std::optional<SearchCheckpoint> resume = std::nullopt);

}  // namespace ck
