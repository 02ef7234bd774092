#include "chromakernel/conjecture_search.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chromakernel/certify.hpp"
#include "chromakernel/error.hpp"
#include "chromakernel/parallel.hpp"
#include "chromakernel/patterns.hpp"
#include "chromakernel/random.hpp"

namespace ck {

namespace {

constexpr int kCheckpointVersion = 1;

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["orientation"] = format_cursor(c.orientation);
  j["coloring"] = c.coloring;
  j["oracle_agrees"] = c.oracle_agrees;
  j["digraph"] = to_json(c.digraph);
  return j;
}

[[noreturn]] void corrupt(const std::string& what) { throw Error(ErrorKind::CorruptCheckpoint, what); }

}  // namespace

Json SearchCheckpoint::to_json() const {
  Json j;
  j["version"] = kCheckpointVersion;
  j["part_sizes"] = part_sizes;
  j["allow_symmetric"] = allow_symmetric;
  j["coarsenings"] = coarsenings;
  j["seed"] = seed;
  j["cursor"] = format_cursor(cursor);
  j["orientations_examined"] = orientations_examined;
  j["instances_examined"] = instances_examined;
  Json ces = Json::array();
  for (const auto& c : counterexamples) ces.push_back(counterexample_json(c));
  j["counterexamples"] = std::move(ces);
  return j;
}

SearchCheckpoint checkpoint_from_json(const Json& j) {
  SearchCheckpoint cp;
  try {
    if (j.at("version").get<int>() != kCheckpointVersion) corrupt("unsupported checkpoint version");
    cp.part_sizes = j.at("part_sizes").get<std::vector<int>>();
    cp.allow_symmetric = j.at("allow_symmetric").get<bool>();
    cp.coarsenings = j.at("coarsenings").get<int>();
    cp.seed = j.at("seed").get<std::uint64_t>();
    cp.cursor = parse_cursor(j.at("cursor").get<std::string>());
    cp.orientations_examined = j.at("orientations_examined").get<std::uint64_t>();
    cp.instances_examined = j.at("instances_examined").get<std::uint64_t>();
    for (const Json& c : j.at("counterexamples")) {
      cp.counterexamples.push_back({parse_cursor(c.at("orientation").get<std::string>()), c.at("coloring").get<int>(),
                                    digraph_from_json(c.at("digraph")), c.at("oracle_agrees").get<bool>()});
    }
  } catch (const nlohmann::json::exception& e) {
    corrupt(e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CorruptCheckpoint) throw;
    corrupt(e.what());
  }
  if (cp.orientations_examined != cp.cursor) corrupt("cursor and orientation count disagree");
  return cp;
}

SearchCheckpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) corrupt("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    corrupt(path + ": " + e.what());
  }
  return checkpoint_from_json(j);
}

void save_checkpoint(const SearchCheckpoint& cp, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidParams, "cannot write " + tmp);
    out << cp.to_json().dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Json SearchReport::to_json() const {
  Json j;
  j["part_sizes"] = state.part_sizes;
  j["allow_symmetric"] = state.allow_symmetric;
  j["coarsenings_per_instance"] = state.coarsenings;
  j["seed"] = state.seed;
  j["orientations_total"] = orientations_total;
  j["orientations_examined"] = state.orientations_examined;
  j["instances_examined"] = state.instances_examined;
  j["complete"] = complete;
  j["coloring_coverage"] =
      "finest short-cycle coloring plus " + std::to_string(state.coarsenings) +
      " sampled coarsening(s) per orientation; coarser colorings are not enumerated exhaustively";
  j["counterexample_count"] = state.counterexamples.size();
  Json ces = Json::array();
  for (const auto& c : state.counterexamples) ces.push_back(counterexample_json(c));
  j["counterexamples"] = std::move(ces);
  return j;
}

namespace {

struct OrientationResult {
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
};

OrientationResult examine(const SmpEnumeration& en, std::uint64_t index, const SearchOptions& opt) {
  static constexpr int kShortCycles[] = {3, 4};
  OrientationResult out;
  const ColoredDigraph finest = finest_short_cycle_coloring(en.at(index), kShortCycles);
  const int used = finest.used_color_count();

  auto test = [&](const ColoredDigraph& d, int coloring) {
    ++out.instances;
    if (!holds(d, Hypothesis::AllC3Monochromatic) || !holds(d, Hypothesis::AllC4Monochromatic)) {
      throw std::logic_error("generated coloring breaks the monochromatic C3/C4 hypothesis");
    }
    if (find_k_colored_kernel(d, 1, opt.solver).found()) return;
    const bool oracle_agrees =
        d.n() <= certify::kMaxVertices && !certify::k_colored_kernel_oracle(d, 1).kernel_exists;
    out.counterexamples.push_back({index, coloring, d, oracle_agrees});
  };

  test(finest, 0);
  if (used < 2) return out;
  const auto stride = static_cast<std::uint64_t>(opt.coarsenings) + 1;
  for (int c = 1; c <= opt.coarsenings; ++c) {
    Rng rng(derive_seed(opt.seed, index * stride + static_cast<std::uint64_t>(c)));
    const int merges = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(used - 1)));
    test(coarsen_coloring(finest, merges, rng.next()), c);
  }
  return out;
}

}  // namespace

SearchReport search_conjecture(const SearchOptions& opt, std::optional<SearchCheckpoint> resume) {
  if (opt.coarsenings < 0) throw Error(ErrorKind::InvalidParams, "coarsenings must be non-negative");
  if (opt.checkpoint_every == 0) throw Error(ErrorKind::InvalidParams, "checkpoint_every must be positive");
  const SmpEnumeration en(opt.part_sizes, opt.allow_symmetric, opt.budget);
  int n = 0;
  for (int s : opt.part_sizes) n += s;
  if (n > opt.solver.max_vertices) throw Error(ErrorKind::TooLarge, "instance size exceeds the kernel solver cap");

  if (!resume && opt.checkpoint_path && std::filesystem::exists(*opt.checkpoint_path)) {
    resume = load_checkpoint(*opt.checkpoint_path);
  }
  SearchCheckpoint state;
  if (resume) {
    state = std::move(*resume);
    if (state.part_sizes != opt.part_sizes || state.allow_symmetric != opt.allow_symmetric ||
        state.coarsenings != opt.coarsenings || state.seed != opt.seed) {
      corrupt("checkpoint was written for different search parameters");
    }
    if (state.cursor > en.total()) corrupt("checkpoint cursor past the end of the enumeration");
  } else {
    state.part_sizes = opt.part_sizes;
    state.allow_symmetric = opt.allow_symmetric;
    state.coarsenings = opt.coarsenings;
    state.seed = opt.seed;
  }

  std::uint64_t remaining = en.total() - state.cursor;
  if (opt.max_orientations) remaining = std::min(remaining, *opt.max_orientations);
  while (remaining > 0) {
    const std::uint64_t batch = std::min(remaining, opt.checkpoint_every);
    const std::uint64_t base = state.cursor;
    auto results = parallel_map(static_cast<std::size_t>(batch), opt.workers,
                                [&](std::size_t i) { return examine(en, base + i, opt); });
    for (auto& r : results) {
      state.instances_examined += r.instances;
      for (auto& c : r.counterexamples) state.counterexamples.push_back(std::move(c));
    }
    state.cursor += batch;
    state.orientations_examined += batch;
    remaining -= batch;
    if (opt.checkpoint_path) save_checkpoint(state, *opt.checkpoint_path);
  }
  if (opt.checkpoint_path) save_checkpoint(state, *opt.checkpoint_path);

  SearchReport report;
  report.orientations_total = en.total();
  report.complete = state.cursor == en.total();
  report.state = std::move(state);
  return report;
}

}  // namespace ck
