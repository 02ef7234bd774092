#include "doctest.h"

#include <set>

#include "chromakernel/generators.hpp"
#include "chromakernel/patterns.hpp"
#include "chromakernel/random.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace ck;
using namespace ck::fixtures;

TEST_CASE("enumerate_cycles examples") {
  const auto c3 = enumerate_cycles(g1(), 3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].vertices == VertexList{0, 1, 2});
  CHECK(c3[0].colors.to_vector() == std::vector<Color>{0, 1, 2});

  const auto c4 = enumerate_cycles(g3(), 4);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].colors.to_vector() == std::vector<Color>{0, 1, 2, 3});

  CHECK(enumerate_cycles(g3(), 3).empty());
  CHECK_THROWS(enumerate_cycles(g3(), 6));
}

TEST_CASE("joined patterns on their defining digraphs") {
  const auto cc3 = c3_join_c3();
  const auto j3 = enumerate_joined(cc3, PatternKind::C3joinC3);
  REQUIRE(j3.size() == 1);
  CHECK(j3[0].vertices == VertexList{2, 0, 1, 3});  // shared arc R->L
  CHECK(j3[0].arcs.size() == 5);
  CHECK(enumerate_cycles(cc3, 3).size() == 2);

  const auto j4 = enumerate_joined(c4_join_c4(), PatternKind::C4joinC4);
  REQUIRE(j4.size() == 1);
  CHECK(j4[0].vertices == VertexList{0, 1, 2, 3, 4});
  CHECK(j4[0].arcs.size() == 6);

  CHECK(enumerate_joined(g3(), PatternKind::C3joinC3).empty());
  CHECK(enumerate_joined(g3(), PatternKind::C4joinC4).empty());
  CHECK_THROWS(enumerate_joined(g3(), PatternKind::C4));
}

TEST_CASE("counts match tuple enumeration and every occurrence re-validates") {
  static const std::vector<std::vector<int>> shapes{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2}, {3, 2}, {2, 2, 2},
                                                    {3, 3}, {1, 1, 1, 1, 1, 1}};
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    Rng rng(seed);
    const auto d = random_colored_smp({rng.pick(shapes), rng.uniform() * 0.7, 0.5, 3, rng.next()});
    CHECK(count_pattern(d, PatternKind::C3) == oracle::count_cycles(d, 3));
    CHECK(count_pattern(d, PatternKind::C4) == oracle::count_cycles(d, 4));
    CHECK(count_pattern(d, PatternKind::C5) == oracle::count_cycles(d, 5));
    CHECK(count_pattern(d, PatternKind::C3joinC3) == oracle::count_c3_join(d));
    CHECK(count_pattern(d, PatternKind::C4joinC4) == oracle::count_c4_join(d));

    for (auto kind : {PatternKind::C3, PatternKind::C4, PatternKind::C5, PatternKind::C3joinC3, PatternKind::C4joinC4}) {
      const auto all = enumerate_pattern(d, kind);
      std::set<VertexList> seen;
      for (const auto& occ : all) {
        CHECK(validate_occurrence(d, occ));
        CHECK(seen.insert(occ.vertices).second);
      }
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].vertices < all[i].vertices);
    }
  }
}

TEST_CASE("bipartite digraphs have no odd cycles") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_colored_smp({{3, 3}, 0.5, 0.5, 2, seed});
    CHECK(count_pattern(d, PatternKind::C3) == 0);
    CHECK(count_pattern(d, PatternKind::C5) == 0);
    CHECK(count_pattern(d, PatternKind::C3joinC3) == 0);
  }
}

TEST_CASE("hypothesis_report examples") {
  const HypothesisReport g1r = hypothesis_report(g1());
  CHECK_FALSE(g1r.all_C3_monochromatic());
  REQUIRE(g1r.witness(Hypothesis::AllC3Monochromatic));
  CHECK(g1r.witness(Hypothesis::AllC3Monochromatic)->colors.size() == 3);

  const auto mono = make(3, 1, singletons(3), {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
  const HypothesisReport mr = hypothesis_report(mono);
  CHECK(mr.all_C3_monochromatic());
  CHECK(mr.all_C4_monochromatic());
  CHECK(mr.all_C4_at_most_2_colored());
  CHECK(mr.all_C4joinC4_at_most_2_colored());

  const HypothesisReport two = hypothesis_report(g3({0, 1, 0, 1}, 2));
  CHECK(two.all_C4_at_most_2_colored());
  CHECK_FALSE(two.all_C4_monochromatic());

  const Json j = g1r.to_json();
  CHECK(j["all_C3_monochromatic"] == false);
  CHECK(j["all_C4_monochromatic"] == true);
  CHECK(j["witnesses"].contains("all_C3_monochromatic"));
  CHECK_FALSE(j["witnesses"].contains("all_C4_monochromatic"));
}

TEST_CASE("hypothesis flags agree with brute-force color maxima and are consistent") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_colored_smp({{2, 2, 1}, 0.3, 0.5, 1 + static_cast<int>(seed % 4), seed});
    const HypothesisReport r = hypothesis_report(d);
    CHECK(r.all_C3_monochromatic() == (oracle::max_cycle_colors(d, 3) <= 1));
    CHECK(r.all_C4_monochromatic() == (oracle::max_cycle_colors(d, 4) <= 1));
    CHECK(r.all_C4_at_most_2_colored() == (oracle::max_cycle_colors(d, 4) <= 2));
    CHECK(r.all_C5_at_most_3_colored() == (oracle::max_cycle_colors(d, 5) <= 3));
    if (r.all_C4_monochromatic()) CHECK(r.all_C4_at_most_2_colored());
    if (r.all_C4joinC4_at_most_2_colored()) CHECK(r.all_C4joinC4_at_most_3_colored());
    if (r.all_C3joinC3_at_most_2_colored()) {
      for (const auto& occ : enumerate_joined(d, PatternKind::C3joinC3)) {
        const auto& v = occ.vertices;
        for (const auto& tri : {VertexList{v[0], v[1], v[2]}, VertexList{v[0], v[1], v[3]}}) {
          VertexList closed = tri;
          closed.push_back(tri.front());
          CHECK(oracle::path_colors(d, closed) <= 2);
        }
      }
    }
    for (Hypothesis h : kAllHypotheses) {
      if (const auto& w = r.witness(h)) CHECK(validate_occurrence(d, *w));
    }
  }
}

TEST_CASE("is_3_quasi_transitive") {
  CHECK(is_3_quasi_transitive(g3()).holds);

  const auto path = make(4, 1, singletons(4), {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}});
  const QuasiTransitivity q = is_3_quasi_transitive(path);
  CHECK_FALSE(q.holds);
  REQUIRE(q.violation);
  CHECK(*q.violation == std::array<Vertex, 4>{0, 1, 2, 3});

  CHECK(is_3_quasi_transitive(make(3, 1, singletons(3), {{0, 1, 0}, {1, 2, 0}})).holds);
}

TEST_CASE("semicomplete bipartite digraphs are 3-quasi-transitive") {
  static const std::vector<std::vector<int>> shapes{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto d = random_colored_smp({rng.pick(shapes), rng.uniform(), rng.uniform(), 2, rng.next()});
    CHECK(is_3_quasi_transitive(d).holds);
  }
}

TEST_CASE("pattern names") {
  CHECK(parse_pattern_kind("c3c3") == PatternKind::C3joinC3);
  CHECK(parse_pattern_kind("c4c4") == PatternKind::C4joinC4);
  CHECK_FALSE(parse_pattern_kind("c6"));
  CHECK(to_string(Hypothesis::AllC4joinC4AtMost3Colored) == "all_C4joinC4_at_most_3_colored");
}
