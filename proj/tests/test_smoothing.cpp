#include "doctest.h"

#include <set>
#include <vector>

#include "gauss_spectra/chord_diagram.hpp"
#include "gauss_spectra/skew_spectra.hpp"
#include "gauss_spectra/smoothing.hpp"

using namespace gauss_spectra;

namespace {

int oracle_count(const std::string& code, const std::string& state) {
  return boundary_count_oracle(parse_gauss_code(code), PartialState::parse(state))
      .component_count;
}

int rlcp(const std::string& code, const std::string& state) {
  return loop_count_rlcp(parse_gauss_code(code), PartialState::parse(state));
}

int zlcp(const std::string& code, const std::string& state) {
  return loop_count_zlcp(parse_gauss_code(code), PartialState::parse(state));
}

}  // namespace

TEST_CASE("single chord counts") {
  CHECK(oracle_count("1 1", "o") == 2);
  CHECK(oracle_count("1 1", "u") == 1);
  CHECK(oracle_count("1 1", "x") == 1);
  CHECK(rlcp("1 1", "o") == 2);
  CHECK(rlcp("1 1", "u") == 1);
  CHECK(zlcp("1 1", "o") == 2);
  CHECK(zlcp("1 1", "u") == 1);
}

TEST_CASE("empty diagram counts one circle") {
  ChordDiagram d;
  PartialState s;
  BoundaryTrace trace = boundary_count_oracle(d, s);
  CHECK(trace.component_count == 1);
  REQUIRE(trace.components.size() == 1);
  CHECK(trace.components[0].empty());
  CHECK(loop_count_rlcp(d, s) == 1);
  CHECK(loop_count_zlcp(d, s) == 1);
}

TEST_CASE("trefoil anchors") {
  CHECK(oracle_count("1 2 3 1 2 3", "ooo") == 2);
  CHECK(rlcp("1 2 3 1 2 3", "ooo") == 2);
  CHECK(zlcp("1 2 3 1 2 3", "ooo") == 2);
  CHECK(oracle_count("1 2 3 1 2 3", "xxx") == 1);
  CHECK(rlcp("1 2 3 1 2 3", "oox") == rlcp("1 2 1 2", "oo"));
}

TEST_CASE("interlaced pair under both unoriented smoothings") {
  CHECK(oracle_count("1 2 1 2", "uu") == 2);
  CHECK(rlcp("1 2 1 2", "uu") == 2);
  CHECK(zlcp("1 2 1 2", "uu") == 2);
}

TEST_CASE("method preconditions") {
  ChordDiagram trefoil = parse_gauss_code("1 2 3 1 2 3");
  CHECK_THROWS_AS(loop_count_zlcp(trefoil, PartialState::parse("oxo")),
                  HasErasedChords);
  CHECK_THROWS_AS(loop_count_rlcp(trefoil, PartialState::parse("oo")),
                  PartitionMismatch);
  CHECK_THROWS_AS(kernel_basis_theta(trefoil, PartialState::parse("ouo")),
                  HasUnoriented);
}

TEST_CASE("boundary trace covers each band side once") {
  ChordDiagram d = parse_gauss_code("1 2 3 1 4 3 2 4");
  for (const std::string& text : {"oooo", "uoxu", "xxou", "uuuu"}) {
    PartialState s = PartialState::parse(text);
    BoundaryTrace trace = boundary_count_oracle(d, s);
    CHECK(trace.component_count == static_cast<int>(trace.components.size()));
    std::set<std::pair<int, int>> seen;
    for (const auto& component : trace.components)
      for (const auto& crossing : component) {
        CHECK(s.kind(crossing.chord) != Smoothing::erased);
        CHECK(crossing.sigma == (crossing.side == 0 ? 1 : -1));
        CHECK(seen.emplace(crossing.chord, crossing.side).second);
      }
    std::size_t smoothed = s.oriented().size() + s.unoriented().size();
    CHECK(seen.size() == 2 * smoothed);
  }
}

TEST_CASE("scratch counter matches the full trace") {
  ChordDiagram d = parse_gauss_code("1 2 3 1 4 3 2 4");
  BoundaryScratch scratch;
  for_each_partial_state(4, [&](const PartialState& s) {
    CHECK(boundary_component_count(d, s, scratch) ==
          boundary_count_oracle(d, s).component_count);
  });
}

TEST_CASE("kernel vectors") {
  ChordDiagram single = parse_gauss_code("1 1");
  auto thetas = kernel_basis_theta(single, PartialState::parse("o"));
  REQUIRE(thetas.size() == 2);
  CHECK(thetas[0](0) + thetas[1](0) == 0);
  CHECK((thetas[0](0) == 1 || thetas[1](0) == 1));

  ChordDiagram figure = parse_gauss_code("1 2 3 1 4 3 2 4");
  PartialState s = PartialState::all_oriented(4);
  IntMatrix a = skew_adjacency(interlacement_graph(figure));
  auto family = kernel_basis_theta(figure, s);
  int nullity = nullity_q(a);
  REQUIRE(static_cast<int>(family.size()) == nullity + 1);
  for (const auto& theta : family) CHECK((a * theta).isZero());
  auto basis = kernel_basis(figure, s);
  CHECK(static_cast<int>(basis.size()) == nullity);

  CHECK(kernel_basis(ChordDiagram(), PartialState()).empty());
}

TEST_CASE("state enumeration counts") {
  CHECK(enumerate_states(3, 2, 0).size() == 3);
  CHECK(enumerate_states(3, 3, 1).size() == 3);
  CHECK(enumerate_states(5, 3, 1).size() == 30);

  int full = 0;
  for_each_full_state(3, [&](const PartialState& s) {
    CHECK(!s.has_erased());
    ++full;
  });
  CHECK(full == 8);

  int partial = 0;
  for_each_partial_state(3, [&](const PartialState&) { ++partial; });
  CHECK(partial == 27);

  for (const PartialState& s : enumerate_states(5, 3, 1)) {
    CHECK(s.oriented().size() == 2);
    CHECK(s.unoriented().size() == 1);
    CHECK(s.erased().size() == 2);
  }
}
