#include "doctest.h"

#include "gauss_spectra/pretzel.hpp"
#include "gauss_spectra/skew_spectra.hpp"

using namespace gauss_spectra;

TEST_CASE("parameter validation") {
  PretzelParams p = pretzel_params(-3, 1, 2);
  CHECK(p.P() == 3);
  CHECK(p.Q() == 1);
  CHECK(p.R() == 2);
  CHECK_THROWS_AS(pretzel_params(0, 1, 1), ZeroParameter);
  CHECK_THROWS_AS(pretzel_params(2, 4, 1), InvalidPretzel);
  CHECK_THROWS_AS(pretzel_params(2, 2, 2), InvalidPretzel);
}

TEST_CASE("odd closed forms") {
  PretzelParams p = pretzel_params(1, 1, 1);
  CHECK(n0_closed(p, 1) == 0);
  CHECK(n0_closed(p, 2) == 3);
  CHECK(n0_closed(p, 3) == 0);
  CHECK(n1_closed(p, 1) == 3);
  CHECK(n1_closed(p, 2) == 6);
  CHECK(n1_closed(p, 3) == 3);
  CHECK(n0_closed(p, 4) == 0);
  CHECK(n1_closed(p, 4) == 0);
  CHECK_THROWS_AS(n0_closed(p, 0), OutOfRange);
  CHECK_THROWS_AS(n1_closed(p, -1), OutOfRange);

  PretzelParams big = pretzel_params(3, 5, 1);
  CHECK(n0_closed(big, 2) == 3 * 5 + 5 * 1 + 1 * 3);
  CHECK(n1_closed(big, 1) == 3 + 5 + 1);
  CHECK(n1_closed(big, 2) == 2 * (3 * 5 + 5 * 1 + 1 * 3));
}

TEST_CASE("one even closed forms") {
  PretzelParams p = pretzel_params(2, 1, 1);
  CHECK(n0_closed(p, 1) == 0);
  CHECK(n1_closed(p, 1) == 4);
  CHECK(n0_closed(p, 2) == 4);
  CHECK(n1_closed(p, 2) == 8);
}

TEST_CASE("one even region with several strands, one mark, odd m") {
  // census-frozen values exercising the a*(a-1) pairing term
  CHECK(n1_closed(pretzel_params(4, 1, 1), 3) == 32);
  CHECK(n1_closed(pretzel_params(4, 1, 3), 3) == 114);
  CHECK(n1_closed(pretzel_params(4, 1, 3), 5) == 64);
  CHECK(n1_closed(pretzel_params(4, 3, 3), 3) == 240);
  CHECK(n1_closed(pretzel_params(4, 3, 3), 5) == 534);
  CHECK(n1_closed(pretzel_params(4, 3, 3), 7) == 96);
  CHECK(n1_closed(pretzel_params(6, 3, 3), 3) == 420);
  CHECK(n1_closed(pretzel_params(6, 3, 3), 5) == 1032);
  CHECK(n1_closed(pretzel_params(6, 5, 5), 3) == 1120);
  CHECK(n1_closed(pretzel_params(6, 5, 5), 5) == 9960);
  CHECK(census(pretzel_params(4, 3, 3), 5, 1).agrees);
}

TEST_CASE("closed forms are symmetric in the twist regions") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(n0_closed(pretzel_params(3, 2, 1), m) ==
          n0_closed(pretzel_params(1, 3, 2), m));
    CHECK(n1_closed(pretzel_params(3, 2, 1), m) ==
          n1_closed(pretzel_params(2, 1, 3), m));
  }
}

TEST_CASE("census agrees with the closed forms") {
  CensusRow row = census(pretzel_params(1, 1, 1), 2, 0);
  REQUIRE(row.closed_form.has_value());
  CHECK(*row.closed_form == 3);
  CHECK(row.brute_force == 3);
  CHECK(row.agrees);

  CensusRow one = census(pretzel_params(2, 1, 1), 2, 1);
  REQUIRE(one.closed_form.has_value());
  CHECK(*one.closed_form == 8);
  CHECK(one.brute_force == 8);
  CHECK(one.agrees);

  CensusRow empty = census(pretzel_params(1, 1, 1), 0, 0);
  CHECK(!empty.closed_form.has_value());
  CHECK(empty.brute_force == 1);
  CHECK(empty.agrees);

  CensusRow beyond = census(pretzel_params(1, 1, 1), 4, 0);
  CHECK(beyond.brute_force == 0);
  CHECK(*beyond.closed_form == 0);
  CHECK(beyond.agrees);

  CensusRow j2 = census(pretzel_params(1, 1, 1), 3, 2);
  CHECK(!j2.closed_form.has_value());
  CHECK(j2.agrees);

  CHECK_THROWS_AS(census(pretzel_params(1, 1, 1), 2, 3), OutOfRange);
  CHECK_THROWS_AS(census(pretzel_params(1, 1, 1), 2, -1), OutOfRange);
}

TEST_CASE("census is independent of threading and signs") {
  PretzelParams p = pretzel_params(3, 3, 1);
  CensusRow serial = census(p, 3, 1, 1);
  CensusRow parallel = census(p, 3, 1, 4);
  CHECK(serial.brute_force == parallel.brute_force);
  CHECK(census(pretzel_params(-3, 3, -1), 3, 1).brute_force == serial.brute_force);
}

TEST_CASE("cover family graphs") {
  LinearlyOrderedGraph g = lemma_family_graph(CoverFamily::glued_cliques, 1, 1);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  LinearlyOrderedGraph doubled =
      lemma_family_graph(CoverFamily::glued_cliques_doubled, 2, 1);
  CHECK(doubled.vertex_count() == 2 * (2 + 1) + 1);

  CHECK_THROWS_AS(lemma_family_graph(CoverFamily::offset_glued_doubled, 0, 1),
                  OutOfRange);
}

TEST_CASE("lemma values match direct spectra") {
  for (CoverFamily which :
       {CoverFamily::glued_cliques, CoverFamily::glued_cliques_doubled,
        CoverFamily::join_union_doubled, CoverFamily::offset_glued_doubled})
    for (int alpha = 1; alpha <= 3; ++alpha)
      for (int beta = 1; beta <= 3; ++beta) {
        IntPolynomial direct =
            char_poly(skew_adjacency(lemma_family_graph(which, alpha, beta)));
        LemmaValues values = lemma_values(which, alpha, beta);
        CHECK(direct(Int(0)) == values.at_zero);
        CHECK(direct.derivative()(Int(0)) == values.derivative_at_zero);
      }
}

TEST_CASE("offset family anchor values") {
  CHECK(lemma_values(CoverFamily::offset_glued_doubled, 1, 1).derivative_at_zero == 3);
  CHECK(lemma_values(CoverFamily::offset_glued_doubled, 2, 2).derivative_at_zero == 9);
  CHECK(lemma_values(CoverFamily::offset_glued_doubled, 2, 4).derivative_at_zero == 13);
  CHECK(lemma_values(CoverFamily::offset_glued_doubled, 1, 1).at_zero == 0);
}
