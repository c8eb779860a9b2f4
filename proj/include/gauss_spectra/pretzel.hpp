#pragma once

#include <cstdint>
#include <optional>

#include "gauss_spectra/chord_diagram.hpp"
#include "gauss_spectra/linear_ordered_graph.hpp"
#include "gauss_spectra/numeric.hpp"

namespace gauss_spectra {

// Twist counts of a 3-region pretzel knot.  Nonzero, at most one even.
struct PretzelParams {
  std::int64_t p = 1, q = 1, r = 1;
  std::int64_t P() const { return p < 0 ? -p : p; }
  std::int64_t Q() const { return q < 0 ? -q : q; }
  std::int64_t R() const { return r < 0 ? -r : r; }
};

PretzelParams pretzel_params(std::int64_t p, std::int64_t q, std::int64_t r);

// Number of ways to orient-smooth m chosen crossings so that exactly one
// closed curve remains.  Zero when m exceeds the crossing count.
Int n0_closed(const PretzelParams& params, int m);

// Same with exactly one of the m crossings unoriented-smoothed.
Int n1_closed(const PretzelParams& params, int m);

// One census entry: the closed-form prediction (when one exists for j) next
// to the brute-force enumeration over all states with |unoriented| = j and
// |oriented| = m - j.
struct CensusRow {
  PretzelParams params;
  int m = 0;
  int j = 0;
  std::optional<Int> closed_form;  // engaged for j in {0, 1} and m >= 1
  long long brute_force = 0;
  bool agrees = true;
};

CensusRow census(const PretzelParams& params, int m, int j, int threads = 1);

// Double covers arising from pretzel smoothings, built structurally.  The
// regions hold alpha and beta mutually intersecting chords.
enum class CoverFamily {
  glued_cliques,           // two cliques sharing their first vertex
  glued_cliques_doubled,   // two such graphs sharing the glued vertex
  join_union_doubled,      // doubled join of an edgeless pair onto two cliques
  offset_glued_doubled,    // cliques glued away from the first vertex, doubled
};

LinearlyOrderedGraph lemma_family_graph(CoverFamily which, int alpha, int beta);

struct LemmaValues {
  Int at_zero;
  Int derivative_at_zero;
};

// Closed-form value and derivative of the skew characteristic polynomial of
// the family graph at zero.
LemmaValues lemma_values(CoverFamily which, int alpha, int beta);

}  // namespace gauss_spectra
