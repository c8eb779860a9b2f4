#pragma once

#include <functional>
#include <vector>

#include "gauss_spectra/chord_diagram.hpp"
#include "gauss_spectra/linear_ordered_graph.hpp"

namespace gauss_spectra {

// One band side crossed by a boundary component.  Side 0 is the band side
// through the corner before the chord's first endpoint (sign +1), side 1 the
// side through the corner after it (sign -1).  On an untwisted band side 0
// ends at the corner after the second endpoint, on a half-twisted band at
// the corner before it.
struct SideCrossing {
  int chord;
  int side;
  int sigma;
};

struct BoundaryTrace {
  int component_count = 0;
  std::vector<std::vector<SideCrossing>> components;
};

// Geometric ground truth: glues band sides to circle arcs and counts the
// cycles of the resulting boundary.  Oriented chords get untwisted bands,
// unoriented chords half-twisted ones, erased chords are dropped.
BoundaryTrace boundary_count_oracle(const ChordDiagram& d, const PartialState& s);

// Reusable buffers for bulk counting; contents are scratch only.
class BoundaryScratch {
public:
  std::vector<int> rank;
  std::vector<int> band_to;
  std::vector<char> visited;
};

// Component count alone.  Pass the same scratch object when sweeping many
// states of one diagram to avoid reallocation.
int boundary_component_count(const ChordDiagram& d, const PartialState& s,
                             BoundaryScratch& scratch);

// Loop count through the spectral route: with no unoriented chords, one plus
// the multiplicity of the zero root of the skew interlacement spectrum of the
// non-erased part; otherwise reduces through the orientable double cover of
// the smallest unoriented chord and halves its count.
int loop_count_rlcp(const ChordDiagram& d, const PartialState& s);

// Loop count over GF(2): nullity of A + Delta plus one, where A is the
// symmetric interlacement adjacency and Delta marks unoriented chords.
// Requires a full state (every chord smoothed).
int loop_count_zlcp(const ChordDiagram& d, const PartialState& s);

// One vector per boundary component, indexed by the non-erased chords in
// canonical order: the signed sum of the band sides the component crosses.
// Each vector lies in the kernel of the skew-adjacency matrix and together
// they span it.  Requires no unoriented chords.
std::vector<IntVector> kernel_basis_theta(const ChordDiagram& d, const PartialState& s);

// The spanning set above reduced to an actual kernel basis by dropping the
// first vector whose removal preserves the rank.
std::vector<IntVector> kernel_basis(const ChordDiagram& d, const PartialState& s);

// All states with exactly j unoriented and m - j oriented chords out of n,
// the rest erased; C(n,m) * C(m,j) states in total.
void for_each_state(int n, int m, int j,
                    const std::function<void(const PartialState&)>& fn);
std::vector<PartialState> enumerate_states(int n, int m, int j);

// All 2^n full states (every chord oriented or unoriented, none erased).
void for_each_full_state(int n, const std::function<void(const PartialState&)>& fn);

// All 3^n partial states.
void for_each_partial_state(int n, const std::function<void(const PartialState&)>& fn);

}  // namespace gauss_spectra
