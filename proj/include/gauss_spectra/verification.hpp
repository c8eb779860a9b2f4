#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gauss_spectra/chord_diagram.hpp"

namespace gauss_spectra {

// Every chord diagram on n chords exactly once, in canonical labelling:
// all (2n-1)!! ways of matching 2n circle positions, chords numbered by
// first endpoint.
void for_each_canonical_diagram(int n,
                                const std::function<void(const ChordDiagram&)>& fn);

struct VerifyOptions {
  int max_chords = 5;           // exhaustive diagram sweeps cover 0..max_chords
  int max_graph_vertices = 5;   // exhaustive calculus sweep, by result size
  int random_graphs = 1000;     // randomized calculus rounds, up to 8 vertices
  int random_matrices = 10000;  // randomized zero-multiplicity checks
  int random_matrix_dim = 10;
  unsigned seed = 7;
  int threads = 1;
};

struct FamilyResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> examples;  // first few failing cases
  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<FamilyResult> families;
  bool all_passed() const {
    for (const auto& f : families)
      if (!f.passed()) return false;
    return true;
  }
};

// Round-trips of the Gauss-code text format, canonical labelling, and the
// mirror involution.
FamilyResult verify_diagram_codec(const VerifyOptions& options);

// Characteristic polynomial is unchanged by mirroring the diagram.
FamilyResult verify_mirror_spectrum(const VerifyOptions& options);

// One pass over all diagrams and all 3^n states, producing four families:
// count-agreement (spectral vs boundary vs GF(2) counts), double-cover
// (every unoriented chord, both gluings, cover count = twice the base),
// zero-root-multiplicity (root multiplicity = rational nullity on every
// matrix the sweep touches), kernel-basis (component vectors annihilated by
// the skew matrix and spanning its kernel).
std::vector<FamilyResult> verify_counting_sweep(const VerifyOptions& options);

// Randomized skew matrices: zero-root multiplicity equals rational nullity.
FamilyResult verify_random_matrices(const VerifyOptions& options);

// Add-edge, twin edge deletion, union, join, coalescence, and the derivative
// identity, against direct characteristic polynomials.
FamilyResult verify_spectral_calculus(const VerifyOptions& options);

// Path and complete-graph polynomial closed forms, determinant parity of
// complete graphs, and the cover-family value formulas.
FamilyResult verify_closed_forms(const VerifyOptions& options);

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace gauss_spectra
