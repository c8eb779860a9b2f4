#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gauss_spectra/errors.hpp"

namespace gauss_spectra {

enum class Smoothing : std::uint8_t { oriented, unoriented, erased };

// Assignment of a smoothing kind to every chord of a diagram.  Index k
// describes chord k+1.  Chords marked erased are left crossed.
class PartialState {
public:
  PartialState() = default;
  explicit PartialState(std::vector<Smoothing> kinds) : kinds_(std::move(kinds)) {}

  static PartialState all_oriented(int n) {
    return PartialState(std::vector<Smoothing>(n, Smoothing::oriented));
  }
  // One character per chord: 'o' oriented, 'u' unoriented, 'x' erased.
  static PartialState parse(const std::string& text);

  int size() const { return static_cast<int>(kinds_.size()); }
  Smoothing kind(int label) const { return kinds_.at(label - 1); }
  const std::vector<Smoothing>& kinds() const { return kinds_; }

  std::vector<int> oriented() const { return labels_with(Smoothing::oriented); }
  std::vector<int> unoriented() const { return labels_with(Smoothing::unoriented); }
  std::vector<int> erased() const { return labels_with(Smoothing::erased); }
  bool has_unoriented() const;
  bool has_erased() const;

  std::string to_string() const;

  friend bool operator==(const PartialState& a, const PartialState& b) {
    return a.kinds_ == b.kinds_;
  }

private:
  std::vector<int> labels_with(Smoothing k) const;
  std::vector<Smoothing> kinds_;
};

// Gauss diagram of a virtual knot: a cyclic double-occurrence word read from
// a basepoint.  Chords carry labels 1..n; the word stores each label twice.
// Canonical labelling orders chords by first endpoint from the basepoint.
class ChordDiagram {
public:
  ChordDiagram() = default;  // empty diagram (n = 0)
  explicit ChordDiagram(std::vector<int> word,
                        std::vector<std::string> annotations = {});

  int chord_count() const { return n_; }
  const std::vector<int>& word() const { return word_; }
  // Positions (0-based word indices) of a chord's endpoints, first < second.
  std::pair<int, int> endpoints(int label) const;
  // Per-occurrence annotation suffixes, carried opaquely ("" when absent).
  const std::vector<std::string>& annotations() const { return annotations_; }

  bool is_canonical() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const ChordDiagram& a, const ChordDiagram& b) {
    return !(a == b);
  }

private:
  int n_ = 0;
  std::vector<int> word_;
  std::vector<std::string> annotations_;  // empty, or one entry per letter
  std::vector<int> first_pos_, second_pos_;
};

// Whitespace-separated labels, arbitrary positive naming, optional opaque
// suffixes after the digits ("3+o").  Labels are re-mapped to 1..n by first
// occurrence, so the result is always canonically labelled.
ChordDiagram parse_gauss_code(const std::string& text);

std::string serialize(const ChordDiagram& d);

// Relabels chords 1..n in order of first endpoint from the basepoint.
ChordDiagram canonical_relabel(const ChordDiagram& d);

struct MirrorResult {
  ChordDiagram diagram;    // the reflected diagram, canonically labelled
  std::vector<int> tau;    // tau[i-1] = label of chord i's image
};

// Reflection: the double-occurrence word is reversed and relabelled.
MirrorResult mirror(const ChordDiagram& d);

enum class CoverFlavor { first, second };

struct DoubleCover {
  ChordDiagram diagram;           // 2k-1 chords, canonically labelled
  PartialState state;             // always all-oriented
  std::vector<int> source_chord;  // cover label -> original chord label
};

// Cuts the surface along the unoriented band of chord j and rebuilds the
// diagram word for the chosen sheet gluing.  Erased chords of s are dropped,
// every remaining chord contributes two cover chords except j itself.
DoubleCover double_cover(const ChordDiagram& d, const PartialState& s, int j,
                         CoverFlavor flavor);

// Keeps only the chords selected by `keep` (1-based labels), relabelling the
// remainder canonically.  label_map[i-1] is chord i's new label, 0 if gone.
struct Restriction {
  ChordDiagram diagram;
  std::vector<int> label_map;
};
Restriction restrict_to(const ChordDiagram& d, const std::vector<bool>& keep);

// Diagram of the 3-strand pretzel knot with twist counts p, q, r (signs do
// not affect the underlying chord diagram).  At most one parameter may be
// even, none may be zero.
struct PretzelDiagram {
  ChordDiagram diagram;
  std::vector<int> strand;  // strand[label-1] in {0,1,2}: which twist region
};
PretzelDiagram pretzel_diagram(std::int64_t p, std::int64_t q, std::int64_t r);
ChordDiagram pretzel_code(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace gauss_spectra
