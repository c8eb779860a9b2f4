#include "gauss_spectra/chord_diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gauss_spectra {

PartialState PartialState::parse(const std::string& text) {
  std::vector<Smoothing> kinds;
  kinds.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'o': kinds.push_back(Smoothing::oriented); break;
      case 'u': kinds.push_back(Smoothing::unoriented); break;
      case 'x': kinds.push_back(Smoothing::erased); break;
      default:
        throw MalformedState(std::string("unexpected character '") + c +
                             "' (state strings use o, u, x)");
    }
  }
  return PartialState(std::move(kinds));
}

std::vector<int> PartialState::labels_with(Smoothing k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (kinds_[i] == k) out.push_back(i + 1);
  return out;
}

bool PartialState::has_unoriented() const {
  return std::find(kinds_.begin(), kinds_.end(), Smoothing::unoriented) != kinds_.end();
}

bool PartialState::has_erased() const {
  return std::find(kinds_.begin(), kinds_.end(), Smoothing::erased) != kinds_.end();
}

std::string PartialState::to_string() const {
  std::string s;
  s.reserve(kinds_.size());
  for (auto k : kinds_)
    s += k == Smoothing::oriented ? 'o' : (k == Smoothing::unoriented ? 'u' : 'x');
  return s;
}

ChordDiagram::ChordDiagram(std::vector<int> word, std::vector<std::string> annotations)
    : word_(std::move(word)), annotations_(std::move(annotations)) {
  if (word_.size() % 2 != 0)
    throw MalformedCode("odd number of letters");
  n_ = static_cast<int>(word_.size() / 2);
  if (!annotations_.empty() && annotations_.size() != word_.size())
    throw MalformedCode("annotation list does not match word length");
  first_pos_.assign(n_, -1);
  second_pos_.assign(n_, -1);
  for (int pos = 0; pos < static_cast<int>(word_.size()); ++pos) {
    int label = word_[pos];
    if (label < 1 || label > n_)
      throw MalformedCode("label " + std::to_string(label) + " outside 1.." +
                          std::to_string(n_));
    if (first_pos_[label - 1] < 0)
      first_pos_[label - 1] = pos;
    else if (second_pos_[label - 1] < 0)
      second_pos_[label - 1] = pos;
    else
      throw MalformedCode("label " + std::to_string(label) + " occurs more than twice");
  }
  for (int i = 0; i < n_; ++i)
    if (second_pos_[i] < 0)
      throw MalformedCode("label " + std::to_string(i + 1) + " occurs only once");
}

std::pair<int, int> ChordDiagram::endpoints(int label) const {
  if (label < 1 || label > n_)
    throw OutOfRange("no chord " + std::to_string(label));
  return {first_pos_[label - 1], second_pos_[label - 1]};
}

bool ChordDiagram::is_canonical() const {
  int next = 1;
  std::vector<bool> seen(n_, false);
  for (int label : word_) {
    if (!seen[label - 1]) {
      if (label != next) return false;
      seen[label - 1] = true;
      ++next;
    }
  }
  return true;
}

namespace {

// First-occurrence relabelling of an arbitrary double-occurrence word over
// any integer alphabet.  Returns the new word; `out_map` (keyed by old value)
// receives the assigned labels when non-null.
std::vector<int> relabel_first_occurrence(const std::vector<int>& word,
                                          std::map<int, int>* out_map = nullptr) {
  std::map<int, int> map;
  int next = 1;
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) {
    auto [it, inserted] = map.try_emplace(v, next);
    if (inserted) ++next;
    out.push_back(it->second);
  }
  if (out_map) *out_map = std::move(map);
  return out;
}

}  // namespace

ChordDiagram parse_gauss_code(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<long long> raw;
  std::vector<std::string> annotations;
  bool any_note = false;
  while (in >> token) {
    std::size_t i = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    if (i == 0)
      throw MalformedCode("token '" + token + "' does not start with a label");
    long long value = 0;
    try {
      value = std::stoll(token.substr(0, i));
    } catch (const std::out_of_range&) {
      throw MalformedCode("label in '" + token + "' is out of range");
    }
    if (value <= 0)
      throw MalformedCode("labels must be positive, got '" + token + "'");
    raw.push_back(value);
    annotations.push_back(token.substr(i));
    if (!annotations.back().empty()) any_note = true;
  }
  std::map<long long, int> map;
  int next = 1;
  std::vector<int> word;
  word.reserve(raw.size());
  for (long long v : raw) {
    auto [it, inserted] = map.try_emplace(v, next);
    if (inserted) ++next;
    word.push_back(it->second);
  }
  if (!any_note) annotations.clear();
  return ChordDiagram(std::move(word), std::move(annotations));
}

std::string serialize(const ChordDiagram& d) {
  std::ostringstream os;
  const auto& notes = d.annotations();
  for (std::size_t i = 0; i < d.word().size(); ++i) {
    if (i) os << ' ';
    os << d.word()[i];
    if (!notes.empty()) os << notes[i];
  }
  return os.str();
}

ChordDiagram canonical_relabel(const ChordDiagram& d) {
  return ChordDiagram(relabel_first_occurrence(d.word()), d.annotations());
}

MirrorResult mirror(const ChordDiagram& d) {
  std::vector<int> reversed(d.word().rbegin(), d.word().rend());
  std::vector<std::string> notes(d.annotations().rbegin(), d.annotations().rend());
  std::map<int, int> map;
  std::vector<int> word = relabel_first_occurrence(reversed, &map);
  std::vector<int> tau(d.chord_count());
  for (int i = 1; i <= d.chord_count(); ++i) tau[i - 1] = map.at(i);
  return {ChordDiagram(std::move(word), std::move(notes)), std::move(tau)};
}

Restriction restrict_to(const ChordDiagram& d, const std::vector<bool>& keep) {
  if (static_cast<int>(keep.size()) != d.chord_count())
    throw PartitionMismatch("keep mask length " + std::to_string(keep.size()) +
                            " for a diagram with " +
                            std::to_string(d.chord_count()) + " chords");
  std::vector<int> sub;
  sub.reserve(d.word().size());
  for (int label : d.word())
    if (keep[label - 1]) sub.push_back(label);
  std::map<int, int> map;
  std::vector<int> word = relabel_first_occurrence(sub, &map);
  std::vector<int> label_map(d.chord_count(), 0);
  for (const auto& [old_label, new_label] : map) label_map[old_label - 1] = new_label;
  return {ChordDiagram(std::move(word)), std::move(label_map)};
}

namespace {

struct CoverLetter {
  int label;
  bool second;  // second occurrence of the chord in the base word
  bool barred;
};

// Reverse a segment and toggle bars.
std::vector<CoverLetter> barred_reverse(const std::vector<CoverLetter>& w) {
  std::vector<CoverLetter> out(w.rbegin(), w.rend());
  for (auto& l : out) l.barred = !l.barred;
  return out;
}

}  // namespace

DoubleCover double_cover(const ChordDiagram& d, const PartialState& s, int j,
                         CoverFlavor flavor) {
  if (s.size() != d.chord_count())
    throw PartitionMismatch("state length " + std::to_string(s.size()) +
                            " for a diagram with " +
                            std::to_string(d.chord_count()) + " chords");
  if (j < 1 || j > d.chord_count() || s.kind(j) != Smoothing::unoriented)
    throw NotUnoriented("chord " + std::to_string(j) +
                        " is not unoriented in this state");

  // Letters of the word restricted to non-erased chords.
  std::vector<CoverLetter> letters;
  std::vector<bool> seen(d.chord_count(), false);
  for (int label : d.word()) {
    if (s.kind(label) == Smoothing::erased) continue;
    letters.push_back({label, seen[label - 1], false});
    seen[label - 1] = true;
  }

  std::size_t a = 0, b = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].label == j) (letters[i].second ? b : a) = i;
  }

  std::vector<CoverLetter> w1(letters.begin(), letters.begin() + a);
  std::vector<CoverLetter> w2(letters.begin() + a + 1, letters.begin() + b);
  std::vector<CoverLetter> w3(letters.begin() + b + 1, letters.end());
  CoverLetter aj = letters[a], bj = letters[b];
  CoverLetter aj_bar = {j, false, true}, bj_bar = {j, true, true};

  std::vector<CoverLetter> cover;
  cover.reserve(2 * letters.size() - 2);
  auto append = [&cover](const std::vector<CoverLetter>& seg) {
    cover.insert(cover.end(), seg.begin(), seg.end());
  };
  if (flavor == CoverFlavor::first) {
    append(w1);
    append(barred_reverse(w2));
    cover.push_back(aj_bar);
    append(barred_reverse(w1));
    append(barred_reverse(w3));
    append(w2);
    cover.push_back(bj);
    append(w3);
  } else {
    append(w1);
    cover.push_back(aj);
    append(w2);
    append(barred_reverse(w1));
    append(barred_reverse(w3));
    cover.push_back(bj_bar);
    append(barred_reverse(w2));
    append(w3);
  }

  // Pair the letters into cover chords.  Oriented chords lift to two parallel
  // copies (plain and barred); unoriented chords lift with the sheets swapped
  // at one endpoint; chord j contributes a single chord joining the sheets.
  std::vector<int> word;
  word.reserve(cover.size());
  std::map<std::pair<int, int>, int> key_to_label;
  std::vector<int> source;
  for (const auto& l : cover) {
    int variant;
    if (l.label == j)
      variant = 0;
    else if (s.kind(l.label) == Smoothing::oriented)
      variant = l.barred ? 1 : 0;
    else
      variant = (l.barred != l.second) ? 1 : 0;
    auto [it, inserted] = key_to_label.try_emplace({l.label, variant},
                                  static_cast<int>(key_to_label.size()) + 1);
    if (inserted) source.push_back(l.label);
    word.push_back(it->second);
  }

  DoubleCover result;
  result.diagram = ChordDiagram(std::move(word));
  result.state = PartialState::all_oriented(result.diagram.chord_count());
  result.source_chord = std::move(source);
  return result;
}

namespace {

// Twist-region crossing lattice for the pretzel traversal.  Ports are the
// four corners of a crossing; a strand entering at one corner leaves at the
// diagonally opposite one.
enum Port { NW = 0, NE = 1, SW = 2, SE = 3 };

constexpr Port diagonal(Port p) {
  switch (p) {
    case NW: return SE;
    case NE: return SW;
    case SW: return NE;
    default: return NW;
  }
}

}  // namespace

PretzelDiagram pretzel_diagram(std::int64_t p, std::int64_t q, std::int64_t r) {
  const std::int64_t t64[3] = {p < 0 ? -p : p, q < 0 ? -q : q, r < 0 ? -r : r};
  if (p == 0 || q == 0 || r == 0)
    throw ZeroParameter("twist counts must be nonzero");
  int even = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
  if (even > 1)
    throw InvalidPretzel("two or more even twist counts close up into a link");

  int t[3], offset[3], n = 0;
  for (int i = 0; i < 3; ++i) {
    t[i] = static_cast<int>(t64[i]);
    offset[i] = n;
    n += t[i];
  }

  // to[c][port] = (crossing, port) reached along the connecting arc.
  std::vector<std::array<std::pair<int, int>, 4>> to(n);
  auto connect = [&to](int c1, Port p1, int c2, Port p2) {
    to[c1][p1] = {c2, p2};
    to[c2][p2] = {c1, p1};
  };
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k + 1 < t[i]; ++k) {
      connect(offset[i] + k, SW, offset[i] + k + 1, NW);
      connect(offset[i] + k, SE, offset[i] + k + 1, NE);
    }
  int top[3], bottom[3];
  for (int i = 0; i < 3; ++i) {
    top[i] = offset[i];
    bottom[i] = offset[i] + t[i] - 1;
  }
  connect(top[0], NE, top[1], NW);
  connect(top[1], NE, top[2], NW);
  connect(top[2], NE, top[0], NW);  // closing arc; the basepoint lives here
  connect(bottom[0], SE, bottom[1], SW);
  connect(bottom[1], SE, bottom[2], SW);
  connect(bottom[2], SE, bottom[0], SW);

  std::vector<int> visits;
  visits.reserve(2 * n);
  int cross = top[0];
  Port entry = NW;
  do {
    visits.push_back(cross);
    auto [next_cross, next_port] = to[cross][diagonal(entry)];
    cross = next_cross;
    entry = static_cast<Port>(next_port);
  } while (!(cross == top[0] && entry == NW));

  if (visits.size() != static_cast<std::size_t>(2 * n))
    throw std::logic_error("pretzel traversal did not close into a knot");

  std::map<int, int> map;
  std::vector<int> word = relabel_first_occurrence(visits, &map);
  std::vector<int> strand(n, 0);
  for (const auto& [crossing, label] : map) {
    int region = crossing < offset[1] ? 0 : (crossing < offset[2] ? 1 : 2);
    strand[label - 1] = region;
  }
  return {ChordDiagram(std::move(word)), std::move(strand)};
}

ChordDiagram pretzel_code(std::int64_t p, std::int64_t q, std::int64_t r) {
  return pretzel_diagram(p, q, r).diagram;
}

}  // namespace gauss_spectra
