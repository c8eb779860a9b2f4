#include "gauss_spectra/smoothing.hpp"

#include <cassert>
#include <numeric>
#include <string>
#include <utility>

#include "gauss_spectra/int_polynomial.hpp"
#include "gauss_spectra/skew_spectra.hpp"

namespace gauss_spectra {
namespace {

void require_partition(const ChordDiagram& d, const PartialState& s) {
  if (s.size() != d.chord_count())
    throw PartitionMismatch("state describes " + std::to_string(s.size()) +
                            " chords, diagram has " + std::to_string(d.chord_count()));
}

// Corner layout: smoothed endpoint with rank r (by circle position) owns
// corners 2r (before it) and 2r + 1 (after it).  Circle arcs join corner
// 2r + 1 to corner 2(r+1 mod 2k); bands join corners across the chord.
// Fills scratch.band_to and returns k, the number of smoothed chords.
int build_corners(const ChordDiagram& d, const PartialState& s,
                  BoundaryScratch& scratch) {
  const auto& word = d.word();
  const int len = static_cast<int>(word.size());
  scratch.rank.assign(len, -1);
  int ends = 0;
  for (int t = 0; t < len; ++t)
    if (s.kind(word[t]) != Smoothing::erased) scratch.rank[t] = ends++;

  scratch.band_to.assign(2 * ends, -1);
  for (int i = 1; i <= d.chord_count(); ++i) {
    const Smoothing kind = s.kind(i);
    if (kind == Smoothing::erased) continue;
    auto [alpha, beta] = d.endpoints(i);
    const int a = scratch.rank[alpha], b = scratch.rank[beta];
    if (kind == Smoothing::oriented) {
      scratch.band_to[2 * a] = 2 * b + 1;
      scratch.band_to[2 * b + 1] = 2 * a;
      scratch.band_to[2 * a + 1] = 2 * b;
      scratch.band_to[2 * b] = 2 * a + 1;
    } else {
      scratch.band_to[2 * a] = 2 * b;
      scratch.band_to[2 * b] = 2 * a;
      scratch.band_to[2 * a + 1] = 2 * b + 1;
      scratch.band_to[2 * b + 1] = 2 * a + 1;
    }
  }
  return ends / 2;
}

int circle_step(int corner, int ends) {
  // From the corner after an endpoint, follow the circle to the corner
  // before the next endpoint; and symmetrically backwards.
  if (corner % 2 == 1) return 2 * (((corner - 1) / 2 + 1) % ends);
  return 2 * ((corner / 2 + ends - 1) % ends) + 1;
}

int all_oriented_spectral_count(const ChordDiagram& d) {
  IntMatrix a = skew_adjacency(interlacement_graph(d));
  return m0(char_poly(a)) + 1;
}

std::vector<bool> non_erased_mask(const ChordDiagram& d, const PartialState& s) {
  std::vector<bool> keep(d.chord_count());
  for (int i = 1; i <= d.chord_count(); ++i)
    keep[i - 1] = s.kind(i) != Smoothing::erased;
  return keep;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int t = i + 1; t < k; ++t) c[t] = c[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

BoundaryTrace boundary_count_oracle(const ChordDiagram& d, const PartialState& s) {
  require_partition(d, s);
  BoundaryScratch scratch;
  const int k = build_corners(d, s, scratch);
  BoundaryTrace trace;
  if (k == 0) {
    trace.component_count = 1;
    trace.components.emplace_back();
    return trace;
  }

  // Each corner belongs to exactly one band side; identify it for the trace.
  const int ends = 2 * k;
  std::vector<SideCrossing> side_of(2 * ends);
  for (int i = 1; i <= d.chord_count(); ++i) {
    if (s.kind(i) == Smoothing::erased) continue;
    auto [alpha, beta] = d.endpoints(i);
    const int a = scratch.rank[alpha], b = scratch.rank[beta];
    const int zero_end = (s.kind(i) == Smoothing::oriented) ? 2 * b + 1 : 2 * b;
    const int one_end = (s.kind(i) == Smoothing::oriented) ? 2 * b : 2 * b + 1;
    side_of[2 * a] = side_of[zero_end] = SideCrossing{i, 0, 1};
    side_of[2 * a + 1] = side_of[one_end] = SideCrossing{i, 1, -1};
  }

  std::vector<char> visited(2 * ends, 0);
  for (int c0 = 0; c0 < 2 * ends; ++c0) {
    if (visited[c0]) continue;
    std::vector<SideCrossing> component;
    int x = c0;
    do {
      visited[x] = 1;
      component.push_back(side_of[x]);
      const int y = scratch.band_to[x];
      visited[y] = 1;
      x = circle_step(y, ends);
    } while (x != c0);
    trace.components.push_back(std::move(component));
  }
  trace.component_count = static_cast<int>(trace.components.size());
  return trace;
}

int boundary_component_count(const ChordDiagram& d, const PartialState& s,
                             BoundaryScratch& scratch) {
  require_partition(d, s);
  const int k = build_corners(d, s, scratch);
  if (k == 0) return 1;
  const int ends = 2 * k;
  scratch.visited.assign(2 * ends, 0);
  int count = 0;
  for (int c0 = 0; c0 < 2 * ends; ++c0) {
    if (scratch.visited[c0]) continue;
    ++count;
    int x = c0;
    do {
      scratch.visited[x] = 1;
      const int y = scratch.band_to[x];
      scratch.visited[y] = 1;
      x = circle_step(y, ends);
    } while (x != c0);
  }
  return count;
}

int loop_count_rlcp(const ChordDiagram& d, const PartialState& s) {
  require_partition(d, s);
  std::vector<int> unoriented = s.unoriented();
  if (unoriented.empty()) {
    Restriction r = restrict_to(d, non_erased_mask(d, s));
    return all_oriented_spectral_count(r.diagram);
  }
  const int j = unoriented.front();
  DoubleCover cover = double_cover(d, s, j, CoverFlavor::first);
  const int doubled = all_oriented_spectral_count(cover.diagram);
#ifndef NDEBUG
  DoubleCover other = double_cover(d, s, j, CoverFlavor::second);
  assert(all_oriented_spectral_count(other.diagram) == doubled);
#endif
  if (doubled % 2 != 0)
    throw OddCoverCount("double cover of chord " + std::to_string(j) + " yields " +
                        std::to_string(doubled) + " loops");
  return doubled / 2;
}

int loop_count_zlcp(const ChordDiagram& d, const PartialState& s) {
  require_partition(d, s);
  if (s.has_erased()) throw HasErasedChords("full state required");
  IntMatrix a = adjacency_matrix(interlacement_graph(d));
  for (int i = 1; i <= d.chord_count(); ++i)
    if (s.kind(i) == Smoothing::unoriented) a(i - 1, i - 1) = 1;
  return nullity_z2(a) + 1;
}

std::vector<IntVector> kernel_basis_theta(const ChordDiagram& d,
                                          const PartialState& s) {
  require_partition(d, s);
  if (s.has_unoriented()) throw HasUnoriented("no-unoriented state required");
  Restriction r = restrict_to(d, non_erased_mask(d, s));
  BoundaryTrace trace = boundary_count_oracle(d, s);
  const int k = r.diagram.chord_count();
  std::vector<IntVector> thetas;
  thetas.reserve(trace.components.size());
  for (const auto& component : trace.components) {
    IntVector theta = IntVector::Zero(k);
    for (const SideCrossing& c : component)
      theta[r.label_map[c.chord - 1] - 1] += c.sigma;
    thetas.push_back(std::move(theta));
  }
  return thetas;
}

std::vector<IntVector> kernel_basis(const ChordDiagram& d, const PartialState& s) {
  std::vector<IntVector> thetas = kernel_basis_theta(d, s);
  const int k = thetas.empty() ? 0 : static_cast<int>(thetas.front().size());
  const int count = static_cast<int>(thetas.size());

  IntMatrix all(k, count);
  for (int c = 0; c < count; ++c) all.col(c) = thetas[c];
  const int target = rank_q(all);

  for (int drop = 0; drop < count; ++drop) {
    IntMatrix rest(k, count - 1);
    for (int c = 0, out = 0; c < count; ++c)
      if (c != drop) rest.col(out++) = thetas[c];
    if (rank_q(rest) == target) {
      thetas.erase(thetas.begin() + drop);
      return thetas;
    }
  }
  return thetas;
}

void for_each_state(int n, int m, int j,
                    const std::function<void(const PartialState&)>& fn) {
  if (n < 0 || m < 0 || j < 0 || j > m || m > n)
    throw OutOfRange("need 0 <= j <= m <= n, got n=" + std::to_string(n) +
                     " m=" + std::to_string(m) + " j=" + std::to_string(j));
  std::vector<int> smoothed(m);
  std::iota(smoothed.begin(), smoothed.end(), 0);
  std::vector<Smoothing> kinds(n);
  do {
    std::vector<int> twist(j);
    std::iota(twist.begin(), twist.end(), 0);
    do {
      kinds.assign(n, Smoothing::erased);
      for (int idx : smoothed) kinds[idx] = Smoothing::oriented;
      for (int t : twist) kinds[smoothed[t]] = Smoothing::unoriented;
      fn(PartialState(kinds));
    } while (next_combination(twist, m));
  } while (next_combination(smoothed, n));
}

std::vector<PartialState> enumerate_states(int n, int m, int j) {
  std::vector<PartialState> out;
  for_each_state(n, m, j, [&](const PartialState& s) { out.push_back(s); });
  return out;
}

void for_each_full_state(int n, const std::function<void(const PartialState&)>& fn) {
  if (n < 0 || n > 25) throw OutOfRange("full-state sweep supports 0 <= n <= 25");
  std::vector<Smoothing> kinds(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    for (int i = 0; i < n; ++i)
      kinds[i] = (mask >> i) & 1 ? Smoothing::unoriented : Smoothing::oriented;
    fn(PartialState(kinds));
  }
}

void for_each_partial_state(int n, const std::function<void(const PartialState&)>& fn) {
  if (n < 0 || n > 20) throw OutOfRange("partial-state sweep supports 0 <= n <= 20");
  static constexpr Smoothing choices[3] = {Smoothing::oriented, Smoothing::unoriented,
                                           Smoothing::erased};
  std::vector<int> digits(n, 0);
  std::vector<Smoothing> kinds(n);
  for (;;) {
    for (int i = 0; i < n; ++i) kinds[i] = choices[digits[i]];
    fn(PartialState(kinds));
    int pos = 0;
    while (pos < n && digits[pos] == 2) digits[pos++] = 0;
    if (pos == n) return;
    ++digits[pos];
  }
}

}  // namespace gauss_spectra
