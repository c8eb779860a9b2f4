#include "gauss_spectra/pretzel.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "gauss_spectra/smoothing.hpp"

namespace gauss_spectra {
namespace {

int sgn_pow(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

struct Abc {
  long long a, b, c;  // a is the even parameter when one exists
};

Abc symmetrized(const PretzelParams& params) {
  long long vals[3] = {params.P(), params.Q(), params.R()};
  for (int i = 1; i < 3; ++i)
    if (vals[i] % 2 == 0) std::swap(vals[0], vals[i]);
  return {vals[0], vals[1], vals[2]};
}

bool all_odd(const PretzelParams& params) {
  return params.P() % 2 != 0 && params.Q() % 2 != 0 && params.R() % 2 != 0;
}

void require_m(int m) {
  if (m < 1) throw OutOfRange("m must be at least 1, got " + std::to_string(m));
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

// Lexicographic rank of m-subsets of {0..n-1}, inverted.
std::vector<int> unrank_combination(long long rank, int n, int m) {
  std::vector<int> c(m);
  int x = 0;
  for (int i = 0; i < m; ++i) {
    for (;;) {
      long long below = binomial(n - x - 1, m - i - 1).convert_to<long long>();
      if (rank < below) break;
      rank -= below;
      ++x;
    }
    c[i] = x++;
  }
  return c;
}

long long count_single_loop_states(const ChordDiagram& d, int m, int j,
                                   long long subset_begin, long long subset_end) {
  const int n = d.chord_count();
  BoundaryScratch scratch;
  std::vector<Smoothing> kinds(n);
  std::vector<int> smoothed = unrank_combination(subset_begin, n, m);
  long long hits = 0;
  for (long long s = subset_begin; s < subset_end; ++s) {
    std::vector<int> twist(j);
    for (int t = 0; t < j; ++t) twist[t] = t;
    do {
      kinds.assign(n, Smoothing::erased);
      for (int idx : smoothed) kinds[idx] = Smoothing::oriented;
      for (int t : twist) kinds[smoothed[t]] = Smoothing::unoriented;
      if (boundary_component_count(d, PartialState(kinds), scratch) == 1) ++hits;
    } while (next_combination(twist, m));
    next_combination(smoothed, n);
  }
  return hits;
}

}  // namespace

PretzelParams pretzel_params(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p == 0 || q == 0 || r == 0) throw ZeroParameter("twist counts must be nonzero");
  int evens = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
  if (evens > 1)
    throw InvalidPretzel("at most one twist count may be even for a knot");
  return PretzelParams{p, q, r};
}

Int n0_closed(const PretzelParams& params, int m) {
  require_m(m);
  const auto [a, b, c] = symmetrized(params);
  if (m > a + b + c) return 0;
  if (all_odd(params)) {
    if (m != 2) return 0;
    return Int(a) * b + Int(b) * c + Int(c) * a;
  }
  if (m % 2 != 0) return 0;
  Int total = 0;
  for (int k = 0; k <= m / 2; ++k) {
    total += binomial(b, 2 * k) * binomial(c, m - 2 * k);
    total += Int(a) * binomial(b, 2 * k) * binomial(c, m - 1 - 2 * k);
    total += Int(a) * binomial(c, 2 * k) * binomial(b, m - 1 - 2 * k);
  }
  return total;
}

Int n1_closed(const PretzelParams& params, int m) {
  require_m(m);
  const auto [a, b, c] = symmetrized(params);
  if (m > a + b + c) return 0;
  if (all_odd(params)) {
    switch (m) {
      case 1:
        return Int(a) + b + c;
      case 2:
        return 2 * (Int(a) * b + Int(b) * c + Int(c) * a);
      case 3:
        return 3 * Int(a) * b * c + 2 * binomial(a, 2) * (b + c) +
               2 * binomial(b, 2) * (a + c) + 2 * binomial(c, 2) * (a + b);
      default:
        return 0;
    }
  }
  if (m == 1) return Int(a) + b + c;
  Int total = 0;
  if (m % 2 == 0) {
    for (int k = 0; k <= (m - 2) / 2; ++k)
      total += Int(a) * (binomial(b, 2 * k) * binomial(c, m - 1 - 2 * k) +
                         binomial(b, m - 1 - 2 * k) * binomial(c, 2 * k));
  } else {
    for (int k = 0; k <= (m - 1) / 2; ++k)
      total += Int(a) * binomial(b, 2 * k) * binomial(c, m - 1 - 2 * k);
    // marked chord plus one parallel survivor: a*(a-1) ordered choices
    for (int k = 0; k <= (m - 3) / 2; ++k)
      total += Int(a) * (a - 1) *
               (binomial(b, 2 * k) * binomial(c, m - 2 - 2 * k) +
                binomial(b, m - 2 - 2 * k) * binomial(c, 2 * k));
  }
  for (int k = 0; k <= m - 2; ++k) {
    total += Int(a) * b * binomial(b - 1, k) * binomial(c, m - 2 - k);
    total += Int(a) * c * binomial(c - 1, k) * binomial(b, m - 2 - k);
  }
  for (int k = 0; k <= (m - 1) / 2; ++k) {
    total += Int(b) * binomial(c, 2 * k) * binomial(b - 1, m - 1 - 2 * k);
    total += Int(c) * binomial(b, 2 * k) * binomial(c - 1, m - 1 - 2 * k);
  }
  return total;
}

CensusRow census(const PretzelParams& params, int m, int j, int threads) {
  if (m < 0 || j < 0 || j > m)
    throw OutOfRange("need 0 <= j <= m, got m=" + std::to_string(m) +
                     " j=" + std::to_string(j));
  CensusRow row;
  row.params = params;
  row.m = m;
  row.j = j;
  if (m >= 1 && j <= 1)
    row.closed_form = (j == 0) ? n0_closed(params, m) : n1_closed(params, m);

  const long long n = params.P() + params.Q() + params.R();
  if (m > n) {
    row.brute_force = 0;
  } else {
    ChordDiagram d = pretzel_code(params.p, params.q, params.r);
    const long long subsets = binomial(n, m).convert_to<long long>();
    threads = static_cast<int>(
        std::max<long long>(1, std::min<long long>(threads, subsets)));
    if (threads == 1) {
      row.brute_force = count_single_loop_states(d, m, j, 0, subsets);
    } else {
      std::vector<long long> partial(threads, 0);
      std::vector<std::thread> pool;
      pool.reserve(threads);
      for (int w = 0; w < threads; ++w) {
        const long long lo = subsets * w / threads;
        const long long hi = subsets * (w + 1) / threads;
        pool.emplace_back([&, w, lo, hi] {
          partial[w] = count_single_loop_states(d, m, j, lo, hi);
        });
      }
      for (auto& t : pool) t.join();
      for (long long part : partial) row.brute_force += part;
    }
  }

  row.agrees = !row.closed_form || *row.closed_form == row.brute_force;
  return row;
}

LinearlyOrderedGraph lemma_family_graph(CoverFamily which, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw OutOfRange("region sizes must be nonnegative");
  switch (which) {
    case CoverFamily::glued_cliques:
      return coalesce(complete_graph(alpha + 1), 1, complete_graph(beta + 1), 1);
    case CoverFamily::glued_cliques_doubled: {
      LinearlyOrderedGraph half =
          lemma_family_graph(CoverFamily::glued_cliques, alpha, beta);
      return coalesce(half, 1, half, 1);
    }
    case CoverFamily::join_union_doubled: {
      LinearlyOrderedGraph half =
          join(edgeless_graph(2),
               disjoint_union(complete_graph(alpha), complete_graph(beta)));
      return coalesce(half, 2, half, 1);
    }
    case CoverFamily::offset_glued_doubled: {
      if (alpha < 1) throw OutOfRange("first region needs at least one chord");
      LinearlyOrderedGraph half = coalesce(complete_graph(alpha + 1), alpha + 1,
                                           complete_graph(beta + 1), 1);
      return coalesce(half, 1, half, 1);
    }
  }
  throw OutOfRange("unknown cover family");
}

LemmaValues lemma_values(CoverFamily which, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw OutOfRange("region sizes must be nonnegative");
  const Int a = alpha, b = beta;
  const int sa = sgn_pow(alpha), sb = sgn_pow(beta);
  const int sab = sgn_pow(alpha + beta);
  switch (which) {
    case CoverFamily::glued_cliques:
      return {Int(1 - sab) / 2,
              (1 + sa + sb + 2 * a + 2 * b + sab * (1 + 2 * a + 2 * b)) / 4};
    case CoverFamily::glued_cliques_doubled: {
      const int s2ab = sgn_pow(2 * alpha + beta), sa2b = sgn_pow(alpha + 2 * beta);
      Int at0 = Int(1 + sa) * (1 + sb) *
                ((1 - sa) * (1 + sb) + (1 + sa) * (1 - sb)) / 8;
      Int deriv = (8 * a * (1 + sb) * (1 + s2ab) +
                   (1 + sa) * (Int(1 + sa) * (1 + sb) * (1 + sb) +
                               8 * b * (1 + sa2b))) /
                  16;
      return {at0, deriv};
    }
    case CoverFamily::join_union_doubled:
      return {Int(0), Int(3) * (sab - 1) * (sab - 1) / 4};
    case CoverFamily::offset_glued_doubled:
      return {Int(0), (Int(-2) + 4 * sb + 2 * sab + 8 * a + 8 * b) / 4};
  }
  throw OutOfRange("unknown cover family");
}

}  // namespace gauss_spectra
