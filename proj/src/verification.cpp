#include "gauss_spectra/verification.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "gauss_spectra/int_polynomial.hpp"
#include "gauss_spectra/linear_ordered_graph.hpp"
#include "gauss_spectra/pretzel.hpp"
#include "gauss_spectra/skew_spectra.hpp"
#include "gauss_spectra/smoothing.hpp"

namespace gauss_spectra {
namespace {

constexpr int kMaxExamples = 8;

void fail(FamilyResult& family, const std::string& text) {
  ++family.failures;
  if (static_cast<int>(family.examples.size()) < kMaxExamples)
    family.examples.push_back(text);
}

void merge_into(FamilyResult& dst, const FamilyResult& src) {
  dst.checks += src.checks;
  dst.failures += src.failures;
  for (const auto& e : src.examples)
    if (static_cast<int>(dst.examples.size()) < kMaxExamples)
      dst.examples.push_back(e);
}

std::string graph_text(const LinearlyOrderedGraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges={";
  for (const auto& [u, v] : g.edges()) out << '(' << u << ',' << v << ')';
  out << '}';
  return out.str();
}

IntMatrix skew_of(const ChordDiagram& d) {
  return skew_adjacency(interlacement_graph(d));
}

void match_rec(std::vector<int>& word, int next_label,
               const std::function<void(const ChordDiagram&)>& fn) {
  int first = -1;
  for (int t = 0; t < static_cast<int>(word.size()); ++t)
    if (word[t] == 0) {
      first = t;
      break;
    }
  if (first < 0) {
    fn(ChordDiagram(word));
    return;
  }
  for (int second = first + 1; second < static_cast<int>(word.size()); ++second) {
    if (word[second] != 0) continue;
    word[first] = word[second] = next_label;
    match_rec(word, next_label + 1, fn);
    word[first] = word[second] = 0;
  }
}

struct SweepAccum {
  FamilyResult agree{"count-agreement"};
  FamilyResult cover{"double-cover"};
  FamilyResult zero{"zero-root-multiplicity"};
  FamilyResult kernel{"kernel-basis"};
};

void sweep_diagram(const ChordDiagram& d, SweepAccum& acc, BoundaryScratch& scratch) {
  const int n = d.chord_count();
  for_each_partial_state(n, [&](const PartialState& s) {
    const int boundary = boundary_component_count(d, s, scratch);
    const int spectral = loop_count_rlcp(d, s);
    ++acc.agree.checks;
    if (spectral != boundary)
      fail(acc.agree, serialize(d) + " state " + s.to_string() + ": spectral " +
                          std::to_string(spectral) + " vs boundary " +
                          std::to_string(boundary));
    if (!s.has_erased()) {
      const int parity = loop_count_zlcp(d, s);
      ++acc.agree.checks;
      if (parity != boundary)
        fail(acc.agree, serialize(d) + " state " + s.to_string() + ": GF(2) " +
                            std::to_string(parity) + " vs boundary " +
                            std::to_string(boundary));
    }

    const std::vector<int> unoriented = s.unoriented();
    if (unoriented.empty()) {
      std::vector<bool> keep(n);
      for (int i = 1; i <= n; ++i) keep[i - 1] = s.kind(i) != Smoothing::erased;
      Restriction r = restrict_to(d, keep);
      IntMatrix a = skew_of(r.diagram);
      const int nullity = nullity_q(a);
      ++acc.zero.checks;
      if (m0(char_poly(a)) != nullity)
        fail(acc.zero, serialize(d) + " state " + s.to_string());

      std::vector<IntVector> thetas = kernel_basis_theta(d, s);
      bool ok = static_cast<int>(thetas.size()) == boundary &&
                static_cast<int>(thetas.size()) == nullity + 1;
      for (const IntVector& theta : thetas)
        if (ok && !(a * theta).isZero()) ok = false;
      if (ok) {
        IntMatrix stack(r.diagram.chord_count(), static_cast<int>(thetas.size()));
        for (int c = 0; c < static_cast<int>(thetas.size()); ++c)
          stack.col(c) = thetas[c];
        ok = rank_q(stack) == nullity &&
             static_cast<int>(kernel_basis(d, s).size()) == nullity;
      }
      ++acc.kernel.checks;
      if (!ok) fail(acc.kernel, serialize(d) + " state " + s.to_string());
    } else {
      for (int j : unoriented) {
        for (CoverFlavor flavor : {CoverFlavor::first, CoverFlavor::second}) {
          DoubleCover cov = double_cover(d, s, j, flavor);
          const int doubled =
              boundary_component_count(cov.diagram, cov.state, scratch);
          ++acc.cover.checks;
          if (doubled != 2 * boundary)
            fail(acc.cover, serialize(d) + " state " + s.to_string() + " chord " +
                                std::to_string(j) + " flavor " +
                                (flavor == CoverFlavor::first ? "first" : "second") +
                                ": " + std::to_string(doubled) + " vs 2*" +
                                std::to_string(boundary));
          if (j == unoriented.front() && flavor == CoverFlavor::first) {
            IntMatrix a = skew_of(cov.diagram);
            ++acc.zero.checks;
            if (m0(char_poly(a)) != nullity_q(a))
              fail(acc.zero, serialize(d) + " state " + s.to_string() + " cover");
          }
        }
      }
    }
  });
}

void check_calculus_single(const LinearlyOrderedGraph& g, FamilyResult& family) {
  const int n = g.vertex_count();
  const IntPolynomial direct = char_poly(skew_adjacency(g));

  IntPolynomial sum;
  for (int j = 1; j <= n; ++j) sum += char_poly(skew_adjacency(delete_vertex(g, j)));
  ++family.checks;
  if (direct.derivative() != sum) fail(family, "derivative identity on " + graph_text(g));

  for (int u = 1; u < n; ++u) {
    if (g.adjacent(u, u + 1)) continue;
    const IntPolynomial target = char_poly(skew_adjacency(add_edge(g, u, u + 1)));
    ++family.checks;
    if (poly_add_edge_formula(g, u, u + 1) != target)
      fail(family, "add-edge at " + std::to_string(u) + " on " + graph_text(g));
    if (g.neighbors(u) == g.neighbors(u + 1)) {
      LinearlyOrderedGraph without = delete_vertex(delete_vertex(g, u + 1), u);
      ++family.checks;
      if (target != char_poly(skew_adjacency(without)) + direct)
        fail(family, "twin edge deletion at " + std::to_string(u) + " on " +
                         graph_text(g));
    }
  }
}

void check_calculus_pair(const LinearlyOrderedGraph& g1,
                         const LinearlyOrderedGraph& g2, FamilyResult& family,
                         bool all_coalescences) {
  ++family.checks;
  if (poly_union_formula(g1, g2) !=
      char_poly(skew_adjacency(disjoint_union(g1, g2))))
    fail(family, "union of " + graph_text(g1) + " and " + graph_text(g2));
  ++family.checks;
  if (poly_join_formula(g1, g2) != char_poly(skew_adjacency(join(g1, g2))))
    fail(family, "join of " + graph_text(g1) + " and " + graph_text(g2));
  const int u_hi = all_coalescences ? g1.vertex_count() : 1;
  const int v_hi = all_coalescences ? g2.vertex_count() : 1;
  for (int u = 1; u <= u_hi; ++u)
    for (int v = 1; v <= v_hi; ++v) {
      ++family.checks;
      if (poly_coalescence_formula(g1, u, g2, v) !=
          char_poly(skew_adjacency(coalesce(g1, u, g2, v))))
        fail(family, "coalescence (" + std::to_string(u) + "," + std::to_string(v) +
                         ") of " + graph_text(g1) + " and " + graph_text(g2));
    }
}

void for_each_graph(int n, const std::function<void(const LinearlyOrderedGraph&)>& fn) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    fn(LinearlyOrderedGraph(n, std::move(edges)));
  }
}

LinearlyOrderedGraph random_graph(std::mt19937& rng, int n) {
  std::bernoulli_distribution flip(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return LinearlyOrderedGraph(n, std::move(edges));
}

}  // namespace

void for_each_canonical_diagram(int n,
                                const std::function<void(const ChordDiagram&)>& fn) {
  if (n < 0 || n > 10) throw OutOfRange("diagram enumeration supports 0 <= n <= 10");
  std::vector<int> word(2 * n, 0);
  match_rec(word, 1, fn);
}

FamilyResult verify_diagram_codec(const VerifyOptions& options) {
  FamilyResult family{"diagram-codec"};
  for (int n = 0; n <= options.max_chords; ++n) {
    for_each_canonical_diagram(n, [&](const ChordDiagram& d) {
      ++family.checks;
      std::string why;
      if (!d.is_canonical()) {
        why = "not canonical";
      } else if (parse_gauss_code(serialize(d)) != d) {
        why = "serialize/parse round trip";
      } else if (canonical_relabel(d) != d) {
        why = "relabelling not idempotent";
      } else {
        std::ostringstream renamed;
        for (int label : d.word()) renamed << 7 * label + 1 << ' ';
        if (parse_gauss_code(renamed.str()) != d) why = "renamed labels";
      }
      if (why.empty()) {
        MirrorResult once = mirror(d);
        MirrorResult twice = mirror(once.diagram);
        if (twice.diagram != d) {
          why = "mirror not an involution";
        } else {
          for (int i = 1; i <= n; ++i)
            if (twice.tau[once.tau[i - 1] - 1] != i) {
              why = "mirror relabelling maps";
              break;
            }
        }
      }
      if (!why.empty()) fail(family, serialize(d) + ": " + why);
    });
  }
  return family;
}

FamilyResult verify_mirror_spectrum(const VerifyOptions& options) {
  FamilyResult family{"mirror-spectrum"};
  for (int n = 0; n <= options.max_chords; ++n) {
    for_each_canonical_diagram(n, [&](const ChordDiagram& d) {
      ++family.checks;
      if (char_poly(skew_of(d)) != char_poly(skew_of(mirror(d).diagram)))
        fail(family, serialize(d));
    });
  }
  return family;
}

std::vector<FamilyResult> verify_counting_sweep(const VerifyOptions& options) {
  std::vector<ChordDiagram> diagrams;
  for (int n = 0; n <= options.max_chords; ++n)
    for_each_canonical_diagram(n, [&](const ChordDiagram& d) { diagrams.push_back(d); });

  const int threads =
      std::max(1, std::min(options.threads, static_cast<int>(diagrams.size())));
  std::vector<SweepAccum> accums(threads);
  if (threads == 1) {
    BoundaryScratch scratch;
    for (const auto& d : diagrams) sweep_diagram(d, accums[0], scratch);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&accums, &diagrams, &next, w] {
        BoundaryScratch scratch;
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= diagrams.size()) return;
          sweep_diagram(diagrams[i], accums[w], scratch);
        }
      });
    for (auto& t : pool) t.join();
  }

  SweepAccum total;
  for (const auto& acc : accums) {
    merge_into(total.agree, acc.agree);
    merge_into(total.cover, acc.cover);
    merge_into(total.zero, acc.zero);
    merge_into(total.kernel, acc.kernel);
  }
  return {total.agree, total.cover, total.zero, total.kernel};
}

FamilyResult verify_random_matrices(const VerifyOptions& options) {
  FamilyResult family{"random-skew-matrices"};
  std::mt19937 rng(options.seed);
  std::uniform_int_distribution<int> dim(1, std::max(1, options.random_matrix_dim));
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int iter = 0; iter < options.random_matrices; ++iter) {
    const int n = dim(rng);
    IntMatrix a = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = entry(rng);
        a(j, i) = -a(i, j);
      }
    ++family.checks;
    if (m0(char_poly(a)) != nullity_q(a))
      fail(family, "random skew matrix, round " + std::to_string(iter));
  }
  return family;
}

FamilyResult verify_spectral_calculus(const VerifyOptions& options) {
  FamilyResult family{"spectral-calculus"};
  for (int n = 0; n <= options.max_graph_vertices; ++n)
    for_each_graph(n, [&](const LinearlyOrderedGraph& g) {
      check_calculus_single(g, family);
    });
  for (int n1 = 0; n1 <= options.max_graph_vertices; ++n1)
    for_each_graph(n1, [&](const LinearlyOrderedGraph& g1) {
      for (int n2 = 0; n1 + n2 <= options.max_graph_vertices; ++n2)
        for_each_graph(n2, [&](const LinearlyOrderedGraph& g2) {
          check_calculus_pair(g1, g2, family, true);
        });
    });

  std::mt19937 rng(options.seed + 1);
  std::uniform_int_distribution<int> size(1, 8);
  for (int iter = 0; iter < options.random_graphs; ++iter) {
    check_calculus_single(random_graph(rng, size(rng)), family);
    const int n1 = std::uniform_int_distribution<int>(1, 7)(rng);
    const int n2 = std::uniform_int_distribution<int>(1, 8 - n1)(rng);
    LinearlyOrderedGraph g1 = random_graph(rng, n1);
    LinearlyOrderedGraph g2 = random_graph(rng, n2);
    check_calculus_pair(g1, g2, family, false);
  }
  return family;
}

FamilyResult verify_closed_forms(const VerifyOptions& options) {
  (void)options;
  FamilyResult family{"closed-forms"};
  for (int n = 1; n <= 12; ++n) {
    IntPolynomial path_direct = char_poly(skew_adjacency(path_graph(n)));
    ++family.checks;
    if (path_poly(n) != path_direct) fail(family, "path closed form, n=" + std::to_string(n));
    IntPolynomial complete_direct = char_poly(skew_adjacency(complete_graph(n)));
    ++family.checks;
    if (complete_poly(n) != complete_direct)
      fail(family, "complete closed form, n=" + std::to_string(n));
    // det = +-P(0): 1 for even n, 0 for odd n
    ++family.checks;
    if (complete_direct.coeff(0) != ((n % 2 == 0) ? 1 : 0))
      fail(family, "complete determinant, n=" + std::to_string(n));
  }
  ++family.checks;
  if (path_poly(1) != IntPolynomial({0, 1}) || path_poly(2) != IntPolynomial({1, 0, 1}))
    fail(family, "path initial polynomials");

  for (CoverFamily which :
       {CoverFamily::glued_cliques, CoverFamily::glued_cliques_doubled,
        CoverFamily::join_union_doubled, CoverFamily::offset_glued_doubled}) {
    for (int alpha = 1; alpha <= 5; ++alpha)
      for (int beta = 1; beta <= 5; ++beta) {
        IntPolynomial direct =
            char_poly(skew_adjacency(lemma_family_graph(which, alpha, beta)));
        LemmaValues values = lemma_values(which, alpha, beta);
        ++family.checks;
        if (direct(0) != values.at_zero ||
            direct.derivative()(0) != values.derivative_at_zero)
          fail(family, "cover family " + std::to_string(static_cast<int>(which)) +
                           " at alpha=" + std::to_string(alpha) +
                           " beta=" + std::to_string(beta));
      }
  }
  return family;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.families.push_back(verify_diagram_codec(options));
  report.families.push_back(verify_mirror_spectrum(options));
  for (auto& family : verify_counting_sweep(options))
    report.families.push_back(std::move(family));
  report.families.push_back(verify_random_matrices(options));
  report.families.push_back(verify_spectral_calculus(options));
  report.families.push_back(verify_closed_forms(options));
  return report;
}

}  // namespace gauss_spectra
