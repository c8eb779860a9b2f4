#include "gauss_spectra/skew_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gauss_spectra {
namespace {

using int128 = __int128;

Int to_Int(int128 v) {
  bool neg = v < 0;
  unsigned __int128 u =
      neg ? static_cast<unsigned __int128>(-(v + 1)) + 1u : static_cast<unsigned __int128>(v);
  Int r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Int(-r) : r;
}

Int to_Int(const Int& v) { return v; }

double max_abs_entry(const IntMatrix& m) {
  double b = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      b = std::max(b, std::abs(static_cast<double>(m(i, j))));
  return b;
}

// Samuelson-Berkowitz: iteratively extends the characteristic polynomial of
// the leading principal block by one row/column using Toeplitz products.
// Returns coefficients leading-first (always monic).
template <typename Scalar>
std::vector<Scalar> berkowitz(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Scalar> v{Scalar(1)};
  std::vector<Scalar> t, w, power, next;
  for (int k = 0; k < n; ++k) {
    t.assign(k + 2, Scalar(0));
    t[0] = Scalar(1);
    t[1] = -Scalar(m(k, k));
    if (k > 0) {
      w.resize(k);
      for (int i = 0; i < k; ++i) w[i] = Scalar(m(i, k));
      for (int i = 2; i <= k + 1; ++i) {
        Scalar acc(0);
        for (int j = 0; j < k; ++j) acc += Scalar(m(k, j)) * w[j];
        t[i] = -acc;
        if (i <= k) {
          next.assign(k, Scalar(0));
          for (int r = 0; r < k; ++r) {
            Scalar s(0);
            for (int c = 0; c < k; ++c) s += Scalar(m(r, c)) * w[c];
            next[r] = s;
          }
          w.swap(next);
        }
      }
    }
    std::vector<Scalar> vp(k + 2, Scalar(0));
    for (int i = 0; i < k + 2; ++i) {
      const int jlo = std::max(0, i - (k + 1));
      const int jhi = std::min(i, k);
      for (int j = jlo; j <= jhi; ++j) vp[i] += t[i - j] * v[j];
    }
    v.swap(vp);
  }
  return v;
}

template <typename Scalar>
IntPolynomial char_poly_with(const IntMatrix& m) {
  auto leading_first = berkowitz<Scalar>(m);
  const std::size_t n = leading_first.size();
  std::vector<Int> constant_first(n);
  for (std::size_t i = 0; i < n; ++i) constant_first[n - 1 - i] = to_Int(leading_first[i]);
  return IntPolynomial(std::move(constant_first));
}

// 128-bit intermediates suffice when every Toeplitz product stays far below
// 2^127.  Crude Hadamard-style bound: |t_i| <= (B n)^n and the partial
// characteristic coefficients are below 2^n (B sqrt(n))^n, so the products
// are bounded by exp(n (ln 2 + ln(Bn) + ln(B sqrt n))).  2^127 ~ exp(88).
bool int128_safe_charpoly(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n <= 1) return true;
  double b = std::max(max_abs_entry(m), 1.0);
  double s = n * (std::log(2.0) + std::log(std::max(b * n, 2.0)) +
                  std::log(std::max(b * std::sqrt(static_cast<double>(n)), 2.0)));
  return s < 80.0;
}

// Bareiss with full pivoting; entries after step k are (k+1)-minors of the
// permuted input, so the update quotient by the previous pivot is exact.
template <typename Scalar>
int bareiss_rank(const IntMatrix& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<Scalar> a(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i * cols + j] = Scalar(m(i, j));

  int rank = 0;
  Scalar prev(1);
  while (rank < rows && rank < cols) {
    int pi = -1, pj = -1;
    for (int i = rank; i < rows && pi < 0; ++i)
      for (int j = rank; j < cols; ++j)
        if (a[i * cols + j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != rank)
      for (int j = 0; j < cols; ++j) std::swap(a[pi * cols + j], a[rank * cols + j]);
    if (pj != rank)
      for (int i = 0; i < rows; ++i) std::swap(a[i * cols + pj], a[i * cols + rank]);
    for (int i = rank + 1; i < rows; ++i)
      for (int j = rank + 1; j < cols; ++j)
        a[i * cols + j] =
            (a[i * cols + j] * a[rank * cols + rank] - a[i * cols + rank] * a[rank * cols + j]) /
            prev;
    prev = a[rank * cols + rank];
    ++rank;
  }
  return rank;
}

bool int128_safe_rank(const IntMatrix& m) {
  const int n = static_cast<int>(std::min(m.rows(), m.cols()));
  if (n <= 1) return true;
  double b = std::max(max_abs_entry(m), 1.0);
  double s = 2.0 * n * std::log(std::max(b * std::sqrt(static_cast<double>(n)), 2.0));
  return s < 80.0;
}

// Fraction-free determinant over the polynomial ring, destroying `a`.
IntPolynomial poly_det(std::vector<IntPolynomial>& a, int n) {
  if (n == 0) return IntPolynomial::constant(1);
  IntPolynomial prev = IntPolynomial::constant(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i * n + k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return {};
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        IntPolynomial num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        auto quot = exact_quotient(num, prev);
        if (!quot) throw std::logic_error("fraction-free polynomial update not exact");
        a[i * n + j] = std::move(*quot);
      }
    prev = a[k * n + k];
  }
  IntPolynomial det = a[(n - 1) * n + (n - 1)];
  return sign < 0 ? -det : det;
}

void require_square(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw OutOfRange("matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + ", expected square");
}

}  // namespace

namespace detail {
IntPolynomial char_poly_int128(const IntMatrix& m) { return char_poly_with<int128>(m); }
IntPolynomial char_poly_bigint(const IntMatrix& m) { return char_poly_with<Int>(m); }
}  // namespace detail

IntPolynomial char_poly(const IntMatrix& m) {
  require_square(m);
  return int128_safe_charpoly(m) ? char_poly_with<int128>(m) : char_poly_with<Int>(m);
}

int rank_q(const IntMatrix& m) {
  return int128_safe_rank(m) ? bareiss_rank<int128>(m) : bareiss_rank<Int>(m);
}

int nullity_q(const IntMatrix& m) {
  require_square(m);
  return static_cast<int>(m.rows()) - rank_q(m);
}

int nullity_z2(const IntMatrix& m) {
  require_square(m);
  const int n = static_cast<int>(m.rows());
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * std::max(words, 1), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) & 1) rows[i * words + j / 64] ^= std::uint64_t(1) << (j % 64);

  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    const int w = col / 64;
    const std::uint64_t bit = std::uint64_t(1) << (col % 64);
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (rows[i * words + w] & bit) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int k = 0; k < words; ++k) std::swap(rows[piv * words + k], rows[rank * words + k]);
    for (int i = 0; i < n; ++i)
      if (i != rank && (rows[i * words + w] & bit))
        for (int k = 0; k < words; ++k) rows[i * words + k] ^= rows[rank * words + k];
    ++rank;
  }
  return n - rank;
}

IntPolynomial adjugate_entry(const IntMatrix& m, int u, int v) {
  require_square(m);
  const int n = static_cast<int>(m.rows());
  if (u < 1 || u > n || v < 1 || v > n)
    throw OutOfRange("adjugate entry (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") of a " + std::to_string(n) + "-dimensional matrix");
  // adj(X)_{uv} is the (v, u) cofactor of X = xI - m.
  std::vector<IntPolynomial> minor;
  minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int r = 0; r < n; ++r) {
    if (r == v - 1) continue;
    for (int c = 0; c < n; ++c) {
      if (c == u - 1) continue;
      if (r == c)
        minor.push_back(IntPolynomial{Int(-m(r, c)), Int(1)});
      else
        minor.push_back(IntPolynomial::constant(Int(-m(r, c))));
    }
  }
  IntPolynomial det = poly_det(minor, n - 1);
  return ((u + v) % 2 == 0) ? det : -det;
}

IntPolynomial poly_add_edge_formula(const LinearlyOrderedGraph& g, int u, int v) {
  const int n = g.vertex_count();
  if (u < 1 || u > n || v < 1 || v > n)
    throw OutOfRange("vertices (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (v != u + 1)
    throw HypothesisViolated("requires consecutive labels, got " + std::to_string(u) +
                             " and " + std::to_string(v));
  if (g.adjacent(u, v))
    throw HypothesisViolated("vertices " + std::to_string(u) + " and " +
                             std::to_string(v) + " are already adjacent");
  IntMatrix a = skew_adjacency(g);
  IntPolynomial theta_uv = adjugate_entry(a, u, v);
  IntPolynomial theta_vu = adjugate_entry(a, v, u);
  LinearlyOrderedGraph without = delete_vertex(delete_vertex(g, v), u);
  return char_poly(skew_adjacency(without)) + char_poly(a) + theta_uv - theta_vu;
}

IntPolynomial poly_union_formula(const LinearlyOrderedGraph& g1,
                                 const LinearlyOrderedGraph& g2) {
  return char_poly(skew_adjacency(g1)) * char_poly(skew_adjacency(g2));
}

IntPolynomial poly_join_formula(const LinearlyOrderedGraph& g1,
                                const LinearlyOrderedGraph& g2) {
  const IntPolynomial x = IntPolynomial::variable();
  IntPolynomial pg = char_poly(skew_adjacency(g1));
  IntPolynomial ph = char_poly(skew_adjacency(g2));
  IntPolynomial cone_g = char_poly(skew_adjacency(join(complete_graph(1), g1)));
  IntPolynomial cone_h = char_poly(skew_adjacency(join(complete_graph(1), g2)));
  return pg * ph + (cone_g - x * pg) * (cone_h - x * ph);
}

IntPolynomial poly_coalescence_formula(const LinearlyOrderedGraph& g1, int u,
                                       const LinearlyOrderedGraph& g2, int v) {
  if (u < 1 || u > g1.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(u) + " in the first graph");
  if (v < 1 || v > g2.vertex_count())
    throw OutOfRange("no vertex " + std::to_string(v) + " in the second graph");
  const IntPolynomial x = IntPolynomial::variable();
  IntPolynomial pg = char_poly(skew_adjacency(g1));
  IntPolynomial pg_u = char_poly(skew_adjacency(delete_vertex(g1, u)));
  IntPolynomial ph_v = char_poly(skew_adjacency(delete_vertex(g2, v)));
  IntPolynomial ph_prom = char_poly(skew_adjacency(promote(g2, v)));
  return pg * ph_v + pg_u * ph_prom - x * pg_u * ph_v;
}

IntPolynomial path_poly(int n) {
  if (n < 0) throw OutOfRange("negative path length");
  IntPolynomial prev2 = IntPolynomial::constant(1);   // empty path
  if (n == 0) return prev2;
  const IntPolynomial x = IntPolynomial::variable();
  IntPolynomial prev1 = x;
  for (int k = 2; k <= n; ++k) {
    IntPolynomial cur = x * prev1 + prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

IntPolynomial complete_poly(int n) {
  if (n < 0) throw OutOfRange("negative vertex count");
  // (1/2)((x-1)^n + (x+1)^n): binomial terms with k = n mod 2.
  std::vector<Int> c(n + 1, Int(0));
  for (int k = n % 2; k <= n; k += 2) c[k] = binomial(n, k);
  return IntPolynomial(std::move(c));
}

}  // namespace gauss_spectra
