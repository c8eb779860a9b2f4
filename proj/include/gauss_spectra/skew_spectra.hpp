#pragma once

#include "gauss_spectra/int_polynomial.hpp"
#include "gauss_spectra/linear_ordered_graph.hpp"

namespace gauss_spectra {

// det(xI - m) by the Samuelson-Berkowitz iteration: division-free, exact for
// any square integer matrix.  Small sizes run on 128-bit scalars, larger
// ones on arbitrary precision.
IntPolynomial char_poly(const IntMatrix& m);

// Rank over the rationals via fraction-free Bareiss elimination with full
// pivoting.  Works for any (possibly rectangular) integer matrix.
int rank_q(const IntMatrix& m);

// Kernel dimension over the rationals; m must be square.
int nullity_q(const IntMatrix& m);

// Kernel dimension of m reduced mod 2; m must be square.
int nullity_z2(const IntMatrix& m);

// Entry (u, v), 1-based, of adj(xI - m): the (v, u) cofactor of xI - m,
// computed exactly over the polynomial ring.
IntPolynomial adjugate_entry(const IntMatrix& m, int u, int v);

// Characteristic polynomial of g's skew adjacency after adding edge {u, v},
// assembled from smaller pieces instead of an n x n determinant.  Requires
// v = u + 1 and u, v non-adjacent; HypothesisViolated otherwise.
IntPolynomial poly_add_edge_formula(const LinearlyOrderedGraph& g, int u, int v);

// Same polynomial obtained as char_poly(skew(disjoint_union / join /
// coalesce)), but assembled from the factors' polynomials.
IntPolynomial poly_union_formula(const LinearlyOrderedGraph& g1,
                                 const LinearlyOrderedGraph& g2);
IntPolynomial poly_join_formula(const LinearlyOrderedGraph& g1,
                                const LinearlyOrderedGraph& g2);
IntPolynomial poly_coalescence_formula(const LinearlyOrderedGraph& g1, int u,
                                       const LinearlyOrderedGraph& g2, int v);

// Closed forms for the ordered path (edges {i, i+1}) and complete graph.
// n = 0 gives the constant 1 (empty determinant); negative n is OutOfRange.
IntPolynomial path_poly(int n);
IntPolynomial complete_poly(int n);

namespace detail {
// Exposed for cross-validation in tests.
IntPolynomial char_poly_int128(const IntMatrix& m);
IntPolynomial char_poly_bigint(const IntMatrix& m);
}  // namespace detail

}  // namespace gauss_spectra
