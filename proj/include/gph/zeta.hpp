/*
 * zeta.hpp - cycle counting and the zeta series of a graph.
 *
 * For a graph with adjacency matrix M, the number of based closed walks of
 * length m is trace(M^m).  Packaging those counts c_m into
 * exp(sum_m c_m u^m / m) gives a power series with integer-friendly
 * structure: it is the reciprocal of det(I - u M), so the reversed
 * characteristic polynomial is a complete, finite fingerprint of the series.
 * All arithmetic is exact (GMP integers and rationals); no floating point
 * enters anywhere.
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

// Dense square integer matrix, row major.
struct AdjMatrix {
    std::size_t order = 0;
    std::vector<mpz_class> entries;

    mpz_class& at(std::size_t i, std::size_t j) { return entries[i * order + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i * order + j]; }
};

// entry(i, j) = number of arcs from node i to node j (input order).
AdjMatrix adjacency(const Graph& g);

AdjMatrix matmul(const AdjMatrix& a, const AdjMatrix& b);

// Number of based closed walks of length m (m >= 1), via matrix powers.
mpz_class cycle_count(const Graph& g, unsigned m);

// The same number by direct enumeration of closed arc sequences.  Slow and
// deliberately primitive; it exists as an independent cross-check for
// cycle_count and the evidence battery.
mpz_class cycle_count_bruteforce(const Graph& g, unsigned m);

// Coefficients of det(x I - M), ascending in x; the result always has
// exactly order + 1 entries and leading coefficient 1.  Faddeev-LeVerrier
// with exact integer divisions.
std::vector<mpz_class> char_poly(const AdjMatrix& m);

// det(I - u M), ascending in u: the degree-reversal of char_poly.  Trailing
// zero coefficients are kept so the vector always has order + 1 entries.
std::vector<mpz_class> det_poly(const AdjMatrix& m);

struct ZetaData {
    std::vector<mpz_class> cycle_counts;  // c_1 .. c_degree
    std::vector<mpz_class> det;           // det(I - u M), ascending
    std::vector<mpq_class> series;        // z_0 .. z_degree of exp(sum c_m u^m / m)
};

// Everything above in one pass, with the series computed from the counts by
// the exponential recurrence k z_k = sum_{j=1}^{k} c_j z_{k-j}.
ZetaData zeta_data(const Graph& g, unsigned degree);

// True iff the two graphs have the same zeta series; decided exactly by
// comparing det(I - u M) for both (equal determinants give equal series and
// conversely, since the series determines its reciprocal polynomial).
bool zeta_equal(const Graph& x, const Graph& y);

// "x^4-4*x^2" style rendering; var is "x" or "u", highest degree first when
// descending, constant term first otherwise.  Zero polynomial prints "0".
std::string poly_string(const std::vector<mpz_class>& ascending_coeffs, const std::string& var,
                        bool descending);

}  // namespace gph
