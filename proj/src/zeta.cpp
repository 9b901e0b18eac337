#include "gph/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace gph {

AdjMatrix adjacency(const Graph& g) {
    AdjMatrix m;
    m.order = g.node_count();
    m.entries.assign(m.order * m.order, mpz_class(0));
    for (const auto& a : g.arcs()) m.at(g.node_pos(a.src), g.node_pos(a.tgt)) += 1;
    return m;
}

AdjMatrix matmul(const AdjMatrix& a, const AdjMatrix& b) {
    if (a.order != b.order) throw std::invalid_argument("matmul: order mismatch");
    AdjMatrix c;
    c.order = a.order;
    c.entries.assign(c.order * c.order, mpz_class(0));
    for (std::size_t i = 0; i < a.order; ++i)
        for (std::size_t k = 0; k < a.order; ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.order; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

static mpz_class trace(const AdjMatrix& m) {
    mpz_class t = 0;
    for (std::size_t i = 0; i < m.order; ++i) t += m.at(i, i);
    return t;
}

mpz_class cycle_count(const Graph& g, unsigned m) {
    if (m == 0) throw std::invalid_argument("cycle_count: length must be positive");
    AdjMatrix a = adjacency(g);
    AdjMatrix p = a;
    for (unsigned i = 1; i < m; ++i) p = matmul(p, a);
    return trace(p);
}

mpz_class cycle_count_bruteforce(const Graph& g, unsigned m) {
    if (m == 0) throw std::invalid_argument("cycle_count_bruteforce: length must be positive");
    mpz_class count = 0;
    // Depth-first over arc sequences; nothing clever on purpose.
    auto walk = [&](auto&& self, const std::string& base, const std::string& at,
                    unsigned left) -> void {
        if (left == 0) {
            if (at == base) count += 1;
            return;
        }
        for (std::size_t ai : g.out_arcs(at)) self(self, base, g.arcs()[ai].tgt, left - 1);
    };
    for (const auto& n : g.nodes()) walk(walk, n, n, m);
    return count;
}

std::vector<mpz_class> char_poly(const AdjMatrix& m) {
    const std::size_t n = m.order;
    std::vector<mpz_class> coeff(n + 1, mpz_class(0));  // ascending: coeff[k] * x^k
    coeff[n] = 1;
    if (n == 0) return coeff;
    // Faddeev-LeVerrier: M_1 = A, a_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + a_{n-k} I.
    AdjMatrix mk;
    mk.order = n;
    mk.entries.assign(n * n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        mk = matmul(m, mk);
        mpz_class t = trace(mk);
        mpz_class ak;  // a_{n-k} = -t / k, exact by construction
        mpz_class rem;
        mpz_tdiv_qr_ui(ak.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        if (rem != 0) throw std::logic_error("char_poly: inexact division");
        ak = -ak;
        coeff[n - k] = ak;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ak;
    }
    return coeff;
}

std::vector<mpz_class> det_poly(const AdjMatrix& m) {
    // det(I - u M) = u^n det((1/u) I - M) reverses the characteristic
    // coefficients: the u^k coefficient is the x^(n-k) one.
    std::vector<mpz_class> cp = char_poly(m);
    std::vector<mpz_class> d(cp.rbegin(), cp.rend());
    return d;
}

ZetaData zeta_data(const Graph& g, unsigned degree) {
    ZetaData z;
    AdjMatrix a = adjacency(g);
    AdjMatrix p = a;
    for (unsigned m = 1; m <= degree; ++m) {
        if (m > 1) p = matmul(p, a);
        z.cycle_counts.push_back(trace(p));
    }
    z.det = det_poly(a);
    z.series.assign(degree + 1, mpq_class(0));
    z.series[0] = 1;
    for (unsigned k = 1; k <= degree; ++k) {
        mpq_class acc = 0;
        for (unsigned j = 1; j <= k; ++j) acc += mpq_class(z.cycle_counts[j - 1]) * z.series[k - j];
        acc /= static_cast<unsigned long>(k);
        acc.canonicalize();
        z.series[k] = acc;
    }
    return z;
}

bool zeta_equal(const Graph& x, const Graph& y) {
    std::vector<mpz_class> dx = det_poly(adjacency(x));
    std::vector<mpz_class> dy = det_poly(adjacency(y));
    // Compare as polynomials: strip trailing zeros before comparing so that
    // padding from different node counts does not matter.
    while (!dx.empty() && dx.back() == 0) dx.pop_back();
    while (!dy.empty() && dy.back() == 0) dy.pop_back();
    return dx == dy;
}

std::string poly_string(const std::vector<mpz_class>& ascending_coeffs, const std::string& var,
                        bool descending) {
    struct Term {
        std::size_t deg;
        const mpz_class* c;
    };
    std::vector<Term> terms;
    for (std::size_t k = 0; k < ascending_coeffs.size(); ++k)
        if (ascending_coeffs[k] != 0) terms.push_back({k, &ascending_coeffs[k]});
    if (terms.empty()) return "0";
    if (descending) std::reverse(terms.begin(), terms.end());
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        mpz_class c = *t.c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? "-" : "+";
        }
        first = false;
        mpz_class mag = abs(c);
        if (t.deg == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += var;
            if (t.deg > 1) out += "^" + std::to_string(t.deg);
        }
    }
    return out;
}

}  // namespace gph
