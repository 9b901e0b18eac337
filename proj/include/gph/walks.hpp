/*
 * walks.hpp - eventually periodic one-sided infinite walks.
 *
 * A walk is an infinite composable arc sequence a_0 a_1 a_2 ...; the ones
 * represented here are the eventually periodic ones, stored as a finite
 * preamble plus a repeating block.  Two presentations can denote the same
 * infinite sequence, so there is a normal form (shortest preamble, primitive
 * period) and all comparisons go through it.  Distances live in the dyadic
 * ultrametric d(w, v) = 2^-(length of the longest common source path).
 */

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gph/graph.hpp"

namespace gph {

class EPWalk {
public:
    // pre may be empty; per must be nonempty, closed, and composable with
    // the preamble.  Throws std::invalid_argument otherwise.
    EPWalk(std::shared_ptr<const Graph> host, std::vector<std::string> pre,
           std::vector<std::string> per);

    const Graph& host() const { return *host_; }
    const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
    const std::vector<std::string>& pre() const { return pre_; }
    const std::vector<std::string>& per() const { return per_; }

    // Source node of the walk (where arc 0 starts).
    const std::string& start() const;

    // Arc at position k of the unrolled infinite sequence.
    const std::string& arc_at(std::size_t k) const;

private:
    std::shared_ptr<const Graph> host_;
    std::vector<std::string> pre_;
    std::vector<std::string> per_;
};

// Same infinite sequence presented with the shortest preamble and a
// primitive (non-repeating) period.  Idempotent; two walks denote the same
// sequence iff their normal forms have identical pre and per vectors.
EPWalk normalize(const EPWalk& w);

// Drop the first arc; result is normalized.
EPWalk shift(const EPWalk& w);

// The first n arcs as a path from start().
Path source_path(const EPWalk& w, std::size_t n);

// A dyadic distance value: 0 or 2^-e with e >= 0.  Exact.
class WalkDistance {
public:
    static WalkDistance zero() { return WalkDistance(true, 0); }
    static WalkDistance pow2(long neg_exponent) { return WalkDistance(false, neg_exponent); }

    bool is_zero() const { return zero_; }
    // Defined only when nonzero: the value is 2^-exponent.
    long exponent() const { return e_; }

    // This distance multiplied by 2^k (k may be negative).
    WalkDistance scaled(long k) const { return zero_ ? *this : pow2(e_ - k); }

    bool operator==(const WalkDistance& o) const {
        return zero_ == o.zero_ && (zero_ || e_ == o.e_);
    }
    bool operator!=(const WalkDistance& o) const { return !(*this == o); }
    bool operator<(const WalkDistance& o) const {
        if (zero_) return !o.zero_;
        if (o.zero_) return false;
        return e_ > o.e_;
    }
    bool operator<=(const WalkDistance& o) const { return *this < o || *this == o; }

    // "0", "1", "1/2", "1/4", ...  (exact, arbitrary exponent).
    std::string str() const;

private:
    WalkDistance(bool z, long e) : zero_(z), e_(e) {}
    bool zero_;
    long e_;
};

// Ultrametric distance; both walks must live on the same host graph
// (compared structurally).  Decided exactly: the unrolled sequences are
// compared far enough that agreement implies equality of normal forms.
WalkDistance distance(const EPWalk& w, const EPWalk& v);

// True iff the first length(alpha) arcs of w form exactly alpha (start node
// included); a length-0 alpha tests only the start node.
bool cylinder_contains(const Path& alpha, const EPWalk& w);

// All purely periodic walks whose period is a based closed arc sequence of
// length n, in deterministic enumeration order, one per based closed walk
// (not normalized: the period is kept as found, even if imprimitive).
std::vector<EPWalk> periodic_walks(const std::shared_ptr<const Graph>& host, std::size_t n);

// Sliding block code induced by f: arc_graph_n(X, n) -> Y.  Position k of
// the image reads the window w[k..k+n] through f.  For n = 0 this is just
// the arc map of f.  The result lives on codomain(f) and is normalized.
EPWalk apply_block_code(const GraphMorphism& f, unsigned n, const EPWalk& w);

}  // namespace gph
