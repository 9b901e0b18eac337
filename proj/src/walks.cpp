#include "gph/walks.hpp"

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gph/functors.hpp"

namespace gph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

EPWalk::EPWalk(std::shared_ptr<const Graph> host, std::vector<std::string> pre,
               std::vector<std::string> per)
    : host_(std::move(host)), pre_(std::move(pre)), per_(std::move(per)) {
    if (!host_) fail("walk: missing host graph");
    if (per_.empty()) fail("walk: period must be nonempty");
    auto check_chain = [&](const std::vector<std::string>& arcs, const char* what) {
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (!host_->has_arc(arcs[i])) fail(std::string("walk: unknown arc '") + arcs[i] + "'");
            if (i > 0 && host_->source(arcs[i]) != host_->target(arcs[i - 1]))
                fail(std::string("walk: ") + what + " breaks at '" + arcs[i] + "'");
        }
    };
    check_chain(pre_, "preamble");
    check_chain(per_, "period");
    if (host_->target(per_.back()) != host_->source(per_.front()))
        fail("walk: period is not closed");
    if (!pre_.empty() && host_->target(pre_.back()) != host_->source(per_.front()))
        fail("walk: preamble does not reach the period");
}

const std::string& EPWalk::start() const {
    return host_->source(pre_.empty() ? per_.front() : pre_.front());
}

const std::string& EPWalk::arc_at(std::size_t k) const {
    if (k < pre_.size()) return pre_[k];
    return per_[(k - pre_.size()) % per_.size()];
}

EPWalk normalize(const EPWalk& w) {
    std::vector<std::string> pre = w.pre();
    std::vector<std::string> per = w.per();
    // Primitive period: cut to the shortest prefix whose repetition gives
    // the block.
    for (std::size_t d = 1; d <= per.size(); ++d) {
        if (per.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < per.size() && ok; ++i) ok = per[i] == per[i % d];
        if (ok) {
            per.resize(d);
            break;
        }
    }
    // Shortest preamble: while the preamble ends with what the period also
    // ends with, that last arc can be absorbed by rotating the period.
    while (!pre.empty() && pre.back() == per.back()) {
        pre.pop_back();
        per.insert(per.begin(), per.back());
        per.pop_back();
    }
    return EPWalk(w.host_ptr(), std::move(pre), std::move(per));
}

EPWalk shift(const EPWalk& w) {
    std::vector<std::string> pre = w.pre();
    std::vector<std::string> per = w.per();
    if (!pre.empty()) {
        pre.erase(pre.begin());
    } else {
        per.push_back(per.front());
        per.erase(per.begin());
    }
    return normalize(EPWalk(w.host_ptr(), std::move(pre), std::move(per)));
}

Path source_path(const EPWalk& w, std::size_t n) {
    Path p;
    p.start = w.start();
    p.arcs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) p.arcs.push_back(w.arc_at(k));
    return p;
}

std::string WalkDistance::str() const {
    if (zero_) return "0";
    if (e_ <= 0) return mpz_class(mpz_class(1) << static_cast<unsigned long>(-e_)).get_str();
    return "1/" + mpz_class(mpz_class(1) << static_cast<unsigned long>(e_)).get_str();
}

WalkDistance distance(const EPWalk& w, const EPWalk& v) {
    if (w.host() != v.host()) fail("distance: walks live on different graphs");
    EPWalk nw = normalize(w);
    EPWalk nv = normalize(v);
    if (nw.pre() == nv.pre() && nw.per() == nv.per()) return WalkDistance::zero();
    if (nw.start() != nv.start()) return WalkDistance::pow2(0);
    // Distinct normal forms must disagree within preamble lengths plus one
    // common period.
    std::size_t bound = nw.pre().size() + nv.pre().size() +
                        std::lcm(nw.per().size(), nv.per().size());
    for (std::size_t k = 0; k < bound; ++k)
        if (nw.arc_at(k) != nv.arc_at(k)) return WalkDistance::pow2(static_cast<long>(k) + 1);
    throw std::logic_error("distance: normal forms differ but sequences agree");
}

bool cylinder_contains(const Path& alpha, const EPWalk& w) {
    if (alpha.start != w.start()) return false;
    for (std::size_t k = 0; k < alpha.arcs.size(); ++k)
        if (alpha.arcs[k] != w.arc_at(k)) return false;
    return true;
}

std::vector<EPWalk> periodic_walks(const std::shared_ptr<const Graph>& host, std::size_t n) {
    if (!host) fail("periodic_walks: missing host graph");
    if (n == 0) fail("periodic_walks: length must be positive");
    std::vector<EPWalk> out;
    std::vector<std::string> seq;
    const Graph& g = *host;
    auto walk = [&](auto&& self, const std::string& base, const std::string& at,
                    std::size_t left) -> void {
        if (left == 0) {
            if (at == base) out.emplace_back(host, std::vector<std::string>{}, seq);
            return;
        }
        for (std::size_t ai : g.out_arcs(at)) {
            seq.push_back(g.arcs()[ai].id);
            self(self, base, g.arcs()[ai].tgt, left - 1);
            seq.pop_back();
        }
    };
    for (const auto& node : g.nodes()) walk(walk, node, node, n);
    return out;
}

EPWalk apply_block_code(const GraphMorphism& f, unsigned n, const EPWalk& w) {
    // Iterated arc graphs of the host, with arcs-by-endpoints lookup for the
    // levels where endpoints determine the arc (all levels >= 1).
    std::vector<Graph> level;
    level.push_back(w.host());
    for (unsigned j = 1; j <= n; ++j) level.push_back(arc_graph(level.back()));
    if (f.domain() != level[n])
        fail("apply_block_code: domain of '" + f.name() + "' is not the level-" +
             std::to_string(n) + " arc graph of the walk's host");
    std::vector<std::map<std::pair<std::string, std::string>, std::string>> by_ends(n + 2);
    for (unsigned j = 2; j <= n + 1; ++j)
        for (const auto& a : level[j - 1].arcs())
            by_ends[j].emplace(std::make_pair(a.src, a.tgt), a.id);

    // ids[k] holds the position-k node id at the current level.
    const std::size_t count = w.pre().size() + w.per().size();
    std::size_t width = count + n + 2;
    std::vector<std::string> ids(width);
    ids[0] = w.start();
    for (std::size_t k = 1; k < width; ++k) ids[k] = w.host().target(w.arc_at(k - 1));
    for (unsigned j = 1; j <= n + 1; ++j) {
        std::vector<std::string> next(width - 1);
        for (std::size_t k = 0; k + 1 < width; ++k) {
            if (j == 1)
                next[k] = w.arc_at(k);
            else
                next[k] = by_ends[j].at({ids[k], ids[k + 1]});
        }
        ids = std::move(next);
        --width;
    }
    // ids[k] is now the arc of the level-n graph read by window k.
    std::vector<std::string> pre, per;
    for (std::size_t k = 0; k < w.pre().size(); ++k) pre.push_back(f.arc_image(ids[k]));
    for (std::size_t k = w.pre().size(); k < count; ++k) per.push_back(f.arc_image(ids[k]));
    auto cod = std::make_shared<const Graph>(f.codomain());
    return normalize(EPWalk(std::move(cod), std::move(pre), std::move(per)));
}

}  // namespace gph
