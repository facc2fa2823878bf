#include "rvar/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <climits>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "canonical_core.hpp"
#include "rvar/canonical.hpp"
#include "rvar/errors.hpp"

namespace rvar {
namespace {

constexpr int kMaxSlots = kMaxSearchOrder * (kMaxSearchOrder - 1) / 2;

struct EngineSetup {
    int n = 0;
    int kmin = 0;
    int mmax = 0;
    bool check_connectivity = false;
    bool exact_min = false;
    int slots = 0;
    uint8_t su[kMaxSlots] = {};
    uint8_t sv[kMaxSlots] = {};
    int partition_depth = 0;
    long long budget = -1;    // accepted-leaf cap, -1 = none
    double time_limit = 0.0;  // seconds, 0 = none
    long long lcm_all = 1;    // common denominator for index numerators
    long long recip[kMaxSearchOrder] = {};
};

EngineSetup make_setup(const SearchSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxSearchOrder)
        throw input_error("search: order must be within 1.." + std::to_string(kMaxSearchOrder));
    if (spec.k_min < 0 || spec.k_min > std::max(0, spec.n - 1))
        throw input_error("search: minimum-degree bound out of range");
    if (spec.m_max && (*spec.m_max < spec.k_min || *spec.m_max > spec.n - 1))
        throw input_error("search: maximum-degree bound out of range");
    if (spec.budget && *spec.budget < 0) throw input_error("search: negative budget");
    if (spec.time_limit_seconds < 0) throw input_error("search: negative time limit");
    if (spec.workers < 1) throw input_error("search: need at least one worker");

    EngineSetup es;
    es.n = spec.n;
    es.kmin = spec.k_min;
    es.mmax = spec.m_max.value_or(spec.n - 1);
    es.exact_min = spec.exact_min_degree;
    // minimum degree of (n-1)/2 or more forces connectivity; skip the scan
    es.check_connectivity = spec.connected_only && 2 * es.kmin < es.n - 1;
    int idx = 0;
    for (int u = 0; u < es.n; ++u)
        for (int v = u + 1; v < es.n; ++v) {
            es.su[idx] = uint8_t(u);
            es.sv[idx] = uint8_t(v);
            ++idx;
        }
    es.slots = idx;
    es.partition_depth = std::min(12, es.slots);
    es.budget = spec.budget.value_or(-1);
    es.time_limit = spec.time_limit_seconds;
    for (int d = 1; d < es.n; ++d) es.lcm_all = std::lcm(es.lcm_all, (long long)d);
    for (int d = 1; d < es.n; ++d) es.recip[d] = es.lcm_all / d;
    return es;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Depth-first walk over the include/exclude decisions for each vertex pair,
// pruning branches that cannot reach the minimum degree or that already
// exceed the maximum. Accepted leaves go to the sink.
template <typename Sink>
struct Walker {
    const EngineSetup& es;
    Sink& sink;
    std::atomic<bool>& stop;
    std::atomic<long long>& accepted_total;
    Clock::time_point t0;

    uint32_t rows[16];
    int deg[16];
    int rem[16];
    long long pending = 0;
    long long until_check = 0;

    Walker(const EngineSetup& setup, Sink& s, std::atomic<bool>& st,
           std::atomic<long long>& total, Clock::time_point start)
        : es(setup), sink(s), stop(st), accepted_total(total), t0(start) {}

    void flush() {
        if (pending == 0) return;
        long long total = accepted_total.fetch_add(pending, std::memory_order_relaxed) + pending;
        pending = 0;
        if (es.budget >= 0 && total >= es.budget) stop.store(true, std::memory_order_relaxed);
    }

    void note_leaf() {
        ++pending;
        // exact budgets flush every leaf; otherwise batch to keep the shared
        // counter off the hot path
        if (es.budget >= 0) {
            flush();
            return;
        }
        if (--until_check <= 0) {
            until_check = 8192;
            flush();
            if (es.time_limit > 0 && seconds_since(t0) > es.time_limit)
                stop.store(true, std::memory_order_relaxed);
        }
    }

    bool connected() const {
        uint32_t seen = 1u, frontier = 1u;
        while (frontier != 0) {
            uint32_t next = 0;
            for (uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (1u << es.n) - 1u;
    }

    void leaf() {
        if (es.exact_min) {
            int mn = es.n;
            for (int v = 0; v < es.n; ++v) mn = std::min(mn, deg[v]);
            if (mn != es.kmin) return;
        }
        if (es.check_connectivity && !connected()) return;
        sink.accept(rows, deg);
        note_leaf();
    }

    void go(int s) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (s == es.slots) {
            leaf();
            return;
        }
        const int u = es.su[s], v = es.sv[s];
        --rem[u];
        --rem[v];
        if (deg[u] + rem[u] >= es.kmin && deg[v] + rem[v] >= es.kmin) go(s + 1);
        if (deg[u] < es.mmax && deg[v] < es.mmax) {
            rows[u] |= 1u << v;
            rows[v] |= 1u << u;
            ++deg[u];
            ++deg[v];
            go(s + 1);
            rows[u] &= ~(1u << v);
            rows[v] &= ~(1u << u);
            --deg[u];
            --deg[v];
        }
        ++rem[u];
        ++rem[v];
    }

    // Forces the first partition_depth decisions from the id bits (highest
    // bit = first slot, set = edge present) and walks the remainder.
    void run_partition(long long id) {
        std::fill(rows, rows + es.n, 0u);
        std::fill(deg, deg + es.n, 0);
        std::fill(rem, rem + es.n, es.n - 1);
        for (int s = 0; s < es.partition_depth; ++s) {
            const int u = es.su[s], v = es.sv[s];
            --rem[u];
            --rem[v];
            if ((id >> (es.partition_depth - 1 - s)) & 1) {
                if (deg[u] >= es.mmax || deg[v] >= es.mmax) return;
                rows[u] |= 1u << v;
                rows[v] |= 1u << u;
                ++deg[u];
                ++deg[v];
            } else {
                if (deg[u] + rem[u] < es.kmin || deg[v] + rem[v] < es.kmin) return;
            }
        }
        go(es.partition_depth);
    }
};

struct EngineStats {
    long long labeled = 0;
    bool stopped = false;
    double elapsed = 0.0;
};

// Partitions are claimed from a shared counter in ascending order, so one
// worker reproduces the plain sequential walk exactly and several workers
// produce the same merged result set.
template <typename Sink>
EngineStats run_engine(const EngineSetup& es, std::vector<Sink>& sinks) {
    const auto t0 = Clock::now();
    std::atomic<bool> stop{false};
    std::atomic<long long> accepted{0};
    std::atomic<long long> next{0};
    const long long partitions = 1LL << es.partition_depth;
    const int workers = int(sinks.size());

    auto body = [&](int wi) {
        Walker<Sink> w(es, sinks[wi], stop, accepted, t0);
        while (!stop.load(std::memory_order_relaxed)) {
            const long long id = next.fetch_add(1, std::memory_order_relaxed);
            if (id >= partitions) break;
            if (es.time_limit > 0 && seconds_since(t0) > es.time_limit) {
                stop.store(true, std::memory_order_relaxed);
                break;
            }
            w.run_partition(id);
        }
        w.flush();
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(body, wi);
        for (auto& t : pool) t.join();
    }

    EngineStats st;
    st.labeled = accepted.load();
    st.stopped = stop.load();
    st.elapsed = seconds_since(t0);
    return st;
}

uint64_t class_key(const EngineSetup& es, const uint32_t* rows) {
    // key on the complement: same isomorphism classes, and the sparser side
    // refines faster in the dense regimes this tool searches
    uint32_t comp[16];
    const uint32_t full = (1u << es.n) - 1u;
    for (int v = 0; v < es.n; ++v) comp[v] = full & ~rows[v] & ~(1u << v);
    int perm[16];
    return detail::pack_key(detail::canonical_core(comp, es.n, perm), es.n);
}

Graph graph_from_rows(int n, const uint32_t* rows) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rows[u] >> v) & 1u) g.add_edge(u, v);
    return g;
}

struct MinSink {
    const EngineSetup* es;
    std::unordered_set<uint64_t> seen;
    long long best_num = LLONG_MAX;
    struct Hit {
        uint64_t key;
        std::array<uint32_t, 16> rows;
    };
    std::vector<Hit> hits;

    explicit MinSink(const EngineSetup& setup) : es(&setup) { seen.reserve(1 << 12); }

    void accept(const uint32_t* rows, const int* deg) {
        const uint64_t key = class_key(*es, rows);
        if (!seen.insert(key).second) return;
        long long num = 0;
        for (int u = 0; u < es->n; ++u) {
            uint32_t m = rows[u] & ~((2u << u) - 1u);
            for (; m; m &= m - 1) {
                const int v = std::countr_zero(m);
                num += es->recip[std::max(deg[u], deg[v])];
            }
        }
        if (num > best_num) return;
        if (num < best_num) {
            best_num = num;
            hits.clear();
        }
        Hit h;
        h.key = key;
        h.rows.fill(0);
        std::copy(rows, rows + es->n, h.rows.begin());
        hits.push_back(h);
    }
};

struct VisitSink {
    const EngineSetup* es;
    const std::function<void(const Graph&)>* visit;
    std::unordered_set<uint64_t> seen;
    long long classes = 0;

    VisitSink(const EngineSetup& setup, const std::function<void(const Graph&)>& fn)
        : es(&setup), visit(&fn) {}

    void accept(const uint32_t* rows, const int*) {
        const uint64_t key = class_key(*es, rows);
        if (!seen.insert(key).second) return;
        ++classes;
        const Graph rep = canonical_form(graph_from_rows(es->n, rows));
#ifndef NDEBUG
        assert(rep.min_degree() >= es->kmin);
        assert(!es->exact_min || rep.min_degree() == es->kmin);
        assert(rep.max_degree() <= es->mmax);
#endif
        (*visit)(rep);
    }
};

BoundComparison compare_with_bound(const SearchSpec& spec, bool empty, bool partial,
                                   const Rational& minimum) {
    BoundComparison bc;
    if (spec.n < 2 || spec.k_min < 1) return bc;
    try {
        BoundResult b = spec.m_max ? min_variation_bound(spec.n, spec.k_min, *spec.m_max)
                                   : min_variation_bound(spec.n, spec.k_min);
        bc.applicable = true;
        bc.bound = b.value;
    } catch (const regime_error&) {
        return bc;
    } catch (const input_error&) {
        return bc;
    }
    bc.equal = !empty && !partial && minimum == bc.bound;
    return bc;
}

}  // namespace

EnumerationOutcome enumerate_class(const SearchSpec& spec,
                                   const std::function<void(const Graph&)>& visit) {
    EngineSetup es = make_setup(spec);
    std::vector<VisitSink> sinks;
    sinks.emplace_back(es, visit);  // stream order is only defined sequentially
    EngineStats st = run_engine(es, sinks);
    EnumerationOutcome out;
    out.class_count = sinks.front().classes;
    out.labeled_explored = st.labeled;
    out.partial = st.stopped;
    return out;
}

std::vector<Graph> enumerate_class(const SearchSpec& spec) {
    std::vector<Graph> graphs;
    enumerate_class(spec, [&](const Graph& g) { graphs.push_back(g); });
    return graphs;
}

SearchReport min_variation(const SearchSpec& spec) {
    EngineSetup es = make_setup(spec);
    std::vector<MinSink> sinks;
    sinks.reserve(spec.workers);
    for (int i = 0; i < spec.workers; ++i) sinks.emplace_back(es);
    EngineStats st = run_engine(es, sinks);

    SearchReport rep;
    rep.spec = spec;
    rep.labeled_explored = st.labeled;
    rep.partial = st.stopped;
    rep.elapsed_seconds = st.elapsed;

    std::unordered_set<uint64_t> all_classes;
    long long best = LLONG_MAX;
    for (auto& s : sinks) {
        all_classes.insert(s.seen.begin(), s.seen.end());
        best = std::min(best, s.best_num);
    }
    rep.class_size = (long long)all_classes.size();
    rep.empty = rep.class_size == 0 && !rep.partial;
    if (best != LLONG_MAX) {
        rep.minimum = Rational(best, es.lcm_all);
        std::unordered_set<uint64_t> taken;
        for (auto& s : sinks) {
            if (s.best_num != best) continue;
            for (auto& h : s.hits)
                if (taken.insert(h.key).second)
                    rep.minimizers.push_back(canonical_graph6(graph_from_rows(es.n, h.rows.data())));
        }
        std::sort(rep.minimizers.begin(), rep.minimizers.end());
    }
    rep.bound_comparison = compare_with_bound(spec, rep.class_size == 0, rep.partial, rep.minimum);
    return rep;
}

namespace {

// Family membership for the conjecture: p vertices of degree k whose
// complement induces an (n-k-1)-regular graph, all others adjacent to
// everything.
bool in_predicted_family(const Graph& g, int n, int k, const std::vector<int>& p_values) {
    if (g.order() != n) return false;
    std::vector<int> low;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == k)
            low.push_back(v);
        else if (d != n - 1)
            return false;
    }
    if (std::find(p_values.begin(), p_values.end(), int(low.size())) == p_values.end())
        return false;
    for (int v : low) {
        int comp_deg = 0;
        for (int u : low)
            if (u != v && !g.adjacent(u, v)) ++comp_deg;
        if (comp_deg != n - k - 1) return false;
    }
    return true;
}

}  // namespace

ConjectureProbe probe_conjecture(int n, int k, const ProbeOptions& opt) {
    ConjectureProbe pr;
    pr.n = n;
    pr.k = k;
    ConjecturedP cp = conjectured_extremal_p(n, k);
    pr.theorem_regime = cp.theorem_regime;
    pr.p_values = cp.p_values;
    pr.conjectured = conjectured_bound(n, k);

    SearchSpec spec;
    spec.n = n;
    spec.k_min = k;
    spec.workers = opt.workers;
    spec.budget = opt.budget;
    spec.time_limit_seconds = opt.time_limit_seconds;
    pr.search = min_variation(spec);

    pr.minimum_matches =
        !pr.search.empty && !pr.search.partial && pr.search.minimum == pr.conjectured;
    pr.minimizers_in_family = !pr.search.minimizers.empty();
    for (const auto& line : pr.search.minimizers)
        if (!in_predicted_family(from_graph6(line), n, k, pr.p_values)) {
            pr.minimizers_in_family = false;
            break;
        }
    return pr;
}

}  // namespace rvar
