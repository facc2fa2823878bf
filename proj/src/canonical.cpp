#include "rvar/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "canonical_core.hpp"
#include "rvar/errors.hpp"

namespace rvar::detail {
namespace {

// Iterated color refinement (degree classes split by neighbor-color
// multisets) followed by a lex-minimal depth-first search over the vertex
// orders that respect the refined classes. The best-prefix arrays prune the
// search hard on irregular graphs; symmetric graphs fall back to exploring
// their automorphisms.
struct Canon {
    int n = 0;
    const uint32_t* rows = nullptr;

    int col[32];              // refined color per vertex, 0 = first block
    int nclasses = 0;
    uint32_t color_mask[32];  // vertices carrying each color
    int block_color[32];      // color required at each position

    uint32_t used = 0;
    int perm[32];
    int best_perm[32];
    uint32_t best[32];        // smallest column bits seen per position
    bool have[32];
    uint32_t colacc[33][32];  // colacc[t][v]: adjacency of v to perm[0..t-1]

    void init_colors() {
        int deg[32], sorted[32];
        for (int v = 0; v < n; ++v) sorted[v] = deg[v] = std::popcount(rows[v]);
        std::sort(sorted, sorted + n);
        int* end = std::unique(sorted, sorted + n);
        nclasses = int(end - sorted);
        for (int v = 0; v < n; ++v)
            col[v] = int(std::lower_bound(sorted, end, deg[v]) - sorted);
    }

    // Colors fit 4 bits, so a signature (own color, neighbor-color counts)
    // packs into one 64-bit word: no sorting of neighbor colors needed.
    void refine_small() {
        uint64_t sig[32], order[32];
        while (nclasses < n) {
            for (int v = 0; v < n; ++v) {
                uint64_t s = uint64_t(col[v]) << 60;
                for (uint32_t m = rows[v]; m; m &= m - 1)
                    s += uint64_t(1) << (4 * col[std::countr_zero(m)]);
                sig[v] = s;
            }
            std::copy(sig, sig + n, order);
            std::sort(order, order + n);
            int cnt = int(std::unique(order, order + n) - order);
            if (cnt == nclasses) return;  // partition stable
            for (int v = 0; v < n; ++v)
                col[v] = int(std::lower_bound(order, order + cnt, sig[v]) - order);
            nclasses = cnt;
        }
    }

    void refine_big() {
        std::vector<std::array<int, 33>> sig(n);
        std::vector<int> idx(n);
        while (nclasses < n) {
            for (int v = 0; v < n; ++v) {
                sig[v].fill(0);
                sig[v][0] = col[v];
                for (uint32_t m = rows[v]; m; m &= m - 1) sig[v][1 + col[std::countr_zero(m)]]++;
            }
            for (int v = 0; v < n; ++v) idx[v] = v;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
            int newcol[32];
            int cnt = 0;
            newcol[idx[0]] = 0;
            for (int i = 1; i < n; ++i) {
                if (sig[idx[i]] != sig[idx[i - 1]]) ++cnt;
                newcol[idx[i]] = cnt;
            }
            ++cnt;
            if (cnt == nclasses) return;
            std::copy(newcol, newcol + n, col);
            nclasses = cnt;
        }
    }

    void setup_blocks() {
        std::fill(color_mask, color_mask + nclasses, 0u);
        for (int v = 0; v < n; ++v) color_mask[col[v]] |= 1u << v;
        int t = 0;
        for (int c = 0; c < nclasses; ++c)
            for (int i = 0; i < std::popcount(color_mask[c]); ++i) block_color[t++] = c;
    }

    void dfs(int t) {
        if (t == n) {
            std::copy(perm, perm + n, best_perm);
            return;
        }
        uint32_t cands = color_mask[block_color[t]] & ~used;
        uint32_t tried = 0;
        for (uint32_t cm = cands; cm; cm &= cm - 1) {
            const int v = std::countr_zero(cm);
            // skip v if an already-branched candidate is its twin: swapping
            // the two is an automorphism, so the completions are identical
            bool twin = false;
            for (uint32_t tm = tried; tm; tm &= tm - 1) {
                const int u = std::countr_zero(tm);
                if (((rows[u] ^ rows[v]) & ~((1u << u) | (1u << v))) == 0) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried |= 1u << v;
            const uint32_t cb = colacc[t][v];
            if (have[t]) {
                if (cb > best[t]) continue;
                if (cb < best[t]) {
                    std::fill(have + t + 1, have + n, false);
                    best[t] = cb;
                }
            } else {
                best[t] = cb;
                have[t] = true;
            }
            perm[t] = v;
            used |= 1u << v;
            const uint32_t rv = rows[v];
            const uint32_t* cur = colacc[t];
            uint32_t* nxt = colacc[t + 1];
            for (int u = 0; u < n; ++u) nxt[u] = (cur[u] << 1) | ((rv >> u) & 1u);
            dfs(t + 1);
            used &= ~(1u << v);
        }
    }

    uint64_t run(int* perm_out) {
        init_colors();
        if (n <= 15)
            refine_small();
        else
            refine_big();
        setup_blocks();
        if (nclasses == n) {
            for (int c = 0; c < n; ++c) best_perm[c] = std::countr_zero(color_mask[c]);
        } else {
            std::fill(have, have + n, false);
            std::fill(colacc[0], colacc[0] + n, 0u);
            used = 0;
            dfs(0);
        }
        std::copy(best_perm, best_perm + n, perm_out);
        uint64_t stream = 0;
        if (n <= 11) {
            for (int t = 1; t < n; ++t) {
                const uint32_t rv = rows[best_perm[t]];
                uint32_t cb = 0;
                for (int i = 0; i < t; ++i) cb = (cb << 1) | ((rv >> best_perm[i]) & 1u);
                stream = (stream << t) | cb;
            }
        }
        return stream;
    }
};

}  // namespace

uint64_t canonical_core(const uint32_t* rows, int n, int* perm_out) {
    Canon c;
    c.n = n;
    c.rows = rows;
    return c.run(perm_out);
}

}  // namespace rvar::detail

namespace rvar {

namespace {

void load_rows(const Graph& g, uint32_t* rows) {
    for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors_mask(v);
}

}  // namespace

Graph canonical_form(const Graph& g) {
    const int n = g.order();
    uint32_t rows[32];
    load_rows(g, rows);
    int perm[32];
    detail::canonical_core(rows, n, perm);
    Graph out(n);
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < t; ++s)
            if (g.adjacent(perm[s], perm[t])) out.add_edge(s, t);
    return out;
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

uint64_t canonical_key(const Graph& g) {
    const int n = g.order();
    if (n > kMaxKeyOrder)
        throw input_error("canonical_key: order " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxKeyOrder));
    uint32_t rows[32];
    load_rows(g, rows);
    int perm[32];
    return detail::pack_key(detail::canonical_core(rows, n, perm), n);
}

}  // namespace rvar
