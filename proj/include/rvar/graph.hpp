#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rvar {

// Orders are capped so an adjacency row fits one 32-bit mask. Everything in
// this project lives at n <= 14; the cap leaves headroom.
inline constexpr int kMaxOrder = 32;

// Simple undirected graph on labeled vertices 0..n-1.
// Adjacency is a symmetric, irreflexive bit relation stored as one mask per
// vertex. Values are immutable once a builder returns them; all operations
// are pure, so graphs can be shared freely across threads.
class Graph {
public:
    explicit Graph(int order);

    // Duplicate pairs collapse; (u,v) out of range or u == v is an input error.
    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    uint32_t neighbors_mask(int v) const { return adj_[v]; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degree_sequence() const;
    int min_degree() const;
    int max_degree() const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // Single-vertex graphs count as connected.
    bool is_connected() const;

    Graph complement() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<uint32_t> adj_;
};

// graph6 text format, one graph per line. Orders above kMaxOrder are rejected.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Edge-list text format "n; u-v,u-v,...".
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& line);

}  // namespace rvar
