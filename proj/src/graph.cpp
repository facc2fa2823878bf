#include "rvar/graph.hpp"

#include <bit>
#include <sstream>

#include "rvar/errors.hpp"

namespace rvar {

Graph::Graph(int order) : n_(order) {
    if (order < 1) throw input_error("graph order must be positive");
    if (order > kMaxOrder)
        throw input_error("graph order " + std::to_string(order) + " exceeds supported maximum " +
                          std::to_string(kMaxOrder));
    adj_.assign(n_, 0u);
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for order " + std::to_string(order));
        if (u == v)
            throw input_error("self-loop at vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~(1u << v);
    adj_[v] &= ~(1u << u);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

int Graph::min_degree() const {
    int m = n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    uint32_t seen = 1u;
    uint32_t frontier = 1u;
    while (frontier != 0) {
        uint32_t next = 0;
        for (uint32_t f = frontier; f != 0; f &= f - 1)
            next |= adj_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    uint32_t all = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
    return (seen & all) == all;
}

Graph Graph::complement() const {
    Graph c(n_);
    uint32_t all = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
    for (int v = 0; v < n_; ++v) c.adj_[v] = (~adj_[v] & all) & ~(1u << v);
    return c;
}

// --- graph6 ---------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(char(63 + n));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw input_error("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw input_error("invalid graph6 character");
    if (s[0] == '~') throw input_error("graph6 orders above 62 are not supported");
    const int n = s[0] - 63;
    if (n < 1) throw input_error("graph6 order must be positive");
    if (n > kMaxOrder)
        throw input_error("graph6 order " + std::to_string(n) + " exceeds supported maximum " +
                          std::to_string(kMaxOrder));
    const long long bits = 1LL * n * (n - 1) / 2;
    const size_t want = 1 + size_t((bits + 5) / 6);
    if (s.size() != want)
        throw input_error("graph6 string has wrong length for order " + std::to_string(n));
    Graph g(n);
    long long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int c = s[1 + idx / 6] - 63;
            if ((c >> (5 - idx % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

// --- edge list ------------------------------------------------------------

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ";";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out << (first ? " " : ",") << u << "-" << v;
        first = false;
    }
    return out.str();
}

Graph from_edge_list(const std::string& line) {
    auto semi = line.find(';');
    if (semi == std::string::npos) throw input_error("edge list missing ';' separator");
    int n = 0;
    try {
        size_t pos = 0;
        n = std::stoi(line.substr(0, semi), &pos);
        while (pos < semi && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != semi) throw input_error("bad order");
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("unparsable order in edge list");
    }
    std::vector<std::pair<int, int>> edges;
    std::string rest = line.substr(semi + 1);
    std::istringstream in(rest);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        size_t b = tok.find_last_not_of(" \t\r\n");
        std::string item = tok.substr(a, b - a + 1);
        auto dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw input_error("bad edge token '" + item + "'");
        try {
            int u = std::stoi(item.substr(0, dash));
            int v = std::stoi(item.substr(dash + 1));
            edges.emplace_back(u, v);
        } catch (const std::exception&) {
            throw input_error("bad edge token '" + item + "'");
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace rvar
