#include "meqsim/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace meqsim {

Graph::Graph(int k) : k_(k), adj_(static_cast<std::size_t>(k), BitString(k)) {
    if (k < 1) {
        throw std::invalid_argument("Graph: node count must be positive");
    }
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= k_) {
        throw std::out_of_range("Graph: node index out of range");
    }
}

void Graph::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw std::invalid_argument("Graph: self-loops are not allowed");
    }
    adj_[static_cast<std::size_t>(u)].set_bit(v, true);
    adj_[static_cast<std::size_t>(v)].set_bit(u, true);
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return adj_[static_cast<std::size_t>(u)].bit(v);
}

int Graph::degree(int v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)].weight();
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.weight();
    return total / 2;
}

const BitString& Graph::neighborhood(int v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
}

BitString Graph::closed_neighborhood(int v) const {
    return neighborhood(v) ^ BitString::unit(k_, v);
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < k_; ++u) {
        if (u != v && has_edge(u, v)) out.push_back(u);
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& nodes) const {
    Graph g(static_cast<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (has_edge(nodes[a], nodes[b])) {
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return g;
}

Graph Graph::restricted(const std::vector<int>& alive) const {
    Graph g(k_);
    for (std::size_t a = 0; a < alive.size(); ++a) {
        for (std::size_t b = a + 1; b < alive.size(); ++b) {
            if (has_edge(alive[a], alive[b])) {
                g.add_edge(alive[a], alive[b]);
            }
        }
    }
    return g;
}

Graph Graph::from_edge_mask(int k, std::uint64_t edge_mask) {
    Graph g(k);
    int e = 0;
    for (int v = 1; v < k; ++v) {
        for (int u = 0; u < v; ++u, ++e) {
            if ((edge_mask >> e) & 1) g.add_edge(u, v);
        }
    }
    if (edge_mask >> e) {
        throw std::invalid_argument("Graph::from_edge_mask: mask exceeds edge count");
    }
    return g;
}

std::uint64_t Graph::max_edge_mask(int k) {
    int pairs = k * (k - 1) / 2;
    if (pairs >= 63) {
        throw std::invalid_argument("Graph::max_edge_mask: too many node pairs");
    }
    return (std::uint64_t{1} << pairs) - 1;
}

Graph Graph::random(int k, Rng& rng) {
    Graph g(k);
    for (int v = 1; v < k; ++v) {
        for (int u = 0; u < v; ++u) {
            if (uniform_bit(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::parse(std::istream& in) {
    std::string first;
    if (!(in >> first)) {
        throw std::invalid_argument("Graph::parse: empty input");
    }
    bool matrix = first.size() > 1 &&
                  first.find_first_not_of("01") == std::string::npos;
    if (matrix) {
        int k = static_cast<int>(first.size());
        Graph g(k);
        std::vector<std::string> rows{first};
        for (int v = 1; v < k; ++v) {
            std::string row;
            if (!(in >> row) || static_cast<int>(row.size()) != k) {
                throw std::invalid_argument("Graph::parse: bad adjacency row");
            }
            rows.push_back(row);
        }
        for (int v = 0; v < k; ++v) {
            for (int u = 0; u < k; ++u) {
                bool bit = rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] == '1';
                if (u == v && bit) {
                    throw std::invalid_argument("Graph::parse: nonzero diagonal");
                }
                if (bit != (rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == '1')) {
                    throw std::invalid_argument("Graph::parse: adjacency not symmetric");
                }
                if (bit && u < v) g.add_edge(u, v);
            }
        }
        return g;
    }
    int k = std::stoi(first);
    Graph g(k);
    int u, v;
    while (in >> u >> v) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << k_ << '\n';
    for (int v = 0; v < k_; ++v) {
        for (int u = v + 1; u < k_; ++u) {
            if (has_edge(u, v)) out << v << ' ' << u << '\n';
        }
    }
    return out.str();
}

} // namespace meqsim
