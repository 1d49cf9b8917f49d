#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "meqsim/bits.hpp"
#include "meqsim/rng.hpp"

namespace meqsim {

// Undirected graph on nodes 0..k-1, no self-loops, stored as neighborhood
// bit vectors (row v is the characteristic vector of v's neighbors).
class Graph {
public:
    explicit Graph(int k);

    int node_count() const { return k_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int edge_count() const;

    const BitString& neighborhood(int v) const;        // nu_v
    BitString closed_neighborhood(int v) const;        // nu_v ^ e_v
    const std::vector<BitString>& rows() const { return adj_; }

    std::vector<int> neighbors(int v) const;
    Graph induced(const std::vector<int>& nodes) const; // keeps original labels elsewhere? relabels 0..s-1
    // Subgraph on the same k labels with edges restricted to `alive` nodes.
    Graph restricted(const std::vector<int>& alive) const;

    bool operator==(const Graph& other) const = default;

    // Enumeration helper: bit e of edge_mask is edge number e in the
    // (0,1),(0,2),(1,2),(0,3),... ordering.
    static Graph from_edge_mask(int k, std::uint64_t edge_mask);
    static std::uint64_t max_edge_mask(int k);

    // Uniform G(k, 1/2).
    static Graph random(int k, Rng& rng);

    // Text formats: "k" then one "u v" pair per line (edge list), or k rows
    // of k characters in {0,1} (adjacency matrix). Detected by content.
    static Graph parse(std::istream& in);
    static Graph parse(const std::string& text);
    std::string to_edge_list() const;

private:
    void check_node(int v) const;

    int k_;
    std::vector<BitString> adj_;
};

} // namespace meqsim
