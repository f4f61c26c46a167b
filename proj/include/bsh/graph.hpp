#pragma once

#include "bsh/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bsh {

struct SrgParams {
    long long v = 0, k = 0, lambda = 0, mu = 0;

    // k(k−λ−1) = (v−k−1)μ
    bool counting_identity() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
    bool in_range() const { return 0 <= k && k <= v - 1 && 0 <= lambda && lambda <= k && 0 <= mu && mu <= k; }
    SrgParams complement() const { return {v, v - k - 1, v - 2 - 2 * k + mu, v - 2 * k + lambda}; }
    // Counting identity plus the range conditions for the graph and its complement.
    bool is_feasible() const;
    std::string str() const;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Undirected simple graph with bitset rows.
class Graph {
public:
    explicit Graph(std::size_t n);
    static Graph from_adjacency(const IntMatrix& a);  // symmetric 0/1, zero diagonal

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u; }
    const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }
    std::size_t degree(std::size_t u) const;
    IntMatrix adjacency() const;

private:
    std::size_t n_, words_;
    std::vector<std::uint64_t> rows_;
};

// (v,k,λ,μ) if the graph is strongly regular (regular, constant λ on edges, constant μ on non-edges).
std::optional<SrgParams> srg_parameters(const Graph& g);
std::optional<SrgParams> srg_parameters(const IntMatrix& a);

std::size_t connected_components(const Graph& g);

// A maximum clique, by branch and bound with greedy-colouring bounds over a degeneracy order.
std::vector<std::size_t> max_clique(const Graph& g);

}  // namespace bsh
