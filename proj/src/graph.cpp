#include "bsh/graph.hpp"

#include "bsh/error.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace bsh {

bool SrgParams::is_feasible() const {
    if (v < 1 || !counting_identity() || !in_range()) return false;
    SrgParams c = complement();
    return c.in_range();
}

std::string SrgParams::str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," + std::to_string(mu) + ")";
}

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0) {}

Graph Graph::from_adjacency(const IntMatrix& a) {
    require(a.square(), "adjacency must be square");
    require(a.is_zero_one() && a.is_symmetric(), "adjacency must be a symmetric 0/1 matrix");
    Graph g(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        require(a(i, i) == 0, "adjacency diagonal must be zero");
        for (std::size_t j = i + 1; j < a.rows(); ++j)
            if (a(i, j) == 1) g.add_edge(i, j);
    }
    return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Graph::degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(u)[w]));
    return d;
}

IntMatrix Graph::adjacency() const {
    return IntMatrix::generate(n_, n_, [&](std::size_t i, std::size_t j) -> Integer { return Integer(adjacent(i, j) ? 1 : 0); });
}

std::optional<SrgParams> srg_parameters(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    const std::size_t k = g.degree(0);
    for (std::size_t u = 1; u < n; ++u)
        if (g.degree(u) != k) return std::nullopt;
    long long lambda = -1, mu = -1;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            long long common = 0;
            for (std::size_t w = 0; w < g.words(); ++w) common += std::popcount(g.row(u)[w] & g.row(v)[w]);
            long long& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0) slot = common;
            else if (slot != common) return std::nullopt;
        }
    return SrgParams{static_cast<long long>(n), static_cast<long long>(k), std::max(lambda, 0LL), std::max(mu, 0LL)};
}

std::optional<SrgParams> srg_parameters(const IntMatrix& a) {
    if (!a.square() || !a.is_zero_one() || !a.is_symmetric() || a.trace() != 0) return std::nullopt;
    return srg_parameters(Graph::from_adjacency(a));
}

std::size_t connected_components(const Graph& g) {
    std::vector<std::size_t> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) parent[find(u)] = find(v);
    std::size_t c = 0;
    for (std::size_t u = 0; u < g.size(); ++u) c += find(u) == u;
    return c;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g), n_(g.size()) {
        // Degeneracy order: repeatedly remove a minimum-degree vertex; search visits the reverse.
        std::vector<std::size_t> deg(n_);
        for (std::size_t v = 0; v < n_; ++v) deg[v] = g.degree(v);
        std::vector<char> removed(n_, 0);
        std::vector<std::size_t> order;
        for (std::size_t it = 0; it < n_; ++it) {
            std::size_t best = n_;
            for (std::size_t v = 0; v < n_; ++v)
                if (!removed[v] && (best == n_ || deg[v] < deg[best])) best = v;
            removed[best] = 1;
            order.push_back(best);
            for (std::size_t v = 0; v < n_; ++v)
                if (!removed[v] && g.adjacent(best, v)) --deg[v];
        }
        std::reverse(order.begin(), order.end());
        order_ = order;
        pos_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) pos_[order_[i]] = i;
        // Adjacency re-indexed in search order.
        words_ = (n_ + 63) / 64;
        adj_.assign(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    std::vector<std::size_t> run() {
        std::vector<std::uint64_t> cand(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) cand[i / 64] |= std::uint64_t{1} << (i % 64);
        std::vector<std::size_t> current;
        expand(current, cand);
        std::vector<std::size_t> out;
        for (auto i : best_) out.push_back(order_[i]);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static bool any(const std::vector<std::uint64_t>& s) {
        return std::any_of(s.begin(), s.end(), [](std::uint64_t w) { return w != 0; });
    }

    // Greedy colouring of the candidate set; returns vertices with their colour bounds, ascending.
    void colour(const std::vector<std::uint64_t>& cand, std::vector<std::size_t>& verts, std::vector<std::size_t>& bounds) {
        std::vector<std::uint64_t> uncoloured = cand;
        std::size_t colour = 0;
        while (any(uncoloured)) {
            ++colour;
            std::vector<std::uint64_t> q = uncoloured;
            while (any(q)) {
                std::size_t w = 0;
                while (q[w] == 0) ++w;
                std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
                q[w] &= q[w] - 1;
                uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                const std::uint64_t* nb = adj_.data() + v * words_;
                for (std::size_t x = 0; x < words_; ++x) q[x] &= ~nb[x];
                verts.push_back(v);
                bounds.push_back(colour);
            }
        }
    }

    void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t> cand) {
        std::vector<std::size_t> verts, bounds;
        colour(cand, verts, bounds);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current.size() + bounds[idx] <= best_.size()) return;
            std::size_t v = verts[idx];
            current.push_back(v);
            std::vector<std::uint64_t> next(words_);
            const std::uint64_t* nb = adj_.data() + v * words_;
            for (std::size_t x = 0; x < words_; ++x) next[x] = cand[x] & nb[x];
            if (any(next)) expand(current, next);
            else if (current.size() > best_.size()) best_ = current;
            current.pop_back();
            cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    const Graph& g_;
    std::size_t n_, words_ = 0;
    std::vector<std::size_t> order_, pos_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> max_clique(const Graph& g) {
    if (g.size() == 0) return {};
    return CliqueSearch(g).run();
}

}  // namespace bsh
