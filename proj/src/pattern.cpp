#include "numrad/pattern.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace numrad {

PatternGraph::PatternGraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("pattern graph order must be >= 1");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0ULL);
}

void PatternGraph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("vertex out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (has_edge(i, j)) return;
    bits_[row_word(i, j)] |= 1ULL << (j & 63);
    bits_[row_word(j, i)] |= 1ULL << (i & 63);
    ++edges_;
}

int PatternGraph::degree(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("vertex out of range");
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(i) * words_ + w]);
    return d;
}

PatternGraph extract_pattern(const ComplexMatrix& a, double tol) {
    if (tol < 0.0) throw std::invalid_argument("pattern tolerance must be >= 0");
    const int n = a.order();
    PatternGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(a(i, j)) > tol && std::abs(a(j, i)) > tol) g.add_edge(i, j);
    return g;
}

std::vector<int> degeneracy_order(const PatternGraph& g) {
    const int n = g.order();
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
    std::vector<bool> removed(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!removed[u] && g.has_edge(best, u)) --deg[u];
    }
    return order;
}

namespace {

// Tomita-style expansion. Candidates arrive ordered; a greedy coloring in
// that order yields the per-vertex pruning bound.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const PatternGraph& g) : g_(g) {}

    int run() {
        best_ = 1;  // a single vertex is always a clique
        std::vector<int> p = degeneracy_order(g_);
        std::reverse(p.begin(), p.end());  // highest-core vertices first
        expand(0, p);
        return best_;
    }

private:
    void expand(int clique_size, std::vector<int>& candidates) {
        const int m = static_cast<int>(candidates.size());
        if (m == 0) {
            best_ = std::max(best_, clique_size);
            return;
        }
        // Greedy coloring in candidate order; color[v] bounds any clique
        // inside candidates containing v and later-colored vertices.
        std::vector<int> color(static_cast<std::size_t>(m));
        std::vector<std::vector<int>> classes;
        for (int idx = 0; idx < m; ++idx) {
            const int v = candidates[static_cast<std::size_t>(idx)];
            std::size_t k = 0;
            for (; k < classes.size(); ++k) {
                bool clash = false;
                for (int u : classes[k])
                    if (g_.has_edge(v, u)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(v);
            color[static_cast<std::size_t>(idx)] = static_cast<int>(k) + 1;
        }
        std::vector<int> by_color(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) by_color[static_cast<std::size_t>(i)] = i;
        std::stable_sort(by_color.begin(), by_color.end(), [&](int lhs, int rhs) {
            return color[static_cast<std::size_t>(lhs)] < color[static_cast<std::size_t>(rhs)];
        });

        std::vector<bool> dropped(static_cast<std::size_t>(m), false);
        for (int pos = m - 1; pos >= 0; --pos) {
            const int idx = by_color[static_cast<std::size_t>(pos)];
            if (clique_size + color[static_cast<std::size_t>(idx)] <= best_) return;
            const int v = candidates[static_cast<std::size_t>(idx)];
            std::vector<int> next;
            for (int i = 0; i < m; ++i) {
                if (dropped[static_cast<std::size_t>(i)]) continue;
                const int u = candidates[static_cast<std::size_t>(i)];
                if (u != v && g_.has_edge(v, u)) next.push_back(u);
            }
            if (next.empty())
                best_ = std::max(best_, clique_size + 1);
            else
                expand(clique_size + 1, next);
            dropped[static_cast<std::size_t>(idx)] = true;
        }
    }

    const PatternGraph& g_;
    int best_ = 1;
};

}  // namespace

int omega_exact(const PatternGraph& g) { return MaxCliqueSearch(g).run(); }

int omega_bruteforce(const PatternGraph& g) {
    const int n = g.order();
    if (n > 20) throw std::invalid_argument("oracle size limit: omega_bruteforce requires n <= 20");
    const std::uint32_t total = 1U << n;
    // is_clique[S] via the lowest vertex of S: S is a clique iff S\{v} is and
    // v is adjacent to all of S\{v}.
    std::vector<std::uint32_t> neighbor_mask(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) neighbor_mask[static_cast<std::size_t>(i)] |= 1U << j;
    std::vector<char> is_clique(total, 0);
    is_clique[0] = 1;
    int best = 0;
    for (std::uint32_t s = 1; s < total; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        if (is_clique[rest] && (rest & ~neighbor_mask[static_cast<std::size_t>(v)]) == 0) {
            is_clique[s] = 1;
            best = std::max(best, std::popcount(s));
        }
    }
    return std::max(best, 1);
}

double pattern_mass(const ComplexMatrix& a, const UnitVector& y, double tol) {
    const int n = a.order();
    if (y.size() != n) throw std::invalid_argument("dimension mismatch between matrix and vector");
    if (tol < 0.0) throw std::invalid_argument("pattern tolerance must be >= 0");
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double yi = std::norm(y.coords[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(a(i, j)) > tol)
                total += yi * std::norm(y.coords[static_cast<std::size_t>(j)]);
        }
    }
    return total;
}

}  // namespace numrad
