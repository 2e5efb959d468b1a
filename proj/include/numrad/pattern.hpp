#ifndef NUMRAD_PATTERN_HPP
#define NUMRAD_PATTERN_HPP

#include <cstdint>
#include <vector>

#include "numrad/matrix.hpp"

// Zero patterns: the undirected graph with an edge {i,j} iff both a_ij and
// a_ji are nonzero, and its exact clique number omega.

namespace numrad {

class PatternGraph {
public:
    explicit PatternGraph(int n);

    int order() const { return n_; }
    int edge_count() const { return edges_; }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const {
        return (bits_[row_word(i, j)] >> (j & 63)) & 1ULL;
    }
    int degree(int i) const;

    bool is_edgeless() const { return edges_ == 0; }
    bool is_complete() const { return edges_ == n_ * (n_ - 1) / 2; }

private:
    std::size_t row_word(int i, int j) const {
        return static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6);
    }

    int n_;
    int words_;  // 64-bit words per neighborhood row
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Edge {i,j} (i != j) iff |a_ij| > tol and |a_ji| > tol.
PatternGraph extract_pattern(const ComplexMatrix& a, double tol = 0.0);

// Exact clique number by branch-and-bound with a greedy-coloring bound.
// Deterministic: degeneracy vertex order, ties to the lowest index.
int omega_exact(const PatternGraph& g);

// Independent oracle: subset enumeration. Requires n <= 20.
int omega_bruteforce(const PatternGraph& g);

// Smallest-last elimination order; ties broken by lowest index.
std::vector<int> degeneracy_order(const PatternGraph& g);

// sum over ordered pairs (i,j), i != j, |a_ij| > tol of |y_i|^2 |y_j|^2.
double pattern_mass(const ComplexMatrix& a, const UnitVector& y, double tol = 0.0);

}  // namespace numrad

#endif
