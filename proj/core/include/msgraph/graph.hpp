#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "msgraph/multisign.hpp"

namespace msgraph {

// Complete graph on n >= 3 vertices carrying a width-m multisign on each of
// its n(n-1)/2 edges. Edge signs are stored as raw bit encodings in a flat
// upper-triangular array ordered by pair_index, one 64-bit word per edge.
// Immutable after construction.
class MultisignedGraph {
public:
    MultisignedGraph(int n, int m, const std::vector<Multisign>& edge_signs);

    // Every edge carries g.
    static MultisignedGraph constant(int n, const Multisign& g);

    // From raw bit encodings in pair_index order.
    static MultisignedGraph from_edge_bits(int n, int m, std::vector<std::uint64_t> bits);

    int vertex_count() const { return n_; }
    int width() const { return m_; }
    std::size_t edge_count() const { return bits_.size(); }

    // Flat index of the unordered pair {u, v}:
    // idx(u, v) = u*n - u*(u+1)/2 + (v - u - 1) for u < v.
    std::size_t pair_index(int u, int v) const;

    // Symmetric lookup: edge_sign(u, v) == edge_sign(v, u).
    Multisign edge_sign(int u, int v) const;
    std::uint64_t edge_bits(int u, int v) const;

    std::span<const std::uint64_t> raw_edge_bits() const { return bits_; }

    friend bool operator==(const MultisignedGraph&, const MultisignedGraph&) = default;

private:
    MultisignedGraph(int n, int m) : n_(n), m_(m) {}

    int n_;
    int m_;
    std::vector<std::uint64_t> bits_;
};

// Flat symmetric n*n table of edge bits (diagonal zero) for hot loops that
// cannot afford the checked pair lookup.
std::vector<std::uint64_t> edge_bit_matrix(const MultisignedGraph& g);

// Inverse of pair_index: the unordered pair {u, v} with u < v.
std::pair<int, int> pair_from_index(int n, std::size_t index);

} // namespace msgraph
