#include "msgraph/graph.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace msgraph {

namespace {

void check_shape(int n, int m) {
    if (n < 3) {
        throw std::invalid_argument("complete graph needs n >= 3, got " + std::to_string(n));
    }
    if (m < 1 || m > Multisign::max_width) {
        throw std::invalid_argument("multisign width must be in [1, 64], got " +
                                    std::to_string(m));
    }
}

std::size_t edge_total(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

} // namespace

MultisignedGraph::MultisignedGraph(int n, int m, const std::vector<Multisign>& edge_signs)
    : n_(n), m_(m) {
    check_shape(n, m);
    if (edge_signs.size() != edge_total(n)) {
        throw std::invalid_argument("expected " + std::to_string(edge_total(n)) +
                                    " edge signs for n=" + std::to_string(n) + ", got " +
                                    std::to_string(edge_signs.size()));
    }
    bits_.reserve(edge_signs.size());
    for (const Multisign& g : edge_signs) {
        if (g.width() != m) {
            throw std::invalid_argument("edge sign width " + std::to_string(g.width()) +
                                        " does not match graph width " + std::to_string(m));
        }
        bits_.push_back(g.bits());
    }
}

MultisignedGraph MultisignedGraph::constant(int n, const Multisign& g) {
    check_shape(n, g.width());
    MultisignedGraph out(n, g.width());
    out.bits_.assign(edge_total(n), g.bits());
    return out;
}

MultisignedGraph MultisignedGraph::from_edge_bits(int n, int m, std::vector<std::uint64_t> bits) {
    check_shape(n, m);
    if (bits.size() != edge_total(n)) {
        throw std::invalid_argument("expected " + std::to_string(edge_total(n)) +
                                    " edge words for n=" + std::to_string(n) + ", got " +
                                    std::to_string(bits.size()));
    }
    if (m < Multisign::max_width) {
        for (std::uint64_t b : bits) {
            if ((b >> m) != 0) {
                throw std::invalid_argument("edge bits exceed width " + std::to_string(m));
            }
        }
    }
    MultisignedGraph out(n, m);
    out.bits_ = std::move(bits);
    return out;
}

std::size_t MultisignedGraph::pair_index(int u, int v) const {
    if (u == v) {
        throw std::invalid_argument("no loop edge at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("vertex pair (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") out of range for n=" +
                                    std::to_string(n_));
    }
    if (u > v) std::swap(u, v);
    const auto un = static_cast<std::size_t>(u);
    const auto vn = static_cast<std::size_t>(v);
    const auto nn = static_cast<std::size_t>(n_);
    return un * nn - un * (un + 1) / 2 + (vn - un - 1);
}

Multisign MultisignedGraph::edge_sign(int u, int v) const {
    return Multisign::from_bits(m_, bits_[pair_index(u, v)]);
}

std::uint64_t MultisignedGraph::edge_bits(int u, int v) const {
    return bits_[pair_index(u, v)];
}

std::vector<std::uint64_t> edge_bit_matrix(const MultisignedGraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::uint64_t> table(n * n, 0);
    const auto bits = g.raw_edge_bits();
    std::size_t e = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++e) {
            table[u * n + v] = bits[e];
            table[v * n + u] = bits[e];
        }
    }
    return table;
}

std::pair<int, int> pair_from_index(int n, std::size_t index) {
    if (index >= edge_total(n)) {
        throw std::invalid_argument("pair index " + std::to_string(index) +
                                    " out of range for n=" + std::to_string(n));
    }
    std::size_t row_end = 0;
    for (int u = 0; u < n - 1; ++u) {
        row_end += static_cast<std::size_t>(n - 1 - u);
        if (index < row_end) {
            const std::size_t offset = index - (row_end - static_cast<std::size_t>(n - 1 - u));
            return {u, u + 1 + static_cast<int>(offset)};
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace msgraph
