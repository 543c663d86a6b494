#include "msgraph/gen.hpp"

#include <stdexcept>
#include <string>

namespace msgraph {

namespace {

std::uint64_t width_mask(int m) {
    return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

std::size_t edge_total(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

} // namespace

MultisignedGraph gen_constant(int n, int m, const Multisign& g) {
    if (g.width() != m) {
        throw std::invalid_argument("constant sign width " + std::to_string(g.width()) +
                                    " does not match requested m=" + std::to_string(m));
    }
    return MultisignedGraph::constant(n, g);
}

MultisignedGraph gen_random(int n, int m, std::uint64_t seed, double neg_prob) {
    if (!(neg_prob >= 0.0 && neg_prob <= 1.0)) {
        throw std::invalid_argument("neg_prob must be in [0, 1], got " +
                                    std::to_string(neg_prob));
    }
    SplitMix64 rng(mix_key(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)));
    std::vector<std::uint64_t> bits(edge_total(n), 0);
    for (auto& b : bits) {
        for (int c = 0; c < m; ++c) {
            if (rng.next_double() < neg_prob) b |= std::uint64_t{1} << c;
        }
    }
    return MultisignedGraph::from_edge_bits(n, m, std::move(bits));
}

PlantedMixed gen_planted_mixed(int n, int m, std::uint64_t seed) {
    if (n < 4) {
        throw std::invalid_argument("planted mixed graphs need n >= 4 (K_3 has a single "
                                    "triangle), got n=" + std::to_string(n));
    }
    if (m < 1 || m > Multisign::max_width) {
        throw std::invalid_argument("multisign width must be in [1, 64], got " +
                                    std::to_string(m));
    }
    SplitMix64 rng(mix_key(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)));
    const std::uint64_t mask = width_mask(m);
    std::vector<std::uint64_t> theta(static_cast<std::size_t>(n));
    for (auto& t : theta) t = rng.next() & mask;

    // Switched all-positive graph: sigma(uv) = theta(u) ^ theta(v).
    std::vector<std::uint64_t> bits(edge_total(n));
    std::size_t e = 0;
    for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n; ++v, ++e) {
            bits[e] = theta[static_cast<std::size_t>(u)] ^ theta[static_cast<std::size_t>(v)];
        }
    }
    const std::size_t flip = rng.next_below(bits.size());
    bits[flip] ^= 1;
    return PlantedMixed{MultisignedGraph::from_edge_bits(n, m, std::move(bits)),
                        pair_from_index(n, flip)};
}

MultisignedGraph apply_switching(const MultisignedGraph& g, const std::vector<Multisign>& theta) {
    const int n = g.vertex_count();
    if (theta.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("switching needs one multisign per vertex, got " +
                                    std::to_string(theta.size()) + " for n=" +
                                    std::to_string(n));
    }
    for (const Multisign& t : theta) {
        if (t.width() != g.width()) {
            throw std::invalid_argument("switching width " + std::to_string(t.width()) +
                                        " does not match graph width " +
                                        std::to_string(g.width()));
        }
    }
    const auto old_bits = g.raw_edge_bits();
    std::vector<std::uint64_t> bits(old_bits.size());
    std::size_t e = 0;
    for (int u = 0; u < n - 1; ++u) {
        for (int v = u + 1; v < n; ++v, ++e) {
            bits[e] = theta[static_cast<std::size_t>(u)].bits() ^ old_bits[e] ^
                      theta[static_cast<std::size_t>(v)].bits();
        }
    }
    return MultisignedGraph::from_edge_bits(n, g.width(), std::move(bits));
}

GraphSpace::GraphSpace(int n, int m) : n_(n), m_(m) {
    if (n < 3) {
        throw std::invalid_argument("graph space needs n >= 3, got " + std::to_string(n));
    }
    if (m < 1 || m > Multisign::max_width) {
        throw std::invalid_argument("multisign width must be in [1, 64], got " +
                                    std::to_string(m));
    }
    const std::size_t total_bits = edge_total(n) * static_cast<std::size_t>(m);
    if (total_bits > static_cast<std::size_t>(max_bits)) {
        throw std::invalid_argument("graph space 2^" + std::to_string(total_bits) +
                                    " exceeds the 2^" + std::to_string(max_bits) +
                                    " iteration cap");
    }
    size_ = std::uint64_t{1} << total_bits;
}

MultisignedGraph GraphSpace::at(std::uint64_t index) const {
    if (index >= size_) {
        throw std::invalid_argument("graph index " + std::to_string(index) +
                                    " out of range, space has " + std::to_string(size_) +
                                    " graphs");
    }
    const std::uint64_t mask = width_mask(m_);
    std::vector<std::uint64_t> bits(edge_total(n_));
    for (std::size_t e = 0; e < bits.size(); ++e) {
        bits[e] = (index >> (e * static_cast<std::size_t>(m_))) & mask;
    }
    return MultisignedGraph::from_edge_bits(n_, m_, std::move(bits));
}

MultisignedGraph GenSpec::build() const {
    switch (model) {
        case Model::Constant:
            return gen_constant(n, m, sign);
        case Model::Random:
            return gen_random(n, m, seed, neg_prob);
        case Model::PlantedMixed:
            return gen_planted_mixed(n, m, seed).graph;
    }
    throw std::logic_error("unknown generator model");
}

} // namespace msgraph
