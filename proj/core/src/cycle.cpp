#include "msgraph/cycle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace msgraph {

CycleSeq::CycleSeq(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices, got " +
                                    std::to_string(verts_.size()));
    }
    std::vector<int> sorted = verts_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) {
        throw std::invalid_argument("negative vertex index " + std::to_string(sorted.front()));
    }
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument("repeated vertex " + std::to_string(sorted[i]) +
                                        " in cycle");
        }
    }
}

CycleSeq CycleSeq::canonical() const {
    const auto k = verts_.size();
    const auto min_pos = static_cast<std::size_t>(
        std::min_element(verts_.begin(), verts_.end()) - verts_.begin());
    std::vector<int> rotated(k);
    for (std::size_t i = 0; i < k; ++i) {
        rotated[i] = verts_[(min_pos + i) % k];
    }
    if (rotated[1] > rotated[k - 1]) {
        std::reverse(rotated.begin() + 1, rotated.end());
    }
    return CycleSeq(std::move(rotated));
}

Multisign cycle_multisign(const MultisignedGraph& g, const CycleSeq& cycle) {
    const auto& v = cycle.vertices();
    for (int vertex : v) {
        if (vertex >= g.vertex_count()) {
            throw std::invalid_argument("cycle vertex " + std::to_string(vertex) +
                                        " out of range for n=" +
                                        std::to_string(g.vertex_count()));
        }
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        acc ^= g.edge_bits(v[i], v[i + 1]);
    }
    acc ^= g.edge_bits(v.back(), v.front());
    return Multisign::from_bits(g.width(), acc);
}

Multisign triangle_multisign(const MultisignedGraph& g, int a, int b, int c) {
    if (a == b || b == c || a == c) {
        throw std::invalid_argument("triangle vertices must be distinct, got (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ", " +
                                    std::to_string(c) + ")");
    }
    const std::uint64_t acc = g.edge_bits(a, b) ^ g.edge_bits(b, c) ^ g.edge_bits(c, a);
    return Multisign::from_bits(g.width(), acc);
}

} // namespace msgraph
