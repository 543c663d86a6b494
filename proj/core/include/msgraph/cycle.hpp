#pragma once

#include <vector>

#include "msgraph/graph.hpp"

namespace msgraph {

// Ordered sequence of distinct vertices read cyclically (the last vertex is
// adjacent to the first); length >= 3. Rotations and reflections of a
// sequence denote the same cycle.
class CycleSeq {
public:
    explicit CycleSeq(std::vector<int> vertices);

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    int at(int pos) const { return verts_[static_cast<std::size_t>(pos)]; }
    int at_wrapped(int pos) const { return verts_[static_cast<std::size_t>(pos % length())]; }

    // Normal form for deduplication: rotate the smallest vertex to the
    // front, then reflect so the second vertex is smaller than the last.
    CycleSeq canonical() const;

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;

private:
    std::vector<int> verts_;
};

// Product of the edge multisigns around the cycle, closing edge included.
// Invariant under rotation and reflection of the sequence.
Multisign cycle_multisign(const MultisignedGraph& g, const CycleSeq& cycle);

// Multisign of the 3-cycle on {a, b, c}; symmetric in all argument orders.
Multisign triangle_multisign(const MultisignedGraph& g, int a, int b, int c);

} // namespace msgraph
