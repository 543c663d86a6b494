#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msgraph/graph.hpp"
#include "msgraph/rng.hpp"

namespace msgraph {

// Every edge carries g (so every triangle carries g as well).
MultisignedGraph gen_constant(int n, int m, const Multisign& g);

// Each edge component is -1 with probability neg_prob, drawn from a
// SplitMix64 stream keyed by (seed, n, m) in pair_index-major, component-
// minor order. Identical arguments give an identical graph everywhere.
MultisignedGraph gen_random(int n, int m, std::uint64_t seed, double neg_prob);

struct PlantedMixed {
    MultisignedGraph graph;
    // The one edge whose component 0 was negated after switching; triangles
    // through it are the non-identity ones.
    std::pair<int, int> flipped_edge;
};

// Randomly switched all-positive graph with component 0 of one random edge
// negated. For n >= 4 some triangle contains that edge and some avoids it,
// so the triangle class is always Mixed.
PlantedMixed gen_planted_mixed(int n, int m, std::uint64_t seed);

// sigma'(uv) = theta(u) * sigma(uv) * theta(v). Every cycle multisign is
// unchanged: each theta(v) enters a cycle product twice.
MultisignedGraph apply_switching(const MultisignedGraph& g, const std::vector<Multisign>& theta);

// Bijection between [0, 2^(m*C(n,2))) and graphs: component c of the edge at
// pair index e sits at bit e*m + c of the index. Index 0 is the all-positive
// graph; the top index is all-negative in every component.
class GraphSpace {
public:
    static constexpr int max_bits = 24;

    GraphSpace(int n, int m);

    std::uint64_t size() const { return size_; }
    int n() const { return n_; }
    int m() const { return m_; }

    MultisignedGraph at(std::uint64_t index) const;

private:
    int n_;
    int m_;
    std::uint64_t size_;
};

// Generator request as the CLI sees it.
struct GenSpec {
    enum class Model { Constant, Random, PlantedMixed };

    Model model = Model::Constant;
    int n = 3;
    int m = 1;
    Multisign sign = Multisign::identity(1);  // Constant
    std::uint64_t seed = 0;                   // Random, PlantedMixed
    double neg_prob = 0.5;                    // Random

    MultisignedGraph build() const;
};

} // namespace msgraph
