#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "msgraph/classify.hpp"

namespace msgraph {

// Enumeration stays naive on purpose: it is the ground truth the theorem
// engine is checked against, so it must not share any shortcut with it.

inline constexpr int hamiltonian_enumeration_cap = 13;
inline constexpr int all_cycles_enumeration_cap = 8;

// Multisign tally over every Hamiltonian cycle, each visited once in
// canonical form (vertex 0 first, second vertex smaller than the last).
struct HamiltonianSurvey {
    int n = 0;
    int m = 0;
    std::uint64_t total = 0;  // always (n-1)!/2
    std::map<Multisign, std::uint64_t> counts;

    std::size_t distinct() const { return counts.size(); }
};

HamiltonianSurvey enumerate_hamiltonian(const MultisignedGraph& g);

// Census of every cycle of every length 3..n, each visited once (smallest
// vertex anchored first, second vertex smaller than the last).
struct CycleCensus {
    int n = 0;
    int m = 0;
    std::uint64_t total = 0;
    std::map<int, std::map<Multisign, std::uint64_t>> by_length;

    bool identity_only() const;
};

CycleCensus enumerate_all_cycles(const MultisignedGraph& g);

// Chords from the cycle's first listed vertex split it into triangles whose
// multisign product must reproduce the cycle multisign. True for every valid
// input; false means an implementation bug, which is what this exists to
// catch.
bool fan_decomposition_check(const MultisignedGraph& g, const CycleSeq& cycle);

struct AgreementMode {
    enum class Kind { Exhaustive, Random };

    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;

    static AgreementMode exhaustive() { return {}; }
    static AgreementMode random(std::uint64_t seed, std::uint64_t trials) {
        return {Kind::Random, seed, trials};
    }
};

struct AgreementReport {
    int n = 0;
    int m = 0;
    AgreementMode mode;
    std::uint64_t instances = 0;
    std::vector<std::string> mismatches;  // serialized counterexample graphs
    double elapsed_seconds = 0.0;

    bool pass() const { return mismatches.empty(); }
};

// classify_hamiltonian against enumerate_hamiltonian for every graph in the
// requested space: a graph agrees iff Mixed coincides with two or more
// enumerated multisigns and AllSame(g) coincides with exactly {g}.
AgreementReport exhaustive_agreement(int n, int m, const AgreementMode& mode);

} // namespace msgraph
