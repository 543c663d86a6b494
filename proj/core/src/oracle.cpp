#include "msgraph/oracle.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "msgraph/gen.hpp"
#include "msgraph/io.hpp"
#include "msgraph/rng.hpp"

namespace msgraph {

namespace {

struct BitTable {
    explicit BitTable(const MultisignedGraph& g)
        : n(static_cast<std::size_t>(g.vertex_count())), table(edge_bit_matrix(g)) {}

    std::uint64_t operator()(int u, int v) const {
        return table[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
    }

    std::size_t n;
    std::vector<std::uint64_t> table;
};

// Depth-first walk over all paths 0, v_1, ..., v_{n-1}; the reflection of a
// cycle is skipped by requiring v_1 < v_{n-1} when placing the final vertex.
void walk_hamiltonian(const BitTable& sign, int n, std::vector<int>& path,
                      std::vector<bool>& used, int depth, std::uint64_t acc,
                      std::unordered_map<std::uint64_t, std::uint64_t>& tally) {
    if (depth == n) {
        tally[acc ^ sign(path[static_cast<std::size_t>(n - 1)], 0)] += 1;
        return;
    }
    const bool last = depth == n - 1;
    for (int v = 1; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (last && v < path[1]) continue;
        used[static_cast<std::size_t>(v)] = true;
        path[static_cast<std::size_t>(depth)] = v;
        walk_hamiltonian(sign, n, path, used, depth + 1,
                         acc ^ sign(path[static_cast<std::size_t>(depth - 1)], v), tally);
        used[static_cast<std::size_t>(v)] = false;
    }
}

} // namespace

HamiltonianSurvey enumerate_hamiltonian(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    if (n > hamiltonian_enumeration_cap) {
        throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                                    std::to_string(hamiltonian_enumeration_cap) +
                                    "; use the theorem classifier instead");
    }
    const BitTable sign(g);
    std::vector<int> path(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[0] = true;
    std::unordered_map<std::uint64_t, std::uint64_t> tally;
    walk_hamiltonian(sign, n, path, used, 1, 0, tally);

    HamiltonianSurvey out;
    out.n = n;
    out.m = g.width();
    for (const auto& [bits, count] : tally) {
        out.counts.emplace(Multisign::from_bits(g.width(), bits), count);
        out.total += count;
    }
    return out;
}

bool CycleCensus::identity_only() const {
    for (const auto& [len, counts] : by_length) {
        for (const auto& [sign, count] : counts) {
            if (!sign.is_identity() && count > 0) return false;
        }
    }
    return true;
}

namespace {

// Paths anchored at their smallest vertex; every extension by one vertex
// closes into a distinct cycle, counted when v_1 < v_last.
void walk_cycles(const BitTable& sign, int n, std::vector<int>& path, std::vector<bool>& used,
                 std::uint64_t acc,
                 std::map<int, std::unordered_map<std::uint64_t, std::uint64_t>>& tally) {
    const int depth = static_cast<int>(path.size());
    const int anchor = path[0];
    for (int v = anchor + 1; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        const std::uint64_t acc_v =
            acc ^ sign(path[static_cast<std::size_t>(depth - 1)], v);
        if (depth >= 2 && path[1] < v) {
            tally[depth + 1][acc_v ^ sign(v, anchor)] += 1;
        }
        used[static_cast<std::size_t>(v)] = true;
        path.push_back(v);
        walk_cycles(sign, n, path, used, acc_v, tally);
        path.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
}

} // namespace

CycleCensus enumerate_all_cycles(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    if (n > all_cycles_enumeration_cap) {
        throw std::invalid_argument("n=" + std::to_string(n) +
                                    " exceeds the all-cycles enumeration cap " +
                                    std::to_string(all_cycles_enumeration_cap));
    }
    const BitTable sign(g);
    CycleCensus out;
    out.n = n;
    out.m = g.width();
    std::map<int, std::unordered_map<std::uint64_t, std::uint64_t>> tally;
    for (int anchor = 0; anchor + 2 < n; ++anchor) {
        std::vector<int> path{anchor};
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        used[static_cast<std::size_t>(anchor)] = true;
        walk_cycles(sign, n, path, used, 0, tally);
    }
    for (const auto& [len, counts] : tally) {
        auto& dest = out.by_length[len];
        for (const auto& [bits, count] : counts) {
            dest.emplace(Multisign::from_bits(g.width(), bits), count);
            out.total += count;
        }
    }
    return out;
}

bool fan_decomposition_check(const MultisignedGraph& g, const CycleSeq& cycle) {
    const auto& v = cycle.vertices();
    const int k = cycle.length();
    std::uint64_t fan = 0;
    for (int i = 1; i + 1 < k; ++i) {
        fan ^= triangle_multisign(g, v[0], v[static_cast<std::size_t>(i)],
                                  v[static_cast<std::size_t>(i + 1)])
                   .bits();
    }
    return fan == cycle_multisign(g, cycle).bits();
}

namespace {

bool survey_agrees(const HamiltonianClass& verdict, const HamiltonianSurvey& survey) {
    if (verdict.all_same()) {
        return survey.counts.size() == 1 && survey.counts.begin()->first == *verdict.value;
    }
    return survey.counts.size() >= 2;
}

void check_one(const MultisignedGraph& g, AgreementReport& report) {
    const HamiltonianClass verdict = classify_hamiltonian(g);
    const HamiltonianSurvey survey = enumerate_hamiltonian(g);
    report.instances += 1;
    if (!survey_agrees(verdict, survey)) {
        report.mismatches.push_back(serialize_graph(g));
    }
}

// Random mode cycles through four instance families so that both verdict
// branches show up: fair and sparse random graphs, switched constants
// (AllSame with an arbitrary value), and planted mixed graphs.
MultisignedGraph random_instance(int n, int m, std::uint64_t seed, std::uint64_t trial) {
    const std::uint64_t key = mix_key(seed, trial);
    SplitMix64 rng(key);
    switch (trial % 4) {
        case 0:
            return gen_random(n, m, rng.next(), 0.5);
        case 1:
            return gen_random(n, m, rng.next(), 0.15);
        case 2: {
            const std::uint64_t mask =
                m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
            const Multisign value = Multisign::from_bits(m, rng.next() & mask);
            std::vector<Multisign> theta;
            theta.reserve(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                theta.push_back(Multisign::from_bits(m, rng.next() & mask));
            }
            return apply_switching(MultisignedGraph::constant(n, value), theta);
        }
        default:
            return n >= 4 ? gen_planted_mixed(n, m, rng.next()).graph
                          : gen_random(n, m, rng.next(), 0.5);
    }
}

} // namespace

AgreementReport exhaustive_agreement(int n, int m, const AgreementMode& mode) {
    AgreementReport report;
    report.n = n;
    report.m = m;
    report.mode = mode;
    const auto start = std::chrono::steady_clock::now();

    if (mode.kind == AgreementMode::Kind::Exhaustive) {
        const GraphSpace space(n, m);  // rejects spaces above the 2^24 cap
        for (std::uint64_t idx = 0; idx < space.size(); ++idx) {
            check_one(space.at(idx), report);
        }
    } else {
        if (n > hamiltonian_enumeration_cap) {
            throw std::invalid_argument("random agreement needs n <= " +
                                        std::to_string(hamiltonian_enumeration_cap) +
                                        ", got n=" + std::to_string(n));
        }
        for (std::uint64_t t = 0; t < mode.trials; ++t) {
            check_one(random_instance(n, m, mode.seed, t), report);
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace msgraph
