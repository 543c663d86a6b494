#include "msgraph/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace msgraph {

TriangleClass classify_triangles(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    const auto table = edge_bit_matrix(g);
    const auto nn = static_cast<std::size_t>(n);
    const auto at = [&](int u, int v) {
        return table[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)];
    };

    const std::uint64_t first = at(0, 1) ^ at(1, 2) ^ at(0, 2);
    for (int a = 0; a < n - 2; ++a) {
        for (int b = a + 1; b < n - 1; ++b) {
            const std::uint64_t ab = at(a, b);
            for (int c = b + 1; c < n; ++c) {
                const std::uint64_t sign = ab ^ at(b, c) ^ at(a, c);
                if (sign != first) {
                    TriangleClass out;
                    out.kind = TriangleClass::Kind::Mixed;
                    out.witness = {Triangle{0, 1, 2}, Triangle{a, b, c}};
                    return out;
                }
            }
        }
    }
    TriangleClass out;
    out.kind = TriangleClass::Kind::AllEqual;
    out.value = Multisign::from_bits(g.width(), first);
    return out;
}

HamiltonianClass classify_hamiltonian(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    HamiltonianClass out;
    if (n == 3) {
        out.kind = HamiltonianClass::Kind::AllSame;
        out.value = triangle_multisign(g, 0, 1, 2);
        out.basis = HamiltonianClass::Basis::BruteForce;
        return out;
    }
    const TriangleClass tri = classify_triangles(g);
    out.basis = HamiltonianClass::Basis::Theorem;
    if (tri.all_equal()) {
        out.kind = HamiltonianClass::Kind::AllSame;
        out.value = tri.value->pow_parity(static_cast<std::uint64_t>(n - 2));
    } else {
        out.kind = HamiltonianClass::Kind::Mixed;
    }
    return out;
}

BalanceCheck is_balanced(const MultisignedGraph& g) {
    const int n = g.vertex_count();
    const auto table = edge_bit_matrix(g);
    const auto nn = static_cast<std::size_t>(n);
    const auto at = [&](int u, int v) {
        return table[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)];
    };

    // theta(v) = sign(0, v); a failing edge {u, v} is exactly a non-identity
    // triangle (0, u, v), and the (u, v) scan order makes it the least one.
    for (int u = 1; u < n - 1; ++u) {
        const std::uint64_t theta_u = at(0, u);
        for (int v = u + 1; v < n; ++v) {
            if (at(u, v) != (theta_u ^ at(0, v))) {
                return BalanceCheck{false, Triangle{0, u, v}};
            }
        }
    }
    return BalanceCheck{true, std::nullopt};
}

namespace {

void check_hourglass_positions(const CycleSeq& cycle, int i, int j) {
    const int k = cycle.length();
    if (i < 0 || j >= k) {
        throw std::invalid_argument("positions (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range for cycle length " +
                                    std::to_string(k));
    }
    if (i >= j) {
        throw std::invalid_argument("hourglass positions require i < j, got i=" +
                                    std::to_string(i) + " j=" + std::to_string(j));
    }
    if (j == i + 1 || (i == 0 && j == k - 1)) {
        throw std::invalid_argument("boundary vertices v_i, v_{i+1}, v_j, v_{j+1} are not "
                                    "distinct for i=" + std::to_string(i) + " j=" +
                                    std::to_string(j));
    }
}

} // namespace

CycleSeq hourglass_swap(const CycleSeq& cycle, int i, int j) {
    check_hourglass_positions(cycle, i, j);
    std::vector<int> v = cycle.vertices();
    std::reverse(v.begin() + (i + 1), v.begin() + (j + 1));
    return CycleSeq(std::move(v));
}

bool hourglass_condition(const MultisignedGraph& g, const CycleSeq& cycle, int i, int j) {
    check_hourglass_positions(cycle, i, j);
    const int k = cycle.length();
    const int vi = cycle.at(i);
    const int vi1 = cycle.at(i + 1);
    const int vj = cycle.at(j);
    const int vj1 = cycle.at((j + 1) % k);
    return (g.edge_bits(vi, vi1) ^ g.edge_bits(vj, vj1)) ==
           (g.edge_bits(vi, vj) ^ g.edge_bits(vi1, vj1));
}

} // namespace msgraph
