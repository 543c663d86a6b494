#pragma once

#include <array>
#include <optional>
#include <utility>

#include "msgraph/cycle.hpp"

namespace msgraph {

// Vertex triple in ascending order.
using Triangle = std::array<int, 3>;

// Verdict over all C(n,3) triangles: either every triangle carries the same
// multisign (possibly the identity) or two triangles disagree.
struct TriangleClass {
    enum class Kind { AllEqual, Mixed };

    Kind kind = Kind::AllEqual;
    std::optional<Multisign> value;                        // set iff AllEqual
    std::optional<std::pair<Triangle, Triangle>> witness;  // set iff Mixed

    bool all_equal() const { return kind == Kind::AllEqual; }
};

// Verdict over all (n-1)!/2 Hamiltonian cycles, and which path produced it.
struct HamiltonianClass {
    enum class Kind { AllSame, Mixed };
    enum class Basis { Theorem, BruteForce };

    Kind kind = Kind::AllSame;
    std::optional<Multisign> value;  // set iff AllSame
    Basis basis = Basis::Theorem;

    bool all_same() const { return kind == Kind::AllSame; }
};

struct BalanceCheck {
    bool balanced = true;
    // Lexicographically least triangle with a non-identity multisign.
    std::optional<Triangle> violation;
};

// Full triangle sweep in lexicographic order. A Mixed witness pairs the
// least triangle with the least triangle whose multisign differs from it,
// so the verdict is deterministic however the sweep is scheduled.
TriangleClass classify_triangles(const MultisignedGraph& g);

// The triangle dichotomy lifted to Hamiltonian cycles. For n >= 4: when
// every triangle carries h, every Hamiltonian cycle carries h^(n-2) (h for
// odd n, identity for even n); when two triangles disagree, two Hamiltonian
// cycles disagree. O(n^3 * m) with no cycle enumeration. n = 3 has a single
// Hamiltonian cycle and is answered by inspecting it directly.
HamiltonianClass classify_hamiltonian(const MultisignedGraph& g);

// Vertex-potential balance test: fix theta(0) = e and theta(v) = sign(0, v);
// the graph is balanced iff sign(u, v) = theta(u) * theta(v) on every edge,
// equivalently iff every triangle (and hence every cycle) has the identity
// multisign. O(n^2 * m).
BalanceCheck is_balanced(const MultisignedGraph& g);

// The crossing swap on a cycle sequence: reverse the segment strictly
// between positions i and j+1, turning v_0..v_i v_{i+1}..v_j v_{j+1}.. into
// v_0..v_i v_j..v_{i+1} v_{j+1}... Positions are 0-based and cyclic; the
// four boundary vertices v_i, v_{i+1}, v_j, v_{j+1} must be distinct.
CycleSeq hourglass_swap(const CycleSeq& cycle, int i, int j);

// True iff sign(v_i v_{i+1}) * sign(v_j v_{j+1}) equals
// sign(v_i v_j) * sign(v_{i+1} v_{j+1}), which holds exactly when the
// swapped cycle has the same multisign as the original.
bool hourglass_condition(const MultisignedGraph& g, const CycleSeq& cycle, int i, int j);

} // namespace msgraph
