// Tree-based fast Chase decoding: one Groebner-basis update per
// flipped coordinate, zero-discrepancy stopping criterion, and two
// exhaustive-evaluation strategies for extracting the error locations.
#ifndef FASTCHASE_CHASE_HPP
#define FASTCHASE_CHASE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fastchase/keysolve.hpp"

namespace fastchase {

enum class EvalMethod {
    GcdDivision,       // strip gcd(g0,g1), evaluate f1,f2, accept on degree match
    DerivativeScreen,  // evaluate g0,g1 against hhat and hhat' tables, verify syndrome
};

struct ChaseConfig {
    unsigned eta = 4;    // number of least-reliable positions
    unsigned r_max = 4;  // maximum flip weight, <= eta
    EvalMethod eval_method = EvalMethod::GcdDivision;
    bool collect_all = true;  // keep traversing after a verified candidate
    // Validation switch: run the traversal under the integer order weight
    // w' = 2 deg(h21) - t - 1 instead of the half-integer w. Not exposed on
    // the production path.
    bool integer_weight_order = false;
};

struct UnreliablePosition {
    FieldElement alpha;         // coordinate locator gamma^position
    unsigned position = 0;      // coordinate index
    FieldElement alpha_inv;     // alpha^-1
    FieldElement alpha_inv_sq;  // alpha^-2
    FieldElement h1_at_inv;     // hhat1(alpha^-1)
    FieldElement h2_at_inv;     // hhat2(alpha^-1)
    FieldElement ratio;         // hhat2/hhat1 at alpha^-1, valid iff h1_at_inv != 0
};

// Per-decode precomputation: the eta cached positions plus value-indexed
// tables of hhat1, hhat2 and their derivatives over all of F*.
struct UnreliableSet {
    std::vector<UnreliablePosition> positions;  // least reliable first
    std::vector<FieldElement> h1_table;         // size 2^s, index = element value
    std::vector<FieldElement> h2_table;
    std::vector<FieldElement> dh1_table;
    std::vector<FieldElement> dh2_table;
};

// Groebner basis of L(path) with leading monomials on distinct sides.
struct EdgeBasis {
    ModulePair g1;  // leading monomial on the left
    ModulePair g2;  // leading monomial on the right
    unsigned depth = 0;
    std::vector<unsigned> path;  // flipped coordinate positions, root first
};

// One edge of the depth-first flip-tree schedule: the parent sits at
// depth-1 and the child adds unreliable position flip_index.
struct ScheduleEdge {
    std::uint8_t depth;
    std::uint8_t flip_index;
};

// Depth-first enumeration of all weight <= r_max subsets of {1..eta};
// each vertex's parent drops its largest flip index, children come in
// increasing index order.
std::vector<ScheduleEdge> build_tree_schedule(unsigned eta, unsigned r_max);

UnreliableSet build_unreliable_set(const CodeParams& params, const KeyBasis& key,
                                   const std::vector<unsigned>& positions);

struct EdgeResult {
    EdgeBasis basis;
    FieldElement delta1;
    FieldElement delta2;
    int jstar;  // 0-based index of the shifted vector
};

// Algorithm A on one tree edge: adjoin the flip at pos to basis.path.
EdgeResult koetter_edge(const FieldContext& F, const EdgeBasis& basis,
                        const UnreliablePosition& pos, Weight2 w);

// Fires when the discrepancy of the minimal-weighted-degree input vector
// vanished: at depth 1 that is Delta_1, deeper it is the unique vector of
// minimal wdeg_w in the pre-update basis. Returns the 0-based index of the
// vector to evaluate, or nothing.
std::optional<int> stopping_criterion(unsigned depth, FieldElement delta1, FieldElement delta2,
                                      const EdgeBasis& before, Weight2 w);

struct Candidate {
    BitVector error;                 // length n
    std::vector<unsigned> support;   // sorted error positions
    std::vector<unsigned> path;      // flipped coordinate positions, root first
    enum class Verification { DegreeCheck, SyndromeCheck } verification;
};

// error locations E, or rejection
std::optional<std::vector<unsigned>> evaluate_gcd_division(const CodeParams& params,
                                                           const ModulePair& g,
                                                           const KeyBasis& key,
                                                           const UnreliableSet& pre);

std::optional<std::vector<unsigned>> evaluate_derivative_screen(const CodeParams& params,
                                                                const ModulePair& g,
                                                                const KeyBasis& key,
                                                                const UnreliableSet& pre,
                                                                const Syndrome& S);

struct DepthStats {
    std::uint64_t edges = 0;
    std::uint64_t update_muls = 0;
    std::uint64_t max_edge_muls = 0;
};

struct ChaseStats {
    std::uint64_t edges = 0;
    std::uint64_t fires = 0;        // evaluations triggered
    std::uint64_t false_fires = 0;  // fires that produced no accepted candidate
    std::uint64_t update_muls = 0;  // edge-update multiplications only
    std::uint64_t eval_muls = 0;    // exhaustive-evaluation multiplications
    std::uint64_t mul_bound_violations = 0;     // edges exceeding 4r+1
    std::uint64_t degree_bound_violations = 0;  // bases exceeding sum deg 2r-1
    std::uint64_t membership_violations = 0;    // bases failing the path constraints
    std::vector<DepthStats> per_depth;          // index r-1 for depth r
};

struct ChaseOutcome {
    std::vector<Candidate> candidates;
    ChaseStats stats;
};

// Full traversal: select the eta least reliable coordinates (ties to the
// lower index), precompute, walk the schedule depth first with per-depth
// basis storage, evaluate on criterion fire. reliabilities: one score per
// coordinate, lower = less reliable.
ChaseOutcome chase_decode(const CodeParams& params, const KeyBasis& key, const Syndrome& S,
                          const std::vector<double>& reliabilities, const ChaseConfig& cfg);

// Same, with the unreliable coordinate set given directly.
ChaseOutcome chase_decode_with_set(const CodeParams& params, const KeyBasis& key,
                                   const Syndrome& S, const std::vector<unsigned>& positions,
                                   const ChaseConfig& cfg);

// Chase-II style selection: candidate minimizing the summed reliability of
// its flipped-versus-received positions.
const Candidate* best_candidate(const ChaseOutcome& outcome,
                                const std::vector<double>& reliabilities);

// Forced full-tree traversal without evaluations, for complexity
// measurement; returns per-depth edge-update costs.
std::vector<DepthStats> bench_tree(const CodeParams& params, const KeyBasis& key,
                                   const std::vector<unsigned>& positions, unsigned r_max);

// Test/debug support: verify the basis invariants after an edge (degree
// sum <= 2r-1, leading-monomial degree sum <= r, membership of both
// vectors in L(path)).
bool edge_invariants_ok(const CodeParams& params, const EdgeBasis& basis,
                        const UnreliableSet& pre, Weight2 w, std::uint64_t* degree_violations,
                        std::uint64_t* membership_violations);

}  // namespace fastchase

#endif
