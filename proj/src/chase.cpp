#include "fastchase/chase.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fastchase {

std::vector<ScheduleEdge> build_tree_schedule(unsigned eta, unsigned r_max) {
    if (r_max < 1 || r_max > eta) throw std::invalid_argument("need 1 <= r_max <= eta");
    if (eta > 255) throw std::invalid_argument("eta too large for the schedule");
    // guard against runaway subset counts
    double count = 0;
    double binom = 1;
    for (unsigned r = 1; r <= r_max; ++r) {
        binom = binom * (eta - r + 1) / r;
        count += binom;
        if (count > double(1u << 26)) throw std::invalid_argument("flip tree too large");
    }
    std::vector<ScheduleEdge> edges;
    edges.reserve(static_cast<std::size_t>(count));
    // depth-first, children in increasing flip order, parent = child minus
    // its largest flip
    struct Frame {
        unsigned next;
        unsigned depth;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next >= eta) {
            stack.pop_back();
            continue;
        }
        unsigned flip = top.next++;
        unsigned depth = top.depth + 1;
        edges.push_back({static_cast<std::uint8_t>(depth), static_cast<std::uint8_t>(flip)});
        if (depth < r_max) stack.push_back({flip + 1, depth});
    }
    return edges;
}

UnreliableSet build_unreliable_set(const CodeParams& params, const KeyBasis& key,
                                   const std::vector<unsigned>& positions) {
    const auto& F = params.field();
    UnreliableSet pre;
    const std::size_t size = std::size_t(1) << F.s();
    pre.h1_table.assign(size, FieldElement{});
    pre.h2_table.assign(size, FieldElement{});
    pre.dh1_table.assign(size, FieldElement{});
    pre.dh2_table.assign(size, FieldElement{});
    Polynomial dh1 = formal_derivative(key.hhat1);
    Polynomial dh2 = formal_derivative(key.hhat2);
    for (unsigned i = 0; i < F.n(); ++i) {
        FieldElement x = F.exp(i);
        pre.h1_table[x.value] = eval(F, key.hhat1, x);
        pre.h2_table[x.value] = eval(F, key.hhat2, x);
        pre.dh1_table[x.value] = eval(F, dh1, x);
        pre.dh2_table[x.value] = eval(F, dh2, x);
    }
    pre.positions.reserve(positions.size());
    std::set<unsigned> seen;
    for (unsigned p : positions) {
        if (p >= params.n()) throw std::invalid_argument("coordinate out of range");
        if (!seen.insert(p).second) throw std::invalid_argument("duplicate unreliable coordinate");
        UnreliablePosition u;
        u.position = p;
        u.alpha = F.exp(p);
        u.alpha_inv = F.exp(-static_cast<long long>(p));
        u.alpha_inv_sq = F.exp(-2 * static_cast<long long>(p));
        u.h1_at_inv = pre.h1_table[u.alpha_inv.value];
        u.h2_at_inv = pre.h2_table[u.alpha_inv.value];
        if (!u.h1_at_inv.is_zero()) {
            u.ratio = F.div(u.h2_at_inv, u.h1_at_inv);
        } else if (u.h2_at_inv.is_zero()) {
            // basis vectors of N are coprime after gluing
            throw std::logic_error("hhat1 and hhat2 share a root");
        }
        pre.positions.push_back(u);
    }
    return pre;
}

namespace {

FieldElement edge_discrepancy(const FieldContext& F, const ModulePair& g,
                              const UnreliablePosition& pos) {
    if (!pos.h1_at_inv.is_zero()) {
        FieldElement a = eval(F, g.g0, pos.alpha_inv_sq);
        FieldElement b = eval(F, g.g1, pos.alpha_inv_sq);
        return F.add(a, F.mul(pos.ratio, b));
    }
    return eval(F, g.g1, pos.alpha_inv_sq);
}

}  // namespace

EdgeResult koetter_edge(const FieldContext& F, const EdgeBasis& basis,
                        const UnreliablePosition& pos, Weight2 w) {
    const ModulePair* g[2] = {&basis.g1, &basis.g2};
    FieldElement delta[2] = {edge_discrepancy(F, basis.g1, pos),
                             edge_discrepancy(F, basis.g2, pos)};
    // at most one discrepancy can vanish: L(path) strictly contains
    // L(path + alpha); both zero means the flip was already on the path
    if (delta[0].is_zero() && delta[1].is_zero())
        throw std::logic_error("both discrepancies vanished on an edge");

    int jstar;
    if (delta[0].is_zero()) jstar = 1;
    else if (delta[1].is_zero()) jstar = 0;
    else {
        auto c = compare_monomials(leading_monomial(basis.g1, w), leading_monomial(basis.g2, w), w);
        jstar = c == std::strong_ordering::less ? 0 : 1;
    }

    EdgeResult out;
    out.delta1 = delta[0];
    out.delta2 = delta[1];
    out.jstar = jstar;

    ModulePair plus[2];
    for (int j = 0; j < 2; ++j) {
        if (j == jstar) continue;
        if (delta[j].is_zero()) {
            plus[j] = *g[j];
        } else {
            // g+_j = (Delta_{j*}/Delta_j) g_j + g_{j*}: both vectors get
            // exactly one scalar multiplication per edge
            plus[j] = pair_add(pair_scale(F, *g[j], F.div(delta[jstar], delta[j])), *g[jstar]);
        }
    }
    // g+_{j*} = (X + alpha^-2) g_{j*}
    plus[jstar] = pair_add(pair_shift(*g[jstar]), pair_scale(F, *g[jstar], pos.alpha_inv_sq));

    out.basis.g1 = std::move(plus[0]);
    out.basis.g2 = std::move(plus[1]);
    out.basis.depth = basis.depth + 1;
    out.basis.path = basis.path;
    out.basis.path.push_back(pos.position);
    return out;
}

std::optional<int> stopping_criterion(unsigned depth, FieldElement delta1, FieldElement delta2,
                                      const EdgeBasis& before, Weight2 w) {
    if (depth <= 1) return delta1.is_zero() ? std::optional<int>(0) : std::nullopt;
    auto c = compare_monomials(leading_monomial(before.g1, w), leading_monomial(before.g2, w), w);
    int jmin = c == std::strong_ordering::less ? 0 : 1;
    FieldElement d = jmin == 0 ? delta1 : delta2;
    return d.is_zero() ? std::optional<int>(jmin) : std::nullopt;
}

namespace {

// degree of u1(X^2) hhat1 + u2(X^2) hhat2 from the component degrees; the
// two contributions always have distinct parities
int glued_degree(const KeyBasis& key, const Polynomial& f1, const Polynomial& f2) {
    int deg = kZeroPolyDegree;
    if (!f1.is_zero()) deg = std::max(deg, 2 * f1.degree() + 2 * key.h1.g0.degree() + 1);
    if (!f2.is_zero()) deg = std::max(deg, 2 * f2.degree() + 2 * key.h2.g1.degree());
    return deg;
}

}  // namespace

std::optional<std::vector<unsigned>> evaluate_gcd_division(const CodeParams& params,
                                                           const ModulePair& g,
                                                           const KeyBasis& key,
                                                           const UnreliableSet& pre) {
    const auto& F = params.field();
    if (g.is_zero()) throw std::invalid_argument("cannot evaluate the zero vector");
    Polynomial t;
    if (g.g0.is_zero()) t = monic(F, g.g1);
    else if (g.g1.is_zero()) t = monic(F, g.g0);
    else t = gcd(F, g.g0, g.g1);
    Polynomial f1 = g.g0.is_zero() ? Polynomial{} : divide_exact(F, g.g0, t);
    Polynomial f2 = g.g1.is_zero() ? Polynomial{} : divide_exact(F, g.g1, t);

    std::vector<unsigned> locations;
    const long long n = params.n();
    for (long long i = 0; i < n; ++i) {
        // x = gamma^i, evaluate at x^-1 and x^-2 via the stored tables
        FieldElement xinv = F.exp(n - i);
        FieldElement xinv2 = F.exp(2 * (n - i));
        FieldElement a = eval(F, f1, xinv2);
        FieldElement b = eval(F, f2, xinv2);
        FieldElement v = F.add(F.mul(a, pre.h1_table[xinv.value]),
                               F.mul(b, pre.h2_table[xinv.value]));
        if (v.is_zero()) locations.push_back(static_cast<unsigned>(i));
    }
    int delta = glued_degree(key, f1, f2);
    if (delta != static_cast<int>(locations.size())) return std::nullopt;
    return locations;
}

std::optional<std::vector<unsigned>> evaluate_derivative_screen(const CodeParams& params,
                                                                const ModulePair& g,
                                                                const KeyBasis&,
                                                                const UnreliableSet& pre,
                                                                const Syndrome& S) {
    const auto& F = params.field();
    if (g.is_zero()) throw std::invalid_argument("cannot evaluate the zero vector");
    std::vector<unsigned> locations;
    const long long n = params.n();
    for (long long i = 0; i < n; ++i) {
        FieldElement xinv = F.exp(n - i);
        FieldElement xinv2 = F.exp(2 * (n - i));
        FieldElement a = eval(F, g.g0, xinv2);
        FieldElement b = eval(F, g.g1, xinv2);
        FieldElement sig = F.add(F.mul(a, pre.h1_table[xinv.value]),
                                 F.mul(b, pre.h2_table[xinv.value]));
        if (!sig.is_zero()) continue;
        FieldElement dsig = F.add(F.mul(a, pre.dh1_table[xinv.value]),
                                  F.mul(b, pre.dh2_table[xinv.value]));
        if (!dsig.is_zero()) locations.push_back(static_cast<unsigned>(i));
    }
    // verify by recomputing the syndrome of the candidate support; only the
    // odd values need comparing, and they cost no field multiplications
    Syndrome check = syndrome_of_support(params, locations);
    if (!odd_syndromes_equal(check, S)) return std::nullopt;
    return locations;
}

namespace {

struct TraversalHooks {
    bool run_evaluations = true;
    bool check_invariants = true;
};

Candidate make_candidate(const CodeParams& params, const std::vector<unsigned>& locations,
                         const std::vector<unsigned>& path,
                         Candidate::Verification verification) {
    Candidate c;
    c.error.assign(params.n(), 0);
    for (unsigned p : locations) c.error[p] = 1;
    c.support = locations;
    std::sort(c.support.begin(), c.support.end());
    c.path = path;
    c.verification = verification;
    return c;
}

ChaseOutcome traverse(const CodeParams& params, const KeyBasis& key, const Syndrome& S,
                      const UnreliableSet& pre, const ChaseConfig& cfg,
                      const TraversalHooks& hooks) {
    const auto& F = params.field();
    Weight2 w = key.w;
    if (cfg.integer_weight_order) w = Weight2::halves(w.twice_w - 1);

    auto schedule = build_tree_schedule(cfg.eta, cfg.r_max);

    ChaseOutcome out;
    out.stats.per_depth.assign(cfg.r_max, DepthStats{});
    std::set<std::vector<unsigned>> seen_supports;

    std::vector<EdgeBasis> slots(cfg.r_max + 1);
    slots[0] = EdgeBasis{{Polynomial::constant(F.one()), Polynomial{}},
                         {Polynomial{}, Polynomial::constant(F.one())},
                         0,
                         {}};

    for (const ScheduleEdge& e : schedule) {
        const EdgeBasis& parent = slots[e.depth - 1];
        const UnreliablePosition& pos = pre.positions[e.flip_index];

        const std::uint64_t before = mul_ops();
        EdgeResult res = koetter_edge(F, parent, pos, w);
        const std::uint64_t cost = mul_ops() - before;

        out.stats.edges++;
        out.stats.update_muls += cost;
        auto& ds = out.stats.per_depth[e.depth - 1];
        ds.edges++;
        ds.update_muls += cost;
        ds.max_edge_muls = std::max(ds.max_edge_muls, cost);
        if (cost > 4ull * e.depth + 1) out.stats.mul_bound_violations++;

        if (hooks.check_invariants) {
            edge_invariants_ok(params, res.basis, pre, w, &out.stats.degree_bound_violations,
                               &out.stats.membership_violations);
        }

        if (hooks.run_evaluations) {
            auto fire = stopping_criterion(e.depth, res.delta1, res.delta2, parent, w);
            if (fire) {
                out.stats.fires++;
                const ModulePair& v = *fire == 0 ? parent.g1 : parent.g2;
                const std::uint64_t eb = mul_ops();
                std::optional<std::vector<unsigned>> locations;
                Candidate::Verification tag;
                if (cfg.eval_method == EvalMethod::GcdDivision) {
                    locations = evaluate_gcd_division(params, v, key, pre);
                    tag = Candidate::Verification::DegreeCheck;
                } else {
                    locations = evaluate_derivative_screen(params, v, key, pre, S);
                    tag = Candidate::Verification::SyndromeCheck;
                }
                out.stats.eval_muls += mul_ops() - eb;
                if (locations) {
                    auto cand = make_candidate(params, *locations, res.basis.path, tag);
                    if (seen_supports.insert(cand.support).second)
                        out.candidates.push_back(std::move(cand));
                    if (!cfg.collect_all) return out;
                } else {
                    out.stats.false_fires++;
                }
            }
        }

        slots[e.depth] = std::move(res.basis);
    }
    return out;
}

}  // namespace

ChaseOutcome chase_decode_with_set(const CodeParams& params, const KeyBasis& key,
                                   const Syndrome& S, const std::vector<unsigned>& positions,
                                   const ChaseConfig& cfg) {
    if (cfg.eta != positions.size()) throw std::invalid_argument("eta must match position count");
    if (cfg.r_max < 1 || cfg.r_max > cfg.eta) throw std::invalid_argument("need 1 <= r_max <= eta");
    UnreliableSet pre = build_unreliable_set(params, key, positions);
    return traverse(params, key, S, pre, cfg, TraversalHooks{});
}

ChaseOutcome chase_decode(const CodeParams& params, const KeyBasis& key, const Syndrome& S,
                          const std::vector<double>& reliabilities, const ChaseConfig& cfg) {
    if (reliabilities.size() != params.n())
        throw std::invalid_argument("need one reliability score per coordinate");
    if (cfg.eta > params.n()) throw std::invalid_argument("eta exceeds code length");
    // eta least reliable, ties to the lower coordinate index
    std::vector<unsigned> order(params.n());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
        return reliabilities[a] < reliabilities[b];
    });
    order.resize(cfg.eta);
    return chase_decode_with_set(params, key, S, order, cfg);
}

const Candidate* best_candidate(const ChaseOutcome& outcome,
                                const std::vector<double>& reliabilities) {
    const Candidate* best = nullptr;
    double best_score = 0;
    for (const auto& c : outcome.candidates) {
        double score = 0;
        for (unsigned p : c.support) score += reliabilities[p];
        if (!best || score < best_score) {
            best = &c;
            best_score = score;
        }
    }
    return best;
}

std::vector<DepthStats> bench_tree(const CodeParams& params, const KeyBasis& key,
                                   const std::vector<unsigned>& positions, unsigned r_max) {
    UnreliableSet pre = build_unreliable_set(params, key, positions);
    ChaseConfig cfg;
    cfg.eta = static_cast<unsigned>(positions.size());
    cfg.r_max = r_max;
    TraversalHooks hooks;
    hooks.run_evaluations = false;
    hooks.check_invariants = false;
    Syndrome dummy;
    dummy.values.assign(2 * params.t(), FieldElement{});
    ChaseOutcome out = traverse(params, key, dummy, pre, cfg, hooks);
    return out.stats.per_depth;
}

bool edge_invariants_ok(const CodeParams& params, const EdgeBasis& basis,
                        const UnreliableSet& pre, Weight2 w, std::uint64_t* degree_violations,
                        std::uint64_t* membership_violations) {
    const auto& F = params.field();
    bool ok = true;
    const unsigned r = basis.depth;

    // sum of degrees of all nonzero coordinate polynomials <= 2r - 1
    long long degsum = 0;
    for (const Polynomial* p : {&basis.g1.g0, &basis.g1.g1, &basis.g2.g0, &basis.g2.g1})
        if (!p->is_zero()) degsum += p->degree();
    // leading-monomial degrees: lm(g1) left, lm(g2) right
    bool sides_ok = !basis.g1.g0.is_zero() && !basis.g2.g1.is_zero() &&
                    leading_monomial(basis.g1, w).side == Side::Left &&
                    leading_monomial(basis.g2, w).side == Side::Right;
    long long lmsum = sides_ok ? basis.g1.g0.degree() + basis.g2.g1.degree() : 0;
    if (degsum > 2ll * r - 1 || !sides_ok || lmsum > static_cast<long long>(r)) {
        ok = false;
        if (degree_violations) ++*degree_violations;
    }

    // both vectors satisfy the membership equations at every path point
    for (unsigned coord : basis.path) {
        auto it = std::find_if(pre.positions.begin(), pre.positions.end(),
                               [coord](const UnreliablePosition& p) { return p.position == coord; });
        if (it == pre.positions.end()) continue;
        if (!edge_discrepancy(F, basis.g1, *it).is_zero() ||
            !edge_discrepancy(F, basis.g2, *it).is_zero()) {
            ok = false;
            if (membership_violations) ++*membership_violations;
            break;
        }
    }
    assert(ok);
    return ok;
}

}  // namespace fastchase
