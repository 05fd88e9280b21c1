#include "fastchase/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fastchase {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial)));
}

namespace {

// uniform in (0, 1], 53-bit resolution
double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

// Distinct values drawn from pool without replacement (partial
// Fisher-Yates). Index selection is a plain modulo of the raw engine
// output, not std::uniform_int_distribution, so draws replay identically
// on every platform.
std::vector<unsigned> sample_without_replacement(std::vector<unsigned>& pool, unsigned count,
                                                 std::mt19937_64& rng) {
    if (count > pool.size()) throw std::invalid_argument("sample larger than pool");
    for (unsigned i = 0; i < count; ++i) {
        std::size_t pick = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[pick]);
    }
    return {pool.begin(), pool.begin() + count};
}

}  // namespace

double normal_sample(std::mt19937_64& rng) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    double u1 = uniform_open(rng);
    double u2 = uniform_open(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

ChannelSample awgn_sample(const CodeParams& params, const BitVector& codeword, double snr_db,
                          std::uint64_t seed) {
    if (codeword.size() != params.n()) throw std::invalid_argument("codeword length must equal n");
    if (!std::isfinite(snr_db)) throw std::invalid_argument("snr must be finite");
    const double es_n0 = std::pow(10.0, snr_db / 10.0);
    const double sigma = std::sqrt(1.0 / (2.0 * es_n0));
    std::mt19937_64 rng = trial_rng(seed, 0);

    ChannelSample s;
    s.codeword = codeword;
    s.hard_bits.resize(params.n());
    s.error.resize(params.n());
    s.reliabilities.resize(params.n());
    for (unsigned i = 0; i < params.n(); ++i) {
        double tx = codeword[i] ? -1.0 : 1.0;
        double rx = tx + sigma * normal_sample(rng);
        std::uint8_t hard = rx < 0.0 ? 1 : 0;
        s.hard_bits[i] = hard;
        s.error[i] = hard ^ codeword[i];
        s.reliabilities[i] = std::fabs(rx);
    }
    return s;
}

ChannelSample inject(const CodeParams& params, const BitVector& codeword,
                     const InjectionSpec& spec) {
    if (codeword.size() != params.n()) throw std::invalid_argument("codeword length must equal n");
    if (spec.eta > params.n()) throw std::invalid_argument("eta exceeds code length");
    if (spec.inside > std::min(spec.epsilon, spec.eta))
        throw std::invalid_argument("inside exceeds min(epsilon, eta)");
    if (spec.epsilon - spec.inside > params.n() - spec.eta)
        throw std::invalid_argument("too many errors outside the unreliable set");

    std::mt19937_64 rng = trial_rng(spec.seed, 0);
    std::vector<unsigned> all(params.n());
    std::iota(all.begin(), all.end(), 0u);
    std::vector<unsigned> unreliable = sample_without_replacement(all, spec.eta, rng);

    std::vector<unsigned> inside_pool = unreliable;
    std::vector<unsigned> error_positions = sample_without_replacement(inside_pool, spec.inside, rng);
    std::vector<unsigned> outside_pool;
    for (unsigned p = 0; p < params.n(); ++p)
        if (std::find(unreliable.begin(), unreliable.end(), p) == unreliable.end())
            outside_pool.push_back(p);
    auto outside = sample_without_replacement(outside_pool, spec.epsilon - spec.inside, rng);
    error_positions.insert(error_positions.end(), outside.begin(), outside.end());

    ChannelSample s;
    s.codeword = codeword;
    s.error.assign(params.n(), 0);
    for (unsigned p : error_positions) s.error[p] = 1;
    s.hard_bits.resize(params.n());
    for (unsigned i = 0; i < params.n(); ++i) s.hard_bits[i] = codeword[i] ^ s.error[i];

    // scores: the eta chosen positions strictly below everything else, with
    // deterministic distinct values inside each band
    s.reliabilities.assign(params.n(), 0.0);
    for (unsigned i = 0; i < params.n(); ++i) s.reliabilities[i] = 1.0 + i * 1e-3;
    for (unsigned r = 0; r < unreliable.size(); ++r)
        s.reliabilities[unreliable[r]] = 0.1 + r * 1e-3;
    return s;
}

FalseFireResult false_fire_experiment(const CodeParams& params, unsigned epsilon,
                                      unsigned path_len, std::uint64_t trials, std::uint64_t seed,
                                      bool path_disjoint_from_errors) {
    if (epsilon < 1 || epsilon > params.n()) throw std::invalid_argument("bad error weight");
    if (path_len < 1 || path_len > params.n()) throw std::invalid_argument("bad path length");
    const auto& F = params.field();

    FalseFireResult result;
    result.trials = trials;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = trial_rng(seed, trial);
        std::vector<unsigned> all(params.n());
        std::iota(all.begin(), all.end(), 0u);
        auto error_positions = sample_without_replacement(all, epsilon, rng);

        std::vector<unsigned> path_pool;
        if (path_disjoint_from_errors) {
            for (unsigned p = 0; p < params.n(); ++p)
                if (std::find(error_positions.begin(), error_positions.end(), p) ==
                    error_positions.end())
                    path_pool.push_back(p);
        } else {
            path_pool.assign(all.begin(), all.end());
        }
        auto path = sample_without_replacement(path_pool, path_len, rng);

        Syndrome S = syndrome_of_support(params, error_positions);
        auto ms = modified_syndrome(F, S, params.t());
        KeyBasis key = solve_key_basis(F, ms, params.t());
        UnreliableSet pre = build_unreliable_set(params, key, path);

        EdgeBasis basis{{Polynomial::constant(F.one()), Polynomial{}},
                        {Polynomial{}, Polynomial::constant(F.one())},
                        0,
                        {}};
        for (unsigned depth = 1; depth <= path_len; ++depth) {
            const UnreliablePosition& pos = pre.positions[depth - 1];
            const std::uint64_t before = mul_ops();
            EdgeResult res = koetter_edge(F, basis, pos, key.w);
            if (mul_ops() - before > 4ull * depth + 1) ++result.mul_bound_violations;
            ++result.edges;
            edge_invariants_ok(params, res.basis, pre, key.w, &result.degree_bound_violations,
                               &result.membership_violations);
            auto fire = stopping_criterion(depth, res.delta1, res.delta2, basis, key.w);
            if (fire) {
                ++result.fires;
                // the two evaluation strategies must agree on every fire
                const ModulePair& v = *fire == 0 ? basis.g1 : basis.g2;
                auto a = evaluate_gcd_division(params, v, key, pre);
                auto b = evaluate_derivative_screen(params, v, key, pre, S);
                if (a.has_value() != b.has_value() || (a && *a != *b)) ++result.eval_mismatches;
            }
            basis = std::move(res.basis);
        }
    }
    if (result.edges > 0)
        result.rate = static_cast<double>(result.fires) / static_cast<double>(result.edges);
    return result;
}

}  // namespace fastchase
