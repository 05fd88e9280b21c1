// Reproducible experiment generation: BPSK/AWGN sampling,
// deterministic error injection with controlled placement relative to the
// unreliable set, and the false-fire-rate experiment.
//
// All randomness comes from mt19937_64 seeded through splitmix64, with
// Gaussian variates from an explicit Box-Muller transform, so runs replay
// bit-identically across platforms. Each trial derives its own stream from
// (seed, trial index); trials are independent.
#ifndef FASTCHASE_CHANNEL_HPP
#define FASTCHASE_CHANNEL_HPP

#include <optional>
#include <random>

#include "fastchase/chase.hpp"

namespace fastchase {

struct ChannelSample {
    BitVector hard_bits;               // received word y = codeword xor error
    std::vector<double> reliabilities; // per-position scores, lower = less reliable
    BitVector codeword;                // transmitted truth
    BitVector error;                   // true error vector
};

struct InjectionSpec {
    unsigned epsilon = 0;  // total number of errors
    unsigned inside = 0;   // errors forced into the eta least reliable positions
    unsigned eta = 0;      // size of the synthetic unreliable set
    std::uint64_t seed = 0;
};

std::uint64_t splitmix64(std::uint64_t x);
// stream for one trial of one experiment
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
// standard normal via Box-Muller on 53-bit uniforms
double normal_sample(std::mt19937_64& rng);

// BPSK over AWGN at the given Es/N0 (dB); reliability = |channel output|
ChannelSample awgn_sample(const CodeParams& params, const BitVector& codeword, double snr_db,
                          std::uint64_t seed);

// Synthesizes reliabilities so that exactly spec.eta chosen positions are
// the least reliable, with spec.inside errors among them and the rest
// outside. Deterministic under spec.seed.
ChannelSample inject(const CodeParams& params, const BitVector& codeword,
                     const InjectionSpec& spec);

struct FalseFireResult {
    std::uint64_t trials = 0;
    std::uint64_t edges = 0;
    std::uint64_t fires = 0;
    std::optional<double> rate;  // fires / edges; empty when edges == 0
    std::uint64_t mul_bound_violations = 0;     // edges beyond 4r+1 multiplications
    std::uint64_t degree_bound_violations = 0;  // bases beyond sum deg 2r-1
    std::uint64_t membership_violations = 0;
    std::uint64_t eval_mismatches = 0;  // disagreements between the two evaluators on fires
};

// Draws weight-epsilon errors, walks the edge update along a random path
// of path_len distinct flip positions, and counts stopping-criterion
// fires. With path_disjoint_from_errors the path avoids the error support.
FalseFireResult false_fire_experiment(const CodeParams& params, unsigned epsilon,
                                      unsigned path_len, std::uint64_t trials, std::uint64_t seed,
                                      bool path_disjoint_from_errors = true);

}  // namespace fastchase

#endif
