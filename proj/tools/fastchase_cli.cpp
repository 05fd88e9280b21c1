// Command-line front end: code info, single-shot decoding, channel
// simulation campaigns, false-fire-rate measurement, and per-edge
// complexity benchmarking. Every command is deterministic under its seed.
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fastchase/bch.hpp"
#include "fastchase/channel.hpp"
#include "fastchase/chase.hpp"
#include "fastchase/keysolve.hpp"

using nlohmann::json;
using namespace fastchase;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;

struct CodeOptions {
    unsigned s = 0;
    unsigned n = 0;
    unsigned t = 0;
    std::string prim_poly_hex;

    CodeParams build() const {
        unsigned degree = s;
        if (degree == 0) {
            if (n == 0) throw CLI::ValidationError("--s or --n is required");
            unsigned size = n + 1;
            if (size == 0 || (size & (size - 1)) != 0)
                throw CLI::ValidationError("--n must be 2^s - 1");
            degree = 0;
            for (unsigned v = size; v > 1; v >>= 1) ++degree;
        }
        std::uint32_t poly = 0;
        if (!prim_poly_hex.empty()) poly = std::stoul(prim_poly_hex, nullptr, 16);
        return CodeParams(FieldContext(degree, poly), t);
    }
};

void add_code_options(CLI::App* cmd, CodeOptions& code) {
    cmd->add_option("--s", code.s, "extension degree (code length 2^s - 1)");
    cmd->add_option("--n", code.n, "code length (must be 2^s - 1)");
    cmd->add_option("--t", code.t, "designed error-correction radius")->required();
    cmd->add_option("--prim-poly", code.prim_poly_hex,
                    "primitive polynomial as a hex bitmask, e.g. 0x11D");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

std::vector<double> parse_reliabilities(const std::string& text) {
    std::vector<double> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

EvalMethod parse_eval(const std::string& name) {
    if (name == "gcd") return EvalMethod::GcdDivision;
    if (name == "deriv") return EvalMethod::DerivativeScreen;
    throw CLI::ValidationError("--eval must be gcd or deriv");
}

unsigned weight(const BitVector& bits) {
    unsigned w = 0;
    for (auto b : bits) w += b;
    return w;
}

BitVector xor_bits(const BitVector& a, const BitVector& b) {
    BitVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

json candidate_json(const Candidate& c, bool best) {
    json j;
    j["error"] = bits_to_hex(c.error);
    j["weight"] = c.support.size();
    j["support"] = c.support;
    j["path"] = c.path;
    j["verification"] =
        c.verification == Candidate::Verification::DegreeCheck ? "degree" : "syndrome";
    j["best"] = best;
    return j;
}

json stats_json(const ChaseStats& st) {
    json j;
    j["edges"] = st.edges;
    j["fires"] = st.fires;
    j["false_fires"] = st.false_fires;
    j["update_muls"] = st.update_muls;
    j["eval_muls"] = st.eval_muls;
    j["mul_bound_violations"] = st.mul_bound_violations;
    j["degree_bound_violations"] = st.degree_bound_violations;
    j["membership_violations"] = st.membership_violations;
    return j;
}

int run_info(const CodeOptions& code, const std::string& out_path) {
    CodeParams params = code.build();
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "n=" << params.n() << " k=" << params.k() << " d=" << params.d()
       << " t=" << params.t() << '\n';
    os << "prim_poly=0x" << std::hex << params.field().prim_poly() << std::dec << '\n';
    os << "generator=" << to_string(params.generator()) << '\n';
    return kExitSuccess;
}

struct DecodeOptions {
    std::string y_hex;
    std::string rel_text;
    unsigned eta = 8;
    unsigned rmax = 3;
    std::string eval = "gcd";
    bool first_hit = false;
};

int run_decode(const CodeOptions& code, const DecodeOptions& opt, const std::string& out_path) {
    CodeParams params = code.build();
    BitVector y = hex_to_bits(opt.y_hex, params.n());
    std::vector<double> rel;
    if (!opt.rel_text.empty()) {
        rel = parse_reliabilities(opt.rel_text);
        if (rel.size() != params.n())
            throw CLI::ValidationError("reliability count must equal n");
    }

    json out;
    out["n"] = params.n();
    out["k"] = params.k();
    out["t"] = params.t();

    Syndrome S = syndrome(params, y);
    out["syndrome_zero"] = S.all_zero();

    std::optional<BitVector> decoded_error;
    auto hd = hd_decode(params, S);
    json hd_json;
    hd_json["success"] = hd.has_value();
    if (hd) {
        hd_json["error"] = bits_to_hex(*hd);
        hd_json["weight"] = weight(*hd);
        decoded_error = hd;
    }
    out["hd"] = hd_json;

    if (!hd && !rel.empty()) {
        auto ms = modified_syndrome(params.field(), S, params.t());
        KeyBasis key = solve_key_basis(params.field(), ms, params.t());
        ChaseConfig cfg;
        cfg.eta = opt.eta;
        cfg.r_max = opt.rmax;
        cfg.eval_method = parse_eval(opt.eval);
        cfg.collect_all = !opt.first_hit;
        ChaseOutcome outcome = chase_decode(params, key, S, rel, cfg);
        const Candidate* best = best_candidate(outcome, rel);

        json chase_json;
        chase_json["candidates"] = json::array();
        for (const auto& c : outcome.candidates)
            chase_json["candidates"].push_back(candidate_json(c, &c == best));
        chase_json["stats"] = stats_json(outcome.stats);
        out["chase"] = chase_json;
        if (best) decoded_error = best->error;
    }

    if (decoded_error) out["decoded"] = bits_to_hex(xor_bits(y, *decoded_error));
    else out["decoded"] = nullptr;

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << out.dump(2) << '\n';
    return decoded_error ? kExitSuccess : kExitDecodeFailure;
}

struct SimulateOptions {
    std::vector<double> snr_db;
    unsigned epsilon = 0;
    unsigned inside = 0;
    unsigned eta = 8;
    unsigned rmax = 3;
    std::string eval = "gcd";
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    bool first_hit = false;
};

struct TrialStats {
    std::uint64_t raw_bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t successes = 0;
    std::uint64_t chase_frames = 0;
    ChaseStats chase;
};

void accumulate(TrialStats& agg, const ChaseStats& st) {
    agg.chase.edges += st.edges;
    agg.chase.fires += st.fires;
    agg.chase.false_fires += st.false_fires;
    agg.chase.update_muls += st.update_muls;
    agg.chase.eval_muls += st.eval_muls;
}

// decode pipeline shared by the campaign modes; returns the error estimate
std::optional<BitVector> pipeline_decode(const CodeParams& params, const ChannelSample& sample,
                                         const ChaseConfig& cfg, TrialStats& agg) {
    Syndrome S = syndrome(params, sample.hard_bits);
    if (S.all_zero()) return BitVector(params.n(), 0);
    if (auto hd = hd_decode(params, S)) return hd;
    auto ms = modified_syndrome(params.field(), S, params.t());
    KeyBasis key = solve_key_basis(params.field(), ms, params.t());
    ChaseOutcome outcome = chase_decode(params, key, S, sample.reliabilities, cfg);
    agg.chase_frames++;
    accumulate(agg, outcome.stats);
    const Candidate* best = best_candidate(outcome, sample.reliabilities);
    if (!best) return std::nullopt;
    return best->error;
}

double ratio(std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

int run_simulate(const CodeOptions& code, const SimulateOptions& opt,
                 const std::string& out_path) {
    CodeParams params = code.build();
    ChaseConfig cfg;
    cfg.eta = opt.eta;
    cfg.r_max = opt.rmax;
    cfg.eval_method = parse_eval(opt.eval);
    cfg.collect_all = !opt.first_hit;

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);

    const bool inject_mode = opt.snr_db.empty();
    if (inject_mode && opt.epsilon == 0)
        throw CLI::ValidationError("give --snr values or an --epsilon injection spec");

    if (inject_mode) {
        os << "mode,epsilon,inside,eta,rmax,eval,trials,seed,success_rate,chase_frames,"
              "avg_edges,avg_fires,avg_false_fires,avg_update_muls,avg_eval_muls\n";
    } else {
        os << "mode,snr_db,eta,rmax,eval,trials,seed,raw_ber,fer,ber,chase_frames,"
              "avg_edges,avg_fires,avg_false_fires,avg_update_muls,avg_eval_muls\n";
    }

    if (opt.trials == 0) return kExitSuccess;  // header-only output

    const std::size_t runs = inject_mode ? 1 : opt.snr_db.size();
    for (std::size_t run = 0; run < runs; ++run) {
        const std::uint64_t run_seed = splitmix64(opt.seed ^ (run + 1));
        TrialStats agg;
        for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
            auto rng = trial_rng(run_seed, trial);
            BitVector message(params.k());
            for (auto& b : message) b = static_cast<std::uint8_t>(rng() & 1);
            BitVector cw = encode(params, message);

            ChannelSample sample;
            if (inject_mode) {
                InjectionSpec spec;
                spec.epsilon = opt.epsilon;
                spec.inside = opt.inside;
                spec.eta = opt.eta;
                spec.seed = rng();
                sample = inject(params, cw, spec);
            } else {
                sample = awgn_sample(params, cw, opt.snr_db[run], rng());
            }

            agg.raw_bit_errors += weight(sample.error);
            auto decoded = pipeline_decode(params, sample, cfg, agg);
            BitVector residual = decoded ? xor_bits(*decoded, sample.error) : sample.error;
            unsigned residual_weight = weight(residual);
            if (residual_weight == 0) agg.successes++;
            else agg.frame_errors++;
            agg.bit_errors += residual_weight;
        }

        const std::uint64_t total_bits = opt.trials * params.n();
        if (inject_mode) {
            os << "inject," << opt.epsilon << ',' << opt.inside << ',' << opt.eta << ','
               << opt.rmax << ',' << opt.eval << ',' << opt.trials << ',' << opt.seed << ','
               << ratio(agg.successes, opt.trials) << ',' << agg.chase_frames << ','
               << ratio(agg.chase.edges, agg.chase_frames) << ','
               << ratio(agg.chase.fires, agg.chase_frames) << ','
               << ratio(agg.chase.false_fires, agg.chase_frames) << ','
               << ratio(agg.chase.update_muls, agg.chase_frames) << ','
               << ratio(agg.chase.eval_muls, agg.chase_frames) << '\n';
        } else {
            os << "awgn," << opt.snr_db[run] << ',' << opt.eta << ',' << opt.rmax << ','
               << opt.eval << ',' << opt.trials << ',' << opt.seed << ','
               << ratio(agg.raw_bit_errors, total_bits) << ','
               << ratio(agg.frame_errors, opt.trials) << ',' << ratio(agg.bit_errors, total_bits)
               << ',' << agg.chase_frames << ',' << ratio(agg.chase.edges, agg.chase_frames)
               << ',' << ratio(agg.chase.fires, agg.chase_frames) << ','
               << ratio(agg.chase.false_fires, agg.chase_frames) << ','
               << ratio(agg.chase.update_muls, agg.chase_frames) << ','
               << ratio(agg.chase.eval_muls, agg.chase_frames) << '\n';
        }
    }
    return kExitSuccess;
}

struct FprOptions {
    unsigned epsilon = 14;
    unsigned path_len = 6;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
};

int run_fpr(const CodeOptions& code, const FprOptions& opt, const std::string& out_path) {
    CodeParams params = code.build();
    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "mode,n,t,epsilon,path_len,trials,edges,fires,rate\n";
    for (bool disjoint : {true, false}) {
        auto r = false_fire_experiment(params, opt.epsilon, opt.path_len, opt.trials, opt.seed,
                                       disjoint);
        os << (disjoint ? "disjoint" : "any") << ',' << params.n() << ',' << params.t() << ','
           << opt.epsilon << ',' << opt.path_len << ',' << r.trials << ',' << r.edges << ','
           << r.fires << ',';
        if (r.rate) os << *r.rate;
        os << '\n';
    }
    return kExitSuccess;
}

struct BenchOptions {
    unsigned eta = 6;
    unsigned rmax = 0;  // 0 = eta
    unsigned epsilon = 0;  // 0 = t + 2
    std::uint64_t seed = 1;
};

int run_bench(const CodeOptions& code, const BenchOptions& opt, const std::string& out_path) {
    CodeParams params = code.build();
    const unsigned rmax = opt.rmax == 0 ? opt.eta : opt.rmax;
    const unsigned epsilon = opt.epsilon == 0 ? params.t() + 2 : opt.epsilon;

    auto rng = trial_rng(opt.seed, 0);
    std::vector<unsigned> all(params.n());
    for (unsigned i = 0; i < params.n(); ++i) all[i] = i;
    for (unsigned i = 0; i < params.n(); ++i)
        std::swap(all[i], all[i + rng() % (params.n() - i)]);
    std::vector<unsigned> error_positions(all.begin(), all.begin() + epsilon);
    std::vector<unsigned> flips(all.begin() + epsilon, all.begin() + epsilon + opt.eta);

    Syndrome S = syndrome_of_support(params, error_positions);
    auto ms = modified_syndrome(params.field(), S, params.t());
    KeyBasis key = solve_key_basis(params.field(), ms, params.t());
    auto depths = bench_tree(params, key, flips, rmax);

    std::ofstream file;
    std::ostream& os = open_output(out_path, file);
    os << "eta,rmax,depth,edges,update_muls,avg_muls,max_muls,bound\n";
    std::uint64_t total_edges = 0;
    std::uint64_t total_muls = 0;
    bool bound_ok = true;
    for (unsigned r = 1; r <= rmax; ++r) {
        const DepthStats& d = depths[r - 1];
        total_edges += d.edges;
        total_muls += d.update_muls;
        const std::uint64_t bound = 4ull * r + 1;
        if (d.max_edge_muls > bound) bound_ok = false;
        os << opt.eta << ',' << rmax << ',' << r << ',' << d.edges << ',' << d.update_muls << ','
           << ratio(d.update_muls, d.edges) << ',' << d.max_edge_muls << ',' << bound << '\n';
    }
    // full-tree cap, eta 2^(eta+1) + 2^eta - 1, meaningful when rmax = eta
    const bool has_cap = rmax == opt.eta && opt.eta <= 57;
    os << opt.eta << ',' << rmax << ",total," << total_edges << ',' << total_muls << ','
       << ratio(total_muls, total_edges) << ",,";
    std::uint64_t cap = 0;
    if (has_cap) {
        cap = (static_cast<std::uint64_t>(opt.eta) << (opt.eta + 1)) + (1ull << opt.eta) - 1;
        os << cap;
    }
    os << '\n';
    if (!bound_ok || (has_cap && total_muls > cap)) {
        std::cerr << "per-edge multiplication bound exceeded\n";
        return kExitDecodeFailure;
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"soft-decision Chase decoder for primitive narrow-sense binary BCH codes"};
    app.require_subcommand(1);
    app.set_config("--config");

    CodeOptions code;
    std::string out_path;

    auto* info = app.add_subcommand("info", "print code parameters");
    add_code_options(info, code);
    info->add_option("--out", out_path, "output file (default stdout)");

    DecodeOptions dec;
    auto* decode = app.add_subcommand("decode", "decode one received word");
    add_code_options(decode, code);
    decode->add_option("--y", dec.y_hex, "received word as hex, MSB = X^(n-1)")->required();
    decode->add_option("--rel", dec.rel_text, "comma-separated reliability scores, low = weak");
    decode->add_option("--eta", dec.eta, "number of least-reliable positions");
    decode->add_option("--rmax", dec.rmax, "maximum flip weight");
    decode->add_option("--eval", dec.eval, "evaluation method: gcd or deriv");
    decode->add_flag("--first-hit", dec.first_hit, "stop at the first verified candidate");
    decode->add_option("--out", out_path, "output file (default stdout)");

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "FER/BER campaign (AWGN or injection)");
    add_code_options(simulate, code);
    simulate->add_option("--snr", sim.snr_db, "Es/N0 values in dB");
    simulate->add_option("--epsilon", sim.epsilon, "injected error weight (injection mode)");
    simulate->add_option("--inside", sim.inside, "errors inside the unreliable set");
    simulate->add_option("--eta", sim.eta, "number of least-reliable positions");
    simulate->add_option("--rmax", sim.rmax, "maximum flip weight");
    simulate->add_option("--eval", sim.eval, "evaluation method: gcd or deriv");
    simulate->add_option("--trials", sim.trials, "frames per run");
    simulate->add_option("--seed", sim.seed, "campaign seed");
    simulate->add_flag("--first-hit", sim.first_hit, "stop at the first verified candidate");
    simulate->add_option("--out", out_path, "output file (default stdout)");

    FprOptions fpr;
    auto* fpr_cmd = app.add_subcommand("fpr", "false-fire-rate experiment");
    add_code_options(fpr_cmd, code);
    fpr_cmd->add_option("--epsilon", fpr.epsilon, "error weight per trial");
    fpr_cmd->add_option("--path-len", fpr.path_len, "flips per trial");
    fpr_cmd->add_option("--trials", fpr.trials, "number of trials");
    fpr_cmd->add_option("--seed", fpr.seed, "experiment seed");
    fpr_cmd->add_option("--out", out_path, "output file (default stdout)");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "per-edge multiplication counts, full tree");
    add_code_options(bench_cmd, code);
    bench_cmd->add_option("--eta", bench.eta, "number of flip positions");
    bench_cmd->add_option("--rmax", bench.rmax, "tree depth (default eta)");
    bench_cmd->add_option("--epsilon", bench.epsilon, "error weight of the instance");
    bench_cmd->add_option("--seed", bench.seed, "instance seed");
    bench_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (info->parsed()) return run_info(code, out_path);
        if (decode->parsed()) return run_decode(code, dec, out_path);
        if (simulate->parsed()) return run_simulate(code, sim, out_path);
        if (fpr_cmd->parsed()) return run_fpr(code, fpr, out_path);
        if (bench_cmd->parsed()) return run_bench(code, bench, out_path);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
