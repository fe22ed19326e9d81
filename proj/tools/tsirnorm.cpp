// Command-line front end: evaluate Schreier-family and Tsirelson-type norms
// exactly, emit and check dual certificates, run the witness constructions
// and the property suite. Exit codes: 0 success, 1 verification/assertion
// failure, 2 input error, 3 guard exceeded.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsirnorm/certificate.hpp"
#include "tsirnorm/checks.hpp"
#include "tsirnorm/engine.hpp"
#include "tsirnorm/oracle.hpp"
#include "tsirnorm/schreier.hpp"
#include "tsirnorm/suite.hpp"

using namespace tsir;
namespace fs = std::filesystem;

namespace {

enum class Emit { Text, Json, Csv };

struct CommonFlags {
    bool json = false;
    bool csv = false;
    int max_support = 20;
    int oracle_max = 8;
    std::string out_dir;

    Emit emit() const { return json ? Emit::Json : (csv ? Emit::Csv : Emit::Text); }
    EngineOptions engine() const { return EngineOptions{max_support}; }
    OracleOptions oracle() const { return OracleOptions{oracle_max}; }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    auto* j = cmd->add_flag("--json", flags.json, "emit the report as JSON");
    cmd->add_flag("--csv", flags.csv, "emit the report as CSV")->excludes(j);
    cmd->add_option("--max-support", flags.max_support, "enumeration guard on |supp x|");
    cmd->add_option("--oracle-max", flags.oracle_max, "support guard for the brute-force oracle");
    cmd->add_option("--out", flags.out_dir, "directory to copy the report into");
}

// Ordered key/value report; identical numeric content in every format, with
// timing kept in a single trailing field.
struct Report {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    void add_rational(const std::string& key, const Rational& v, bool squared = false) {
        add(key, format_rational(v));
        add(key + "_float", format_float(v));
        if (squared) add(key + "_sqrt_float", format_float_sqrt(v));
    }

    std::string text() const {
        std::ostringstream os;
        for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
        return os.str();
    }
    std::string json() const {
        nlohmann::json j;
        for (const auto& [k, v] : fields) j[k] = v;
        return j.dump(2) + "\n";
    }
    std::string csv() const {
        std::ostringstream head, row;
        bool first = true;
        for (const auto& [k, v] : fields) {
            if (!first) {
                head << ',';
                row << ',';
            }
            first = false;
            head << k;
            std::string esc = v;
            for (char& c : esc)
                if (c == ',') c = ';';
            row << esc;
        }
        return head.str() + "\n" + row.str() + "\n";
    }
    std::string render(Emit emit) const {
        switch (emit) {
            case Emit::Json: return json();
            case Emit::Csv: return csv();
            default: return text();
        }
    }
};

void deliver(const Report& report, const CommonFlags& flags, const std::string& name) {
    std::string body = report.render(flags.emit());
    std::cout << body;
    if (!flags.out_dir.empty()) {
        fs::create_directories(flags.out_dir);
        const char* ext = flags.json ? ".json" : (flags.csv ? ".csv" : ".txt");
        std::ofstream out(fs::path(flags.out_dir) / (name + ext));
        out << body;
    }
}

// --space accepts a config file path or a registry name.
SpaceConfig resolve_space(const std::string& spec) {
    if (fs::exists(spec)) return load_space_file(spec);
    try {
        return default_space(spec);
    } catch (const Error&) {
        throw Error::input("--space '" + spec + "' is neither a config file nor a registry name");
    }
}

// --vector accepts the inline grammar or a file holding it.
FinVec resolve_vector(const std::string& spec) {
    if (fs::exists(spec)) {
        std::ifstream in(spec);
        std::stringstream buf;
        buf << in.rdbuf();
        return FinVec::parse(buf.str());
    }
    return FinVec::parse(spec);
}

std::string hash_hex(const SpaceConfig& cfg) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    return buf;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void write_certificate_file(const std::string& path, const SpaceConfig& cfg, const FinVec& x,
                            std::optional<int> m, const NormResult& result) {
    nlohmann::json j;
    j["space"] = space_to_json(cfg);
    j["vector"] = x.to_string();
    if (m) j["m"] = *m;
    j["value"] = format_rational(result.value);
    j["squared"] = result.squared;
    j["certificate"] = certificate_to_json(result.certificate);
    std::ofstream out(path);
    if (!out) throw Error::input("cannot write certificate file '" + path + "'");
    out << j.dump(2) << "\n";
}

struct EvalArgs {
    std::string space, vector, emit_certificate;
    int m = -1;  // <0: stabilized norm
    CommonFlags flags;
};

int cmd_eval(const EvalArgs& args, const char* command) {
    auto start = std::chrono::steady_clock::now();
    SpaceConfig cfg = resolve_space(args.space);
    FinVec x = resolve_vector(args.vector);
    std::optional<int> m;
    if (args.m >= 0) m = args.m;
    NormResult result;
    if (m) {
        const auto* mixed = std::get_if<MixedLaw>(&cfg.law);
        if (!mixed) throw Error::input("--m applies to mixed Tsirelson laws only");
        result = eval_iterate(x, *mixed, *m, args.flags.engine());
    } else {
        result = eval_config(x, cfg, args.flags.engine());
    }
    Report report;
    report.add("command", command);
    report.add("space", cfg.name);
    report.add("space_hash", hash_hex(cfg));
    report.add("vector", x.to_string());
    if (m) report.add("m", std::to_string(*m));
    report.add_rational("value", result.value, result.squared);
    report.add("squared", result.squared ? "true" : "false");
    report.add("iterate", std::to_string(result.iterate));
    report.add("nodes", std::to_string(result.stats.nodes));
    report.add("memo_hits", std::to_string(result.stats.memo_hits));
    report.add("families", std::to_string(result.stats.families));
    if (!args.emit_certificate.empty()) {
        write_certificate_file(args.emit_certificate, cfg, x, m, result);
        report.add("certificate", args.emit_certificate);
    }
    report.add("max_support", std::to_string(args.flags.max_support));
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, args.flags, command);
    return 0;
}

int cmd_certify(const std::string& cert_path, const std::string& space_override,
                const std::string& vector_override, const CommonFlags& flags) {
    auto start = std::chrono::steady_clock::now();
    std::ifstream in(cert_path);
    if (!in) throw Error::input("cannot open certificate file '" + cert_path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error::input("certificate file '" + cert_path + "': " + e.what());
    }
    SpaceConfig cfg = space_override.empty() ? space_from_json(j.at("space"))
                                             : resolve_space(space_override);
    FinVec x = vector_override.empty() ? FinVec::parse(j.at("vector").get<std::string>())
                                       : resolve_vector(vector_override);
    Rational claimed = parse_rational(j.at("value").get<std::string>());
    Certificate cert = certificate_from_json(j.at("certificate"));
    VerifyOptions vopts;
    if (j.contains("m")) vopts.max_depth = j.at("m").get<int>();
    Rational verified = verify_certificate(cert, x, cfg.law, vopts);  // throws on structure
    bool match = verified == claimed;
    Report report;
    report.add("command", "certify");
    report.add("certificate", cert_path);
    report.add("space", cfg.name);
    report.add("space_hash", hash_hex(cfg));
    report.add("vector", x.to_string());
    report.add_rational("claimed", claimed);
    report.add_rational("verified", verified);
    report.add("match", match ? "true" : "false");
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, flags, "certify");
    return match ? 0 : 1;
}

int cmd_oracle(const std::string& space, const std::string& vector, int m,
               const CommonFlags& flags) {
    auto start = std::chrono::steady_clock::now();
    SpaceConfig cfg = resolve_space(space);
    const auto* mixed = std::get_if<MixedLaw>(&cfg.law);
    if (!mixed) throw Error::input("the oracle applies to mixed Tsirelson laws only");
    FinVec x = resolve_vector(vector);
    Rational value = oracle_norm(x, *mixed, m, flags.oracle());
    Report report;
    report.add("command", "oracle");
    report.add("space", cfg.name);
    report.add("space_hash", hash_hex(cfg));
    report.add("vector", x.to_string());
    report.add("m", std::to_string(m));
    report.add_rational("value", value);
    report.add("oracle_max", std::to_string(flags.oracle_max));
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, flags, "oracle");
    return 0;
}

int cmd_schreier_member(const std::string& set, int n, const CommonFlags& flags) {
    IndexSet f = IndexSet::parse(set);
    Report report;
    report.add("command", "schreier-member");
    report.add("set", f.to_string());
    report.add("n", std::to_string(n));
    report.add("member", schreier::member(f, n) ? "true" : "false");
    deliver(report, flags, "schreier-member");
    return 0;
}

int cmd_schreier_enumerate(const std::string& window, int n, const CommonFlags& flags) {
    IndexSet w = IndexSet::parse(window);
    auto sets = schreier::maximal_members(w, n, flags.max_support);
    Report report;
    report.add("command", "schreier-enumerate");
    report.add("window", w.to_string());
    report.add("n", std::to_string(n));
    report.add("count", std::to_string(sets.size()));
    for (size_t i = 0; i < sets.size(); ++i)
        report.add("set_" + std::to_string(i), sets[i].to_string());
    deliver(report, flags, "schreier-enumerate");
    return 0;
}

int cmd_schreier_norm(const std::string& vector, int n, const CommonFlags& flags) {
    FinVec x = resolve_vector(vector);
    auto r = schreier::norm(x, n, flags.max_support);
    Report report;
    report.add("command", "schreier-norm");
    report.add("vector", x.to_string());
    report.add("n", std::to_string(n));
    report.add_rational("value", r.value);
    report.add("witness", r.witness.to_string());
    deliver(report, flags, "schreier-norm");
    return 0;
}

int cmd_witness_l1(const std::string& space, const std::string& vector,
                   const std::string& threshold, int m_floor, const CommonFlags& flags) {
    auto start = std::chrono::steady_clock::now();
    SpaceConfig cfg = resolve_space(space);
    FinVec raw = resolve_vector(vector);
    NormResult norm = eval_config(raw, cfg, flags.engine());
    FinVec v = raw.scaled(Rational(1) / norm.value);
    Rational t = parse_rational(threshold);
    auto window = checks::find_l1_window(v, cfg, t, m_floor, flags.engine());
    auto profile = checks::mass_profile(v, cfg, flags.engine());
    Report report;
    report.add("command", "witness-l1");
    report.add("space", cfg.name);
    report.add("space_hash", hash_hex(cfg));
    report.add("vector", raw.to_string());
    report.add_rational("normalization", norm.value);
    report.add("threshold", format_rational(t));
    report.add("m_floor", std::to_string(m_floor));
    report.add("window", window ? ("[" + std::to_string(window->p) + "," +
                                   std::to_string(window->q) + "]")
                                : "none");
    if (window) report.add_rational("mass", window->mass);
    for (const auto& [m, mass] : profile.terms)
        report.add("profile_" + std::to_string(m), format_rational(mass));
    report.add("profile_tail", format_rational(profile.tail));
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, flags, "witness-l1");
    return 0;
}

int cmd_witness_c0(const std::string& space, int m, int n, const CommonFlags& flags) {
    auto start = std::chrono::steady_clock::now();
    SpaceConfig cfg = resolve_space(space);
    const auto* mixed = std::get_if<MixedLaw>(&cfg.law);
    if (!mixed) throw Error::input("the c0 witness uses a mixed law's theta sequence");
    auto witness = checks::c0_block_witness(mixed->theta, m, n, flags.engine());
    Report report;
    report.add("command", "witness-c0");
    report.add("space", cfg.name);
    report.add("m", std::to_string(m));
    report.add("n", std::to_string(n));
    for (size_t i = 0; i < witness.blocks.size(); ++i)
        report.add("block_" + std::to_string(i), witness.blocks[i].to_string());
    report.add_rational("low_value", witness.low_value);
    report.add_rational("high_value", witness.high_value);
    report.add_rational("theta1_times_n", Rational(mixed->theta.at(1) * n));
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, flags, "witness-c0");
    return 0;
}

int cmd_compare(const std::string& space_a, const std::string& space_b,
                const std::string& vector, const CommonFlags& flags) {
    auto start = std::chrono::steady_clock::now();
    SpaceConfig a = resolve_space(space_a);
    SpaceConfig b = resolve_space(space_b);
    FinVec x = resolve_vector(vector);
    NormResult ra = eval_config(x, a, flags.engine());
    NormResult rb = eval_config(x, b, flags.engine());
    if (ra.squared != rb.squared)
        throw Error::input("cannot compare a squared-valued law with a linear one");
    Report report;
    report.add("command", "compare");
    report.add("space_a", a.name);
    report.add("space_b", b.name);
    report.add("vector", x.to_string());
    report.add_rational("value_a", ra.value, ra.squared);
    report.add_rational("value_b", rb.value, rb.squared);
    report.add_rational("ratio_b_over_a", Rational(rb.value / ra.value));
    report.add("timing_ms", std::to_string(elapsed_ms(start)));
    deliver(report, flags, "compare");
    return 0;
}

int cmd_experiment_noniso(const std::string& theta_kind, const std::string& theta_ratio,
                          const std::string& delta, const std::string& big_c,
                          const std::string& big_k, const std::string& eps, int n_max,
                          const CommonFlags& flags) {
    WeightSeq theta = theta_kind == "harmonic"
                          ? WeightSeq::harmonic_theta()
                          : WeightSeq::geometric_theta(parse_rational(theta_ratio));
    auto scan = checks::noniso_inequality_scan(theta, parse_rational(delta),
                                               parse_rational(big_c), parse_rational(big_k),
                                               parse_rational(eps), n_max);
    Report report;
    report.add("command", "experiment-noniso");
    report.add("theta", theta_kind == "harmonic" ? "harmonic" : "geometric " + theta_ratio);
    report.add("delta", delta);
    report.add("C", big_c);
    report.add("K", big_k);
    report.add("eps", eps);
    report.add("n_max", std::to_string(n_max));
    for (const auto& step : scan.steps)
        report.add("n_" + std::to_string(step.n),
                   format_rational(step.theta_n) + " vs [" +
                       format_rational(step.rhs_lower_sq) + ";" +
                       format_rational(step.rhs_upper_sq) + "] -> " +
                       (step.fails ? "fails" : "holds"));
    report.add("first_failing",
               scan.first_failing ? std::to_string(*scan.first_failing) : "none");
    deliver(report, flags, "experiment-noniso");
    return 0;
}

int cmd_suite(std::uint64_t seed, int count, int threads, const CommonFlags& flags) {
    suite::SuiteOptions opts;
    opts.seed = seed;
    opts.count = count;
    opts.max_support = flags.max_support;
    opts.oracle_max = flags.oracle_max;
    opts.threads = threads;
    suite::SuiteReport report = suite::run_suite(opts);
    std::string body = flags.json ? suite::render_json(report).dump(2) + "\n"
                                  : (flags.csv ? suite::render_csv(report)
                                               : suite::render_text(report));
    std::cout << body;
    if (!flags.out_dir.empty()) {
        fs::create_directories(flags.out_dir);
        const char* ext = flags.json ? ".json" : (flags.csv ? ".csv" : ".txt");
        std::ofstream out(fs::path(flags.out_dir) / (std::string("suite") + ext));
        out << body;
    }
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation of Schreier-family and Tsirelson-type norms"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "stabilized norm (or iterate with --m)");
    eval->add_option("--space", eval_args.space, "space config file or registry name")->required();
    eval->add_option("--vector", eval_args.vector, "vector as j:p/q,... or a file")->required();
    eval->add_option("--m", eval_args.m, "evaluate the m-th iterate instead");
    eval->add_option("--emit-certificate", eval_args.emit_certificate,
                     "write the norming certificate to this file");
    add_common(eval, eval_args.flags);

    EvalArgs iter_args;
    auto* iterate = app.add_subcommand("iterate", "the m-th iterate norm");
    iterate->add_option("--space", iter_args.space)->required();
    iterate->add_option("--vector", iter_args.vector)->required();
    iterate->add_option("--m", iter_args.m)->required();
    iterate->add_option("--emit-certificate", iter_args.emit_certificate);
    add_common(iterate, iter_args.flags);

    std::string certify_file, certify_space, certify_vector;
    CommonFlags certify_flags;
    auto* certify = app.add_subcommand("certify", "re-verify an emitted certificate");
    certify->add_option("--certificate", certify_file)->required();
    certify->add_option("--space", certify_space, "override the space in the file");
    certify->add_option("--vector", certify_vector, "override the vector in the file");
    add_common(certify, certify_flags);

    std::string oracle_space, oracle_vector;
    int oracle_m = 1;
    CommonFlags oracle_flags;
    auto* oracle = app.add_subcommand("oracle", "independent brute force over the norming set");
    oracle->add_option("--space", oracle_space)->required();
    oracle->add_option("--vector", oracle_vector)->required();
    oracle->add_option("--m", oracle_m)->required();
    add_common(oracle, oracle_flags);

    auto* schreier_cmd = app.add_subcommand("schreier", "Schreier family combinatorics");
    schreier_cmd->require_subcommand(1);
    std::string sm_set;
    int sm_n = 1;
    CommonFlags sm_flags;
    auto* member = schreier_cmd->add_subcommand("member", "decide F ∈ S_n");
    member->add_option("--set", sm_set, "comma-separated indices")->required();
    member->add_option("--n", sm_n)->required();
    add_common(member, sm_flags);
    std::string se_window;
    int se_n = 1;
    CommonFlags se_flags;
    auto* enumerate = schreier_cmd->add_subcommand("enumerate", "maximal S_n subsets of a window");
    enumerate->add_option("--window", se_window)->required();
    enumerate->add_option("--n", se_n)->required();
    add_common(enumerate, se_flags);
    std::string sn_vector;
    int sn_n = 1;
    CommonFlags sn_flags;
    auto* snorm = schreier_cmd->add_subcommand("norm", "the Schreier norm |x|_n");
    snorm->add_option("--vector", sn_vector)->required();
    snorm->add_option("--n", sn_n)->required();
    add_common(snorm, sn_flags);

    std::string wl_space, wl_vector, wl_threshold = "1/2";
    int wl_floor = 1;
    CommonFlags wl_flags;
    auto* witness_l1 = app.add_subcommand("witness-l1", "mass window of a Σ-sum norm");
    witness_l1->add_option("--space", wl_space)->required();
    witness_l1->add_option("--vector", wl_vector)->required();
    witness_l1->add_option("--threshold", wl_threshold);
    witness_l1->add_option("--m-floor", wl_floor);
    add_common(witness_l1, wl_flags);

    std::string wc_space;
    int wc_m = 0, wc_n = 1;
    CommonFlags wc_flags;
    auto* witness_c0 = app.add_subcommand("witness-c0", "blocks jumping between iterates");
    witness_c0->add_option("--space", wc_space)->required();
    witness_c0->add_option("--m", wc_m)->required();
    witness_c0->add_option("--n", wc_n)->required();
    add_common(witness_c0, wc_flags);

    std::string cp_a, cp_b, cp_vector;
    CommonFlags cp_flags;
    auto* compare = app.add_subcommand("compare", "two spaces on one vector");
    compare->add_option("--space", cp_a)->required();
    compare->add_option("--space-b", cp_b)->required();
    compare->add_option("--vector", cp_vector)->required();
    add_common(compare, cp_flags);

    std::string nx_theta = "harmonic", nx_ratio = "1/2", nx_delta = "1/2", nx_c = "1", nx_k = "1",
                nx_eps = "1/100";
    int nx_max = 10;
    CommonFlags nx_flags;
    auto* noniso = app.add_subcommand("experiment-noniso", "scan the norm-gap inequality");
    noniso->add_option("--theta", nx_theta)->check(CLI::IsMember({"harmonic", "geometric"}));
    noniso->add_option("--theta-ratio", nx_ratio);
    noniso->add_option("--delta", nx_delta);
    noniso->add_option("--c", nx_c);
    noniso->add_option("--k", nx_k);
    noniso->add_option("--eps", nx_eps);
    noniso->add_option("--n-max", nx_max);
    add_common(noniso, nx_flags);

    std::uint64_t suite_seed = 1;
    int suite_count = 40, suite_threads = 0;
    CommonFlags suite_flags;
    auto* suite_cmd = app.add_subcommand("suite", "seeded invariants-and-properties battery");
    suite_cmd->add_option("--seed", suite_seed);
    suite_cmd->add_option("--count", suite_count);
    suite_cmd->add_option("--threads", suite_threads);
    add_common(suite_cmd, suite_flags);

    try {
        app.parse(argc, argv);
        if (*eval) return cmd_eval(eval_args, "eval");
        if (*iterate) {
            if (iter_args.m < 0) throw Error::input("--m must be nonnegative");
            return cmd_eval(iter_args, "iterate");
        }
        if (*certify) return cmd_certify(certify_file, certify_space, certify_vector, certify_flags);
        if (*oracle) return cmd_oracle(oracle_space, oracle_vector, oracle_m, oracle_flags);
        if (*member) return cmd_schreier_member(sm_set, sm_n, sm_flags);
        if (*enumerate) return cmd_schreier_enumerate(se_window, se_n, se_flags);
        if (*snorm) return cmd_schreier_norm(sn_vector, sn_n, sn_flags);
        if (*witness_l1) return cmd_witness_l1(wl_space, wl_vector, wl_threshold, wl_floor, wl_flags);
        if (*witness_c0) return cmd_witness_c0(wc_space, wc_m, wc_n, wc_flags);
        if (*compare) return cmd_compare(cp_a, cp_b, cp_vector, cp_flags);
        if (*noniso)
            return cmd_experiment_noniso(nx_theta, nx_ratio, nx_delta, nx_c, nx_k, nx_eps, nx_max,
                                         nx_flags);
        if (*suite_cmd) return cmd_suite(suite_seed, suite_count, suite_threads, suite_flags);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Input: return 2;
            case ErrorKind::Guard:
            case ErrorKind::Overflow: return 3;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
