#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kicked_top/classical.hpp"
#include "kicked_top/floquet.hpp"
#include "kicked_top/identities.hpp"
#include "kicked_top/io.hpp"
#include "kicked_top/kappa.hpp"
#include "kicked_top/observables.hpp"
#include "kicked_top/parallel.hpp"
#include "kicked_top/recurrence.hpp"
#include "kicked_top/spin.hpp"
#include "kicked_top/version.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_invalid_args = 2;
constexpr int exit_io_error = 3;
constexpr int exit_verification_failure = 4;

std::vector<kt::SpinParams> spin_range(double j_min, double j_max) {
    const auto lo = kt::SpinParams::from_j(j_min);
    const auto hi = kt::SpinParams::from_j(j_max);
    if (hi.two_j < lo.two_j) throw std::invalid_argument("--j-max must be at least --j-min");
    std::vector<kt::SpinParams> out;
    out.reserve(static_cast<std::size_t>(hi.two_j - lo.two_j) + 1);
    for (int t = lo.two_j; t <= hi.two_j; ++t) out.push_back(kt::SpinParams::from_two_j(t));
    return out;
}

kt::KappaClass parse_class_or_throw(const std::string& token) {
    const auto c = kt::parse_kappa_class(token);
    if (!c) throw std::invalid_argument("--kappa-class: unknown class '" + token + "'");
    return *c;
}

// Resolve --kappa / --kappa-class (exactly one must be given).
double resolve_kappa(kt::SpinParams spin, const std::optional<double>& kappa,
                     const std::string& kappa_class) {
    if (kappa && !kappa_class.empty())
        throw std::invalid_argument("--kappa and --kappa-class are mutually exclusive");
    if (kappa) return *kappa;
    if (!kappa_class.empty()) return kt::kappa_of(spin, parse_class_or_throw(kappa_class));
    throw std::invalid_argument("one of --kappa or --kappa-class is required");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Flat key=value config support. CLI11 only applies config files on the root
// app (and only with [section] headers), so each subcommand takes a --config
// whose keys are spliced into the argument list right after the subcommand
// name. Explicit flags come later in the list and win through the take-last
// option policy.
std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("--config: cannot read " + path);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--config: malformed line (expected key=value): " + line);
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) throw std::invalid_argument("--config: empty key in line: " + line);
        if (key == "config") continue; // no nested config files
        tokens.push_back("--" + key);
        tokens.push_back(value);
    }
    return tokens;
}

std::vector<std::string> splice_config(int argc, char** argv,
                                       const std::vector<std::string>& subcommands) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::size_t sub_index = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (std::find(subcommands.begin(), subcommands.end(), args[i]) != subcommands.end()) {
            sub_index = i;
            break;
        }
    }
    if (sub_index == args.size()) return args;

    std::string config_path;
    for (std::size_t i = sub_index + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            config_path = args[i].substr(std::string("--config=").size());
    }
    if (config_path.empty()) return args;

    const auto injected = config_tokens(config_path);
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_index) + 1, injected.begin(),
                injected.end());
    return args;
}

// Write the payload plus its <out>.meta.json sidecar (command, version,
// timestamp, resolved config, and any extra result fields).
void write_with_sidecar(const std::string& out, const std::string& payload, const std::string& command,
                        const json& config, const json& extra = json::object()) {
    kt::io::write_text_file(out, payload);
    json side;
    side["command"] = command;
    side["version"] = kt::version;
    side["timestamp"] = kt::io::timestamp_utc_now();
    side["config"] = config;
    for (const auto& [key, value] : extra.items()) side[key] = value;
    kt::io::write_text_file(out + ".meta.json", side.dump(2) + "\n");
}

struct PeriodArgs {
    double j = 0.0;
    std::optional<double> kappa;
    std::string kappa_class;
    double p = kt::default_p;
    int n_max = 500;
    double tol = 1e-10;
    std::string out = "period.json";
    std::string error_csv; // optional companion export of the error series
};

int run_period(const PeriodArgs& a, int threads) {
    const auto spin = kt::SpinParams::from_j(a.j);
    const double kappa = resolve_kappa(spin, a.kappa, a.kappa_class);
    const auto report =
        kt::detect_period(kt::build_floquet(kt::FloquetSpec{spin, kappa, a.p}), a.n_max, a.tol);

    json config{{"j", spin.j()},   {"kappa", kappa},   {"kappa_class", a.kappa_class.empty() ? json(nullptr) : json(a.kappa_class)},
                {"p", a.p},        {"n_max", a.n_max}, {"tol", a.tol},
                {"out", a.out},    {"threads", threads}};
    write_with_sidecar(a.out, kt::io::recurrence_report_json(report), "period", config);
    if (!a.error_csv.empty()) kt::io::write_text_file(a.error_csv, kt::io::error_series_csv(report));

    if (report.period)
        std::printf("period=%d phase=%s\n", *report.period, kt::io::format17(*report.phase).c_str());
    else
        std::printf("period=none (n_max=%d)\n", a.n_max);
    return exit_ok;
}

struct TableArgs {
    double j_min = 0.5;
    double j_max = 10.0;
    int n_max = 500;
    double tol = 1e-10;
    std::string out = "table.csv";
};

int run_table(const TableArgs& a, int threads) {
    const auto spins = spin_range(a.j_min, a.j_max);
    const auto rows = kt::reproduce_table(spins, a.n_max, a.tol);

    json config{{"j_min", a.j_min}, {"j_max", a.j_max}, {"n_max", a.n_max},
                {"tol", a.tol},     {"out", a.out},     {"threads", threads}};
    write_with_sidecar(a.out, kt::io::table_csv(rows), "table", config);

    int mismatches = 0;
    for (const auto& row : rows) {
        if (!row.matches) {
            ++mismatches;
            std::fprintf(stderr, "mismatch: j=%s class=%s detected=%s expected=%s\n",
                         kt::spin_label(row.spin).c_str(), kt::kappa_class_token(row.kappa_class),
                         row.period ? std::to_string(*row.period).c_str() : "none",
                         row.expected ? std::to_string(*row.expected).c_str() : "none");
        }
    }
    std::printf("rows=%zu mismatches=%d\n", rows.size(), mismatches);
    return mismatches == 0 ? exit_ok : exit_verification_failure;
}

struct SearchArgs {
    int r_max = 5;
    int s_max = 5;
    double j_min = 1.5;
    double j_max = 7.5;
    int kicks = 500;
    double floor = 1e-7;
    double theta = 2.25;
    double phi = 2.0;
    double tol = 1e-10;
    std::string out = "search.csv";
};

int run_search(const SearchArgs& a, int threads) {
    kt::SearchConfig cfg;
    cfg.r_max = a.r_max;
    cfg.s_max = a.s_max;
    cfg.j_values = spin_range(a.j_min, a.j_max);
    cfg.n_kicks = a.kicks;
    cfg.entropy_floor = a.floor;
    cfg.initial_state = kt::CoherentParams{a.theta, a.phi};
    cfg.tol = a.tol;
    const auto rows = kt::search_rational_kappa(cfg);

    json config{{"r_max", a.r_max}, {"s_max", a.s_max}, {"j_min", a.j_min},
                {"j_max", a.j_max}, {"kicks", a.kicks}, {"floor", a.floor},
                {"theta", a.theta}, {"phi", a.phi},     {"tol", a.tol},
                {"out", a.out},     {"threads", threads}};
    write_with_sidecar(a.out, kt::io::search_csv(rows), "search", config);

    int found = 0;
    double min_entropy = std::numeric_limits<double>::infinity();
    for (const auto& row : rows) {
        if (row.period) ++found;
        min_entropy = std::min(min_entropy, row.min_entropy);
    }
    std::printf("cells=%zu recurrences=%d min_entropy=%s\n", rows.size(), found,
                kt::io::format17(min_entropy).c_str());
    return exit_ok;
}

struct HusimiArgs {
    double j = 0.0;
    double theta = 2.25;
    double phi = 2.0;
    std::optional<double> kappa;
    std::string kappa_class;
    int kicks = 0;
    int theta_count = 140;
    int phi_count = 280;
    std::string out = "husimi.csv";
};

int run_husimi(const HusimiArgs& a, int threads) {
    const auto spin = kt::SpinParams::from_j(a.j);
    kt::StateVector psi = kt::coherent_state(spin, kt::CoherentParams{a.theta, a.phi});
    double kappa = 0.0;
    if (a.kicks > 0) {
        kappa = resolve_kappa(spin, a.kappa, a.kappa_class);
        psi = kt::apply_kicks(kt::build_floquet(kt::FloquetSpec{spin, kappa, kt::default_p}), psi,
                              a.kicks)
                  .back();
    } else if (a.kappa || !a.kappa_class.empty()) {
        kappa = resolve_kappa(spin, a.kappa, a.kappa_class);
    }
    const auto field = kt::husimi(spin, psi, a.theta_count, a.phi_count);

    json config{{"j", spin.j()},
                {"theta", a.theta},
                {"phi", a.phi},
                {"kappa", a.kicks > 0 || a.kappa || !a.kappa_class.empty() ? json(kappa) : json(nullptr)},
                {"kappa_class", a.kappa_class.empty() ? json(nullptr) : json(a.kappa_class)},
                {"kicks", a.kicks},
                {"theta_count", a.theta_count},
                {"phi_count", a.phi_count},
                {"out", a.out},
                {"threads", threads}};
    json extra{{"q_max", field.q_max}, {"weighted_sum", field.weighted_sum()}};
    write_with_sidecar(a.out, kt::io::husimi_csv(field), "husimi", config, extra);

    std::printf("q_max=%s weighted_sum=%s\n", kt::io::format17(field.q_max).c_str(),
                kt::io::format17(field.weighted_sum()).c_str());
    return exit_ok;
}

struct EntropyArgs {
    double j = 0.0;
    std::optional<double> kappa;
    std::string kappa_class;
    std::string state = "+y";
    double theta = 2.25;
    double phi = 2.0;
    int kicks = 100;
    std::string kind = "vn";
    std::string out = "entropy.csv";
};

int run_entropy(const EntropyArgs& a, int threads) {
    const auto spin = kt::SpinParams::from_j(a.j);
    const double kappa = resolve_kappa(spin, a.kappa, a.kappa_class);
    const kt::StateVector initial = a.state == "+y"
                                        ? kt::plus_y_state(spin)
                                        : kt::coherent_state(spin, kt::CoherentParams{a.theta, a.phi});
    const auto kind = a.kind == "vn" ? kt::EntropyKind::vn : kt::EntropyKind::linear;
    const auto u = kt::build_floquet(kt::FloquetSpec{spin, kappa, kt::default_p});

    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(a.kicks) + 1);
    const auto rho0 = kt::reduced_qubit(spin, initial);
    values.push_back(kind == kt::EntropyKind::vn ? kt::von_neumann_entropy(rho0)
                                                 : kt::linear_entropy(rho0));
    const auto series = kt::entropy_series(spin, u, initial, a.kicks, kind);
    values.insert(values.end(), series.begin(), series.end());

    json config{{"j", spin.j()},  {"kappa", kappa}, {"kappa_class", a.kappa_class.empty() ? json(nullptr) : json(a.kappa_class)},
                {"state", a.state}, {"theta", a.theta}, {"phi", a.phi},
                {"kicks", a.kicks}, {"kind", a.kind},   {"out", a.out},
                {"threads", threads}};
    write_with_sidecar(a.out, kt::io::entropy_csv(values), "entropy", config);

    std::printf("kicks=%d final_entropy=%s\n", a.kicks, kt::io::format17(values.back()).c_str());
    return exit_ok;
}

struct ClassicalArgs {
    double kappa = 0.0;
    int kicks = 150;
    double theta = 2.25;
    double phi = 2.0;
    int grid_theta = 0;
    int grid_phi = 0;
    std::string out = "classical.csv";
};

int run_classical(const ClassicalArgs& a, int threads) {
    std::vector<kt::ClassicalPoint> initials;
    if (a.grid_theta > 0 || a.grid_phi > 0) {
        if (a.grid_theta <= 0 || a.grid_phi <= 0)
            throw std::invalid_argument("--grid-theta and --grid-phi must both be positive");
        initials = kt::classical_grid(a.grid_theta, a.grid_phi);
    } else {
        initials.push_back(kt::classical_point_from_angles(a.theta, a.phi));
    }
    const auto trajectories = kt::stroboscopic_map(initials, a.kappa, a.kicks);

    json config{{"kappa", a.kappa},           {"kicks", a.kicks},
                {"theta", a.theta},           {"phi", a.phi},
                {"grid_theta", a.grid_theta}, {"grid_phi", a.grid_phi},
                {"out", a.out},               {"threads", threads}};
    write_with_sidecar(a.out, kt::io::classical_csv(trajectories), "classical", config);

    std::printf("trajectories=%zu kicks=%d\n", trajectories.size(), a.kicks);
    return exit_ok;
}

struct StabilityArgs {
    double j = 0.0;
    std::string kappa_class;
    double delta = 0.0;
    int applications = 10;
    int theta_count = 70;
    int phi_count = 140;
    std::optional<int> orbit_n;
    std::string out = "stability.csv";
};

int run_stability(const StabilityArgs& a, int threads) {
    const auto spin = kt::SpinParams::from_j(a.j);
    const auto kc = parse_class_or_throw(a.kappa_class);
    const auto landscape = kt::stability_landscape(spin, kc, a.delta, a.applications, a.theta_count,
                                                   a.phi_count, kt::Exec::parallel, a.orbit_n);

    json config{{"j", spin.j()},
                {"kappa_class", a.kappa_class},
                {"delta", a.delta},
                {"applications", a.applications},
                {"theta_count", a.theta_count},
                {"phi_count", a.phi_count},
                {"orbit_n", a.orbit_n ? json(*a.orbit_n) : json(nullptr)},
                {"out", a.out},
                {"threads", threads}};
    json extra{{"j", landscape.spin.j()},
               {"kappa_tilde", landscape.kappa_tilde},
               {"delta", landscape.delta},
               {"orbit_n", landscape.orbit_n},
               {"applications", landscape.applications},
               {"s_max", landscape.s_max},
               {"mean", landscape.mean()}};
    write_with_sidecar(a.out, kt::io::landscape_csv(landscape), "stability", config, extra);

    std::printf("orbit_n=%d s_max=%s mean=%s\n", landscape.orbit_n,
                kt::io::format17(landscape.s_max).c_str(),
                kt::io::format17(landscape.mean()).c_str());
    return exit_ok;
}

struct VerifyArgs {
    std::string check = "all";
    double j_min = 0.5;
    double j_max = 10.0;
    double tol = 1e-10;
    std::string out = "verify.json";
};

int run_verify(const VerifyArgs& a, int threads) {
    const auto spins = spin_range(a.j_min, a.j_max);
    const auto results = a.check == "all" ? kt::run_all_identity_checks(spins, a.tol)
                                          : kt::run_identity_check(a.check, spins, a.tol);

    json config{{"check", a.check}, {"j_min", a.j_min}, {"j_max", a.j_max},
                {"tol", a.tol},     {"out", a.out},     {"threads", threads}};
    write_with_sidecar(a.out, kt::io::identity_report_json(results), "verify", config);

    bool all_pass = true;
    for (const char* name : kt::identity_check_names) {
        double max_dev = 0.0;
        bool present = false;
        bool pass = true;
        for (const auto& r : results) {
            if (r.name != name) continue;
            present = true;
            max_dev = std::max(max_dev, r.max_deviation);
            pass = pass && r.pass;
        }
        if (!present) continue;
        all_pass = all_pass && pass;
        std::printf("%-17s max_deviation=%s %s\n", name, kt::io::format17(max_dev).c_str(),
                    pass ? "pass" : "FAIL");
    }
    return all_pass ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kicked-top recurrence toolkit: Floquet periods, entropies, Husimi fields,\n"
                 "classical stroboscopic maps, and operator-identity verification."};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "Worker threads for parallel sweeps (0 = all cores); results are identical "
                   "for any value");

    PeriodArgs period_args;
    auto* period = app.add_subcommand("period", "Operator recurrence period of one Floquet operator");
    period->fallthrough();
    period->add_option("--j", period_args.j, "Spin j (multiple of 0.5)")->required();
    auto* period_kappa = period->add_option("--kappa", period_args.kappa, "Twist strength");
    auto* period_class =
        period->add_option("--kappa-class", period_args.kappa_class,
                           "Twist class: 0, pj/2, pj, 3pj/2, 2pj, 5pj/2, 3pj, 7pj/2, 4pj");
    period_kappa->excludes(period_class);
    period->add_option("--p", period_args.p, "Rotation angle per kick");
    period->add_option("--n-max", period_args.n_max, "Kick horizon");
    period->add_option("--tol", period_args.tol, "Identity-error tolerance");
    period->add_option("--out", period_args.out, "Report path (JSON)");
    period->add_option("--error-csv", period_args.error_csv,
                       "Also export the identity-error series as CSV");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Recurrence periods for all nine classes over a spin range");
    table->fallthrough();
    table->add_option("--j-min", table_args.j_min, "Smallest spin");
    table->add_option("--j-max", table_args.j_max, "Largest spin");
    table->add_option("--n-max", table_args.n_max, "Kick horizon");
    table->add_option("--tol", table_args.tol, "Identity-error tolerance");
    table->add_option("--out", table_args.out, "Table path (CSV)");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Screen rational kappa = pi j r/s outside the table classes");
    search->fallthrough();
    search->add_option("--r-max", search_args.r_max, "Largest numerator");
    search->add_option("--s-max", search_args.s_max, "Largest denominator");
    search->add_option("--j-min", search_args.j_min, "Smallest spin");
    search->add_option("--j-max", search_args.j_max, "Largest spin");
    search->add_option("--kicks", search_args.kicks, "Kicks per cell");
    search->add_option("--floor", search_args.floor, "Entropy floor triggering period confirmation");
    search->add_option("--theta", search_args.theta, "Screening-state polar angle");
    search->add_option("--phi", search_args.phi, "Screening-state azimuth");
    search->add_option("--tol", search_args.tol, "Identity-error tolerance");
    search->add_option("--out", search_args.out, "Results path (CSV)");

    HusimiArgs husimi_args;
    auto* husimi = app.add_subcommand("husimi", "Husimi field of a (possibly kicked) coherent state");
    husimi->fallthrough();
    husimi->add_option("--j", husimi_args.j, "Spin j (multiple of 0.5)")->required();
    husimi->add_option("--theta", husimi_args.theta, "Initial polar angle");
    husimi->add_option("--phi", husimi_args.phi, "Initial azimuth");
    auto* husimi_kappa = husimi->add_option("--kappa", husimi_args.kappa, "Twist strength");
    auto* husimi_class = husimi->add_option("--kappa-class", husimi_args.kappa_class, "Twist class");
    husimi_kappa->excludes(husimi_class);
    husimi->add_option("--kicks", husimi_args.kicks, "Kicks before sampling (0 = initial state)");
    husimi->add_option("--theta-count", husimi_args.theta_count, "Grid rows");
    husimi->add_option("--phi-count", husimi_args.phi_count, "Grid columns");
    husimi->add_option("--out", husimi_args.out, "Field path (CSV)");

    EntropyArgs entropy_args;
    auto* entropy = app.add_subcommand("entropy", "Single-qubit entropy along a kicked orbit");
    entropy->fallthrough();
    entropy->add_option("--j", entropy_args.j, "Spin j (multiple of 0.5)")->required();
    auto* entropy_kappa = entropy->add_option("--kappa", entropy_args.kappa, "Twist strength");
    auto* entropy_class = entropy->add_option("--kappa-class", entropy_args.kappa_class, "Twist class");
    entropy_kappa->excludes(entropy_class);
    entropy->add_option("--state", entropy_args.state, "Initial state")
        ->check(CLI::IsMember({"+y", "coherent"}));
    entropy->add_option("--theta", entropy_args.theta, "Coherent-state polar angle");
    entropy->add_option("--phi", entropy_args.phi, "Coherent-state azimuth");
    entropy->add_option("--kicks", entropy_args.kicks, "Number of kicks");
    entropy->add_option("--kind", entropy_args.kind, "Entropy kind")
        ->check(CLI::IsMember({"vn", "linear"}));
    entropy->add_option("--out", entropy_args.out, "Series path (CSV)");

    ClassicalArgs classical_args;
    auto* classical = app.add_subcommand("classical", "Classical stroboscopic map trajectories");
    classical->fallthrough();
    classical->add_option("--kappa", classical_args.kappa, "Twist strength")->required();
    classical->add_option("--kicks", classical_args.kicks, "Number of kicks");
    classical->add_option("--theta", classical_args.theta, "Single-trajectory polar angle");
    classical->add_option("--phi", classical_args.phi, "Single-trajectory azimuth");
    classical->add_option("--grid-theta", classical_args.grid_theta, "Grid rows (enables grid mode)");
    classical->add_option("--grid-phi", classical_args.grid_phi, "Grid columns (enables grid mode)");
    classical->add_option("--out", classical_args.out, "Trajectories path (CSV)");

    StabilityArgs stability_args;
    auto* stability = app.add_subcommand("stability", "Entropy landscape under a twist perturbation delta");
    stability->fallthrough();
    stability->add_option("--j", stability_args.j, "Spin j (multiple of 0.5)")->required();
    stability->add_option("--kappa-class", stability_args.kappa_class, "Twist class (table classes only)")
        ->required();
    stability->add_option("--delta", stability_args.delta, "Perturbation added to kappa")->required();
    stability->add_option("--applications", stability_args.applications, "Orbit applications averaged");
    stability->add_option("--theta-count", stability_args.theta_count, "Grid rows");
    stability->add_option("--phi-count", stability_args.phi_count, "Grid columns");
    stability->add_option("--orbit-n", stability_args.orbit_n,
                          "Override the sampling stride (defaults to the class period)");
    stability->add_option("--out", stability_args.out, "Landscape path (CSV)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Certify the operator identities over a spin range");
    verify->fallthrough();
    verify->add_option("--check", verify_args.check, "Which family to run")
        ->check(CLI::IsMember({"all", "pi-twist", "twist-jpi", "u4-u6", "gauss-sum", "rational-classes"}));
    verify->add_option("--j-min", verify_args.j_min, "Smallest spin");
    verify->add_option("--j-max", verify_args.j_max, "Largest spin");
    verify->add_option("--tol", verify_args.tol, "Deviation tolerance");
    verify->add_option("--out", verify_args.out, "Report path (JSON)");

    const std::vector<CLI::App*> subs = {period, table, search, husimi, entropy, classical, stability, verify};
    std::string config_path;
    for (CLI::App* sub : subs) {
        sub->add_option("--config", config_path, "Flat key=value config file; explicit flags win");
        for (CLI::Option* opt : sub->get_options())
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    std::vector<std::string> args;
    try {
        args = splice_config(argc, argv, {"period", "table", "search", "husimi", "entropy",
                                          "classical", "stability", "verify"});
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return exit_invalid_args;
    }
    std::reverse(args.begin(), args.end()); // CLI11's vector overload takes reversed args
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid_args;
    }

    try {
        kt::set_threads(threads);
        if (app.got_subcommand(period)) return run_period(period_args, threads);
        if (app.got_subcommand(table)) return run_table(table_args, threads);
        if (app.got_subcommand(search)) return run_search(search_args, threads);
        if (app.got_subcommand(husimi)) return run_husimi(husimi_args, threads);
        if (app.got_subcommand(entropy)) return run_entropy(entropy_args, threads);
        if (app.got_subcommand(classical)) return run_classical(classical_args, threads);
        if (app.got_subcommand(stability)) return run_stability(stability_args, threads);
        if (app.got_subcommand(verify)) return run_verify(verify_args, threads);
    } catch (const kt::io::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return exit_io_error;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return exit_invalid_args;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return exit_invalid_args;
}
