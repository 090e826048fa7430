// Command-line front end: entropy and mutual information on CSV data,
// MRE simulation sweeps against the exact oracle, and information-based
// feature ranking/selection. Exit codes: 0 success, 2 input/validation
// failure, 3 numerical/estimator failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "renyi/csv.hpp"
#include "renyi/entropy.hpp"
#include "renyi/features.hpp"
#include "renyi/measures.hpp"
#include "renyi/simulate.hpp"

using nlohmann::json;

namespace {

struct CommonFlags {
    double alpha = 2.0;
    std::string method = "auto";
    int s = 0;
    int m = 0;
    double epsilon = 1e-2;
    double delta = 1e-2;
    std::string kernel = "gaussian:sigma=1";
    std::uint64_t seed = 0;
    bool bits = false;
    bool timings = false;
    std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_alpha = true) {
    if (with_alpha) cmd->add_option("--alpha", f.alpha, "Entropy order (positive, != 1)");
    cmd->add_option("--method", f.method, "exact|int|taylor|chebyshev|auto")
        ->check(CLI::IsMember({"exact", "int", "taylor", "chebyshev", "auto"}));
    cmd->add_option("--s", f.s, "Query budget (>= 8); 0 derives it from --epsilon/--delta");
    cmd->add_option("--m", f.m, "Polynomial degree; 0 derives it from --epsilon");
    cmd->add_option("--epsilon", f.epsilon, "Target relative error for derived parameters");
    cmd->add_option("--delta", f.delta, "Failure probability for derived parameters");
    cmd->add_option("--kernel", f.kernel, "gaussian:sigma=<x> | poly:p=<int>,r=<x>");
    cmd->add_option("--seed", f.seed, "RNG seed (all randomness derives from it)");
    cmd->add_flag("--bits", f.bits, "Report entropy in bits instead of nats");
    cmd->add_flag("--timings", f.timings,
                  "Include wall-clock fields (breaks bytewise reproducibility)");
    cmd->add_option("--output,-o", f.output, "Output path (default stdout)");
}

renyi::Method parse_method(const std::string& name) {
    if (name == "exact") return renyi::Method::exact;
    if (name == "int") return renyi::Method::int_power;
    if (name == "taylor") return renyi::Method::taylor;
    if (name == "chebyshev") return renyi::Method::chebyshev;
    return renyi::Method::auto_select;
}

renyi::KernelSpec parse_kernel(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::map<std::string, double> args;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            const std::string item = rest.substr(pos, comma - pos);
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                renyi::fail(renyi::errc::parse_error, "bad kernel argument '" + item + "'");
            args[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            pos = comma + 1;
        }
    }
    if (kind == "gaussian") {
        renyi::GaussianKernel k;
        if (args.count("sigma")) k.sigma = args["sigma"];
        return k;
    }
    if (kind == "poly") {
        renyi::PolynomialKernel k;
        if (args.count("p")) k.degree = static_cast<int>(args["p"]);
        if (args.count("r")) k.offset = args["r"];
        return k;
    }
    renyi::fail(renyi::errc::parse_error, "unknown kernel '" + kind + "'");
}

renyi::EstimatorParams to_params(const CommonFlags& f) {
    renyi::EstimatorParams p;
    p.alpha = f.alpha;
    p.method = parse_method(f.method);
    p.s = f.s;
    p.m = f.m;
    p.epsilon = f.epsilon;
    p.delta = f.delta;
    p.seed = f.seed;
    return p;
}

double presented(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }

void write_text(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) renyi::fail(renyi::errc::parse_error, "cannot write '" + output + "'");
    out << text;
}

void write_json(const std::string& output, const json& doc) {
    write_text(output, doc.dump(2) + "\n");
}

json entropy_json(const renyi::EntropyEstimate& est, const CommonFlags& f) {
    json doc;
    doc["entropy"] = presented(est.entropy, f.bits);
    doc["units"] = f.bits ? "bits" : "nats";
    doc["trace_estimate"] = est.trace_estimate;
    doc["method"] = renyi::method_name(est.method_used);
    doc["s"] = est.s_used;
    doc["m"] = est.m_used;
    if (est.bounds_used) {
        doc["u"] = est.bounds_used->u;
        doc["v"] = est.bounds_used->v;
    } else {
        doc["u"] = nullptr;
        doc["v"] = nullptr;
    }
    doc["elapsed"] = f.timings ? est.elapsed : 0.0;
    return doc;
}

int cmd_entropy(const std::string& input, const CommonFlags& f) {
    const renyi::Dataset data = renyi::load_csv(input);
    const renyi::NormalizedKernel kernel =
        renyi::build_kernel(data.features, parse_kernel(f.kernel));
    const renyi::EntropyEstimate est = renyi::estimate(kernel.matrix(), to_params(f));
    json doc = entropy_json(est, f);
    doc["n"] = static_cast<long>(kernel.size());
    doc["alpha"] = f.alpha;
    write_json(f.output, doc);
    return 0;
}

int cmd_mutual_info(const std::string& input, const std::string& target_input,
                    const std::string& label, const CommonFlags& f) {
    const bool have_label = !label.empty();
    const renyi::Dataset data =
        renyi::load_csv(input, have_label ? std::optional<std::string>(label) : std::nullopt);
    const renyi::KernelSpec kspec = parse_kernel(f.kernel);
    const renyi::NormalizedKernel x_kernel = renyi::build_kernel(data.features, kspec);

    renyi::NormalizedKernel y_kernel;
    if (have_label) {
        y_kernel = renyi::build_kernel(renyi::one_hot_labels(data.labels), kspec);
    } else {
        if (target_input.empty())
            renyi::fail(renyi::errc::invalid_argument, "need --target or --label");
        const renyi::Dataset target = renyi::load_csv(target_input);
        if (target.features.rows() != data.features.rows())
            renyi::fail(renyi::errc::size_mismatch, "input and target sample counts differ");
        y_kernel = renyi::build_kernel(target.features, kspec);
    }

    const renyi::MutualInformation mi =
        renyi::mutual_information({x_kernel}, y_kernel, to_params(f));
    json doc;
    doc["mi"] = presented(mi.value, f.bits);
    doc["units"] = f.bits ? "bits" : "nats";
    doc["terms"] = {{"S_x", presented(mi.vars_entropy, f.bits)},
                    {"S_y", presented(mi.target_entropy, f.bits)},
                    {"S_joint", presented(mi.joint_entropy, f.bits)}};
    doc["n"] = static_cast<long>(x_kernel.size());
    doc["alpha"] = f.alpha;
    write_json(f.output, doc);
    return 0;
}

int cmd_simulate(const renyi::SimulationSpec& spec, const std::string& output) {
    const std::vector<renyi::MreCell> cells = renyi::run_simulation(spec);
    std::string text = "alpha,s,m,method,mre,sd,mean_elapsed,oracle_elapsed,trials\n";
    char line[256];
    for (const auto& c : cells) {
        std::snprintf(line, sizeof(line), "%.17g,%d,%d,%s,%.17g,%.17g,%.17g,%.17g,%d\n", c.alpha,
                      c.s, c.m, renyi::method_name(c.method).c_str(), c.mre, c.sd, c.mean_elapsed,
                      c.oracle_elapsed, c.trials);
        text += line;
    }
    write_text(output, text);
    return 0;
}

json feature_list_json(const std::vector<std::string>& names, const std::vector<int>& columns,
                       const std::vector<double>& values, const char* value_key) {
    json arr = json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
        arr.push_back({{"name", names[i]}, {"column", columns[i]}, {value_key, values[i]}});
    return arr;
}

int cmd_rank(const std::string& input, const std::string& label, int k, const CommonFlags& f) {
    const renyi::Dataset data = renyi::load_csv(input, label);
    const renyi::RankingResult res =
        renyi::rank_features(data, parse_kernel(f.kernel), to_params(f), k);
    json doc;
    doc["mode"] = "rank";
    doc["k"] = k;
    doc["alpha"] = f.alpha;
    doc["features"] = feature_list_json(res.names, res.columns, res.scores, "score");
    if (f.timings) doc["elapsed_per_feature"] = res.elapsed;
    write_json(f.output, doc);
    return 0;
}

int cmd_select(const std::string& input, const std::string& label, int k, const CommonFlags& f) {
    const renyi::Dataset data = renyi::load_csv(input, label);
    const renyi::SelectionResult res =
        renyi::select_features(data, parse_kernel(f.kernel), to_params(f), k);
    json doc;
    doc["mode"] = "select";
    doc["k"] = k;
    doc["alpha"] = f.alpha;
    doc["features"] = feature_list_json(res.names, res.columns, res.objective, "objective");
    if (f.timings) doc["elapsed_per_step"] = res.elapsed;
    write_json(f.output, doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized matrix-based Renyi entropy estimation"};
    app.require_subcommand(1);

    std::string input, target_input, label;
    int k = 10;
    CommonFlags flags;

    auto* entropy = app.add_subcommand("entropy", "Entropy of a sample CSV");
    entropy->add_option("--input,-i", input, "CSV of samples (header row required)")->required();
    add_common(entropy, flags);

    auto* mi = app.add_subcommand("mutual-info", "Mutual information between two sample sets");
    mi->add_option("--input,-i", input, "CSV of X samples")->required();
    mi->add_option("--target", target_input, "CSV of Y samples");
    mi->add_option("--label", label, "Label column inside --input to use as Y");
    add_common(mi, flags);

    renyi::SimulationSpec sim;
    std::string sim_kernel = "gaussian:sigma=1";
    std::string sim_method = "auto";
    auto* simulate = app.add_subcommand("simulate", "MRE sweep against the exact oracle");
    simulate->add_option("--n", sim.n, "Samples per dataset (>= 16)");
    simulate->add_option("--d", sim.d, "Feature dimension");
    simulate->add_option("--center", sim.center, "Mixture center magnitude");
    simulate->add_option("--alpha", sim.alphas, "Alpha grid")->delimiter(',');
    simulate->add_option("--s", sim.s_list, "Query budget grid")->delimiter(',');
    simulate->add_option("--m", sim.m_list, "Degree grid")->delimiter(',');
    simulate->add_option("--trials", sim.trials, "Trials per cell (K)");
    simulate->add_option("--seed", sim.seed, "Base seed");
    simulate->add_option("--method", sim_method, "exact|int|taylor|chebyshev|auto")
        ->check(CLI::IsMember({"exact", "int", "taylor", "chebyshev", "auto"}));
    simulate->add_option("--kernel", sim_kernel, "gaussian:sigma=<x> | poly:p=<int>,r=<x>");
    simulate->add_option("--output,-o", flags.output, "Output CSV path (default stdout)");

    auto* rank = app.add_subcommand("rank", "Rank features by mutual information with the label");
    rank->add_option("--input,-i", input, "CSV with features and a label column")->required();
    rank->add_option("--label", label, "Label column name")->required();
    rank->add_option("--k", k, "Number of features to report");
    add_common(rank, flags);

    auto* select = app.add_subcommand("select", "Greedy forward feature selection");
    select->add_option("--input,-i", input, "CSV with features and a label column")->required();
    select->add_option("--label", label, "Label column name")->required();
    select->add_option("--k", k, "Number of features to select");
    add_common(select, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (entropy->parsed()) return cmd_entropy(input, flags);
        if (mi->parsed()) return cmd_mutual_info(input, target_input, label, flags);
        if (simulate->parsed()) {
            sim.kernel = parse_kernel(sim_kernel);
            sim.method = parse_method(sim_method);
            return cmd_simulate(sim, flags.output);
        }
        if (rank->parsed()) return cmd_rank(input, label, k, flags);
        if (select->parsed()) return cmd_select(input, label, k, flags);
    } catch (const renyi::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_usage() ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
