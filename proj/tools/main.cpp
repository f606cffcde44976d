// Command-line front end for the tcorr shared library.  Subcommands:
//   lgi-sweep   K4 vs damping strength, CSV output
//   tsi-sweep   S4 vs damping strength, CSV output
//   optimize    seeded multi-restart search for the K4 maximum
//   verify      curve regressions plus the full property suite
//
// Exit codes: 0 success, 1 failed checks or I/O trouble, 2 usage errors.

#include "tcorr.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr double kDefaultK1 = 0.70710678118654752;

// Flat JSON objects mirror the flag names: {"channel": "pd", "mu": [0,0.5,1]}.
// The file is merged into argv before parsing; flags given on the command
// line always win over file values.
std::vector<std::string> merge_config_file(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::runtime_error("--config needs a path");
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
        } else {
            ++i;
        }
    }
    if (path.empty()) return args;

    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw std::runtime_error("config file must hold a JSON object");
    }

    auto already_given = [&](const std::string& flag) {
        for (const auto& arg : args) {
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
        }
        return false;
    };

    for (const auto& [key, value] : j.items()) {
        const std::string flag = "--" + key;
        if (already_given(flag)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& element : value) {
                if (!joined.empty()) joined += ',';
                joined += element.is_string() ? element.get<std::string>()
                                              : element.dump();
            }
            args.push_back(flag);
            args.push_back(joined);
        } else {
            args.push_back(flag);
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return args;
}

int fail_with(tc_status status, const std::string& context) {
    std::cerr << "error: " << context << ": " << tc_status_message(status);
    const char* detail = tc_last_error();
    if (detail && detail[0] != '\0') std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    return status == TC_ERR_INVALID_ARGUMENT ? 2 : 1;
}

tc_channel_kind parse_channel(const std::string& name) {
    if (name == "ad") return TC_CHANNEL_AMPLITUDE_DAMPING;
    if (name == "pd") return TC_CHANNEL_PHASE_DAMPING;
    if (name == "depol") return TC_CHANNEL_DEPOLARIZING;
    throw CLI::ValidationError("--channel", "must be one of ad, pd, depol");
}

tc_bsm_type parse_type(const std::string& name) {
    if (name == "I") return TC_BSM_TYPE_I;
    if (name == "II") return TC_BSM_TYPE_II;
    if (name == "III") return TC_BSM_TYPE_III;
    throw CLI::ValidationError("--type", "must be one of I, II, III");
}

struct SweepFlags {
    std::string channel;
    double p_start = 0.0;
    double p_stop = 1.0;
    int grid = 11;
    std::vector<double> mu = {0.0, 0.5, 1.0};
    double k1 = kDefaultK1;
    std::string out_path;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--channel", flags.channel, "Channel kind: ad, pd, depol")
        ->required();
    cmd->add_option("--p-start", flags.p_start, "First damping value");
    cmd->add_option("--p-stop", flags.p_stop, "Last damping value");
    cmd->add_option("--grid", flags.grid, "Number of damping grid points");
    cmd->add_option("--mu", flags.mu, "Memory coefficients (comma separated)")
        ->delimiter(',');
    cmd->add_option("--k1", flags.k1, "Schmidt coefficient of the initial state");
    cmd->add_option("--out", flags.out_path, "Write CSV here instead of stdout");
    cmd->add_option("--config", "JSON file with flag values; explicit flags win")
        ->type_name("FILE");
}

int emit_sweep(tc_sweep* sweep, const std::string& out_path) {
    std::unique_ptr<tc_sweep, decltype(&tc_sweep_destroy)> guard(sweep, tc_sweep_destroy);
    if (!out_path.empty()) {
        uint64_t rows = 0;
        const tc_status status = tc_sweep_write_csv(sweep, out_path.c_str(), &rows);
        if (status != TC_OK) return fail_with(status, "writing " + out_path);
        return 0;
    }
    char* text = nullptr;
    const tc_status status = tc_sweep_csv(sweep, &text);
    if (status != TC_OK) return fail_with(status, "formatting CSV");
    std::fputs(text, stdout);
    tc_string_free(text);
    return 0;
}

int run_lgi_sweep(const SweepFlags& flags, const std::string& type,
                  const std::vector<double>& angles) {
    tc_angles custom;
    const tc_angles* angles_ptr = nullptr;
    if (!angles.empty()) {
        if (angles.size() != 8) {
            std::cerr << "error: --angles needs 8 values (theta1..4, phi1..4)\n";
            return 2;
        }
        for (int i = 0; i < 4; ++i) {
            custom.theta[i] = angles[i];
            custom.phi[i] = angles[4 + i];
        }
        angles_ptr = &custom;
    }
    tc_sweep* sweep = nullptr;
    const tc_status status =
        tc_k4_sweep(parse_channel(flags.channel), parse_type(type), flags.p_start,
                    flags.p_stop, flags.grid, flags.mu.data(), flags.mu.size(),
                    angles_ptr, flags.k1, &sweep);
    if (status != TC_OK) return fail_with(status, "lgi-sweep");
    return emit_sweep(sweep, flags.out_path);
}

int run_tsi_sweep(const SweepFlags& flags, const std::vector<int>& pair) {
    if (pair.size() != 2) {
        std::cerr << "error: --pair needs exactly 2 MUB indices\n";
        return 2;
    }
    tc_sweep* sweep = nullptr;
    const tc_status status =
        tc_s4_sweep(parse_channel(flags.channel), pair[0], pair[1], flags.p_start,
                    flags.p_stop, flags.grid, flags.mu.data(), flags.mu.size(), flags.k1,
                    &sweep);
    if (status != TC_OK) return fail_with(status, "tsi-sweep");
    return emit_sweep(sweep, flags.out_path);
}

int run_optimize(const std::string& channel, const std::string& type, double p,
                 double mu, int restarts, uint64_t seed, bool fix_k1,
                 const std::string& json_path) {
    tc_opt_result result;
    const tc_status status =
        tc_k4_maximize(parse_channel(channel), p, mu, parse_type(type), restarts, seed,
                       fix_k1 ? 0 : 1, &result);
    if (status != TC_OK) return fail_with(status, "optimize");

    std::printf("channel=%s type=%s p=%g mu=%g restarts=%d seed=%llu\n", channel.c_str(),
                type.c_str(), p, mu, restarts, static_cast<unsigned long long>(seed));
    std::printf("best K4        %.10g\n", result.best_value);
    std::printf("theta          %.10g %.10g %.10g %.10g\n", result.theta[0],
                result.theta[1], result.theta[2], result.theta[3]);
    std::printf("phi            %.10g %.10g %.10g %.10g\n", result.phi[0], result.phi[1],
                result.phi[2], result.phi[3]);
    std::printf("k1             %.10g%s\n", result.k1, fix_k1 ? " (frozen)" : "");
    std::printf("evaluations    %ld\n", result.evaluations);
    std::printf("restart index  %d\n", result.restart_index);

    if (!json_path.empty()) {
        nlohmann::json j;
        j["channel"] = channel;
        j["type"] = type;
        j["p"] = p;
        j["mu"] = mu;
        j["restarts"] = restarts;
        j["seed"] = seed;
        j["optimize_k1"] = !fix_k1;
        j["best"] = {{"theta", {result.theta[0], result.theta[1], result.theta[2],
                                result.theta[3]}},
                     {"phi", {result.phi[0], result.phi[1], result.phi[2],
                              result.phi[3]}},
                     {"k1", result.k1},
                     {"value", result.best_value}};
        j["evaluations"] = result.evaluations;
        j["restart_index"] = result.restart_index;
        std::ofstream file(json_path);
        if (!file) {
            std::cerr << "error: cannot open " << json_path << "\n";
            return 1;
        }
        file << j.dump(2) << "\n";
    }
    return 0;
}

int run_verify(int grid, const std::vector<double>& mu, int restarts, uint64_t seed) {
    tc_verify_report* report = nullptr;
    const tc_status status =
        tc_verify_run(grid, mu.data(), mu.size(), restarts, seed, &report);
    if (status != TC_OK) return fail_with(status, "verify");
    std::unique_ptr<tc_verify_report, decltype(&tc_verify_report_destroy)> guard(
        report, tc_verify_report_destroy);

    std::printf("%-6s %-4s %-13s %-2s %-13s %s\n", "status", "crit", "measured", "",
                "threshold", "check");
    size_t failed = 0;
    for (size_t i = 0; i < tc_verify_check_count(report); ++i) {
        tc_verify_check check;
        if (tc_verify_check_at(report, i, &check) != TC_OK) continue;
        if (!check.passed) ++failed;
        std::printf("%-6s %-4d %13.6e %-2s %13.6e %s%s\n",
                    check.passed ? "PASS" : "FAIL", check.criterion, check.measured,
                    check.higher_is_better ? ">=" : "<=", check.threshold, check.name,
                    check.flagged ? " [flagged]" : "");
        if (check.note[0] != '\0') std::printf("       note: %s\n", check.note);
    }
    const bool ok = tc_verify_all_passed(report) != 0;
    std::printf("%zu checks, %zu failed -> %s\n", tc_verify_check_count(report), failed,
                ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal-correlation witnesses (K4, S4) for two-qubit states under "
                 "decoherence channels with memory"};
    app.require_subcommand(1);

    SweepFlags lgi_flags;
    std::string lgi_type = "I";
    std::vector<double> lgi_angles;
    CLI::App* lgi = app.add_subcommand("lgi-sweep", "K4 vs damping strength as CSV");
    add_sweep_flags(lgi, lgi_flags);
    lgi->add_option("--type", lgi_type, "BSM type: I, II, III");
    lgi->add_option("--angles", lgi_angles,
                    "Custom angles theta1..4,phi1..4 (default: catalogued optima)")
        ->delimiter(',');

    SweepFlags tsi_flags;
    std::vector<int> tsi_pair = {1, 2};
    CLI::App* tsi = app.add_subcommand("tsi-sweep", "S4 vs damping strength as CSV");
    add_sweep_flags(tsi, tsi_flags);
    tsi->add_option("--pair", tsi_pair, "Alice/Bob MUB indices, e.g. 1,2")
        ->delimiter(',');

    std::string opt_channel;
    std::string opt_type = "I";
    double opt_p = 0.0;
    double opt_mu = 0.0;
    int opt_restarts = 64;
    uint64_t opt_seed = 20240731ULL;
    bool opt_fix_k1 = false;
    std::string opt_json;
    CLI::App* optimize = app.add_subcommand("optimize", "Search for the K4 maximum");
    optimize->add_option("--channel", opt_channel, "Channel kind: ad, pd, depol")
        ->required();
    optimize->add_option("--type", opt_type, "BSM type: I, II, III");
    optimize->add_option("--p", opt_p, "Damping strength");
    optimize->add_option("--mu", opt_mu, "Memory coefficient");
    optimize->add_option("--restarts", opt_restarts, "Random restarts");
    optimize->add_option("--seed", opt_seed, "RNG seed");
    optimize->add_flag("--fix-k1", opt_fix_k1, "Freeze k1 at 1/sqrt(2)");
    optimize->add_option("--json", opt_json, "Write a JSON report here");
    optimize->add_option("--config", "JSON file with flag values; explicit flags win")
        ->type_name("FILE");

    int verify_grid = 11;
    std::vector<double> verify_mu = {0.0, 0.5, 1.0};
    int verify_restarts = 64;
    uint64_t verify_seed = 20240731ULL;
    CLI::App* verify =
        app.add_subcommand("verify", "Run curve regressions and the property suite");
    verify->add_option("--grid", verify_grid, "Damping grid points");
    verify->add_option("--mu", verify_mu, "Memory coefficients (comma separated)")
        ->delimiter(',');
    verify->add_option("--restarts", verify_restarts, "Optimizer restarts");
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--config", "JSON file with flag values; explicit flags win")
        ->type_name("FILE");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config_file(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (lgi->parsed()) return run_lgi_sweep(lgi_flags, lgi_type, lgi_angles);
        if (tsi->parsed()) return run_tsi_sweep(tsi_flags, tsi_pair);
        if (optimize->parsed()) {
            return run_optimize(opt_channel, opt_type, opt_p, opt_mu, opt_restarts,
                                opt_seed, opt_fix_k1, opt_json);
        }
        if (verify->parsed()) {
            return run_verify(verify_grid, verify_mu, verify_restarts, verify_seed);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
