#include "tcorr.h"

#include "tcorr/lgi.hpp"
#include "tcorr/optimizer.hpp"
#include "tcorr/sweep.hpp"
#include "tcorr/tsi.hpp"
#include "tcorr/verify.hpp"

#include <cmath>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct tc_channel {
    tcorr::MemoryChannel impl;
};

struct tc_sweep {
    std::vector<tcorr::SweepRecord> records;
};

struct tc_verify_report {
    tcorr::VerifyReport impl;
};

namespace {

thread_local std::string g_last_error;

tc_status fail(tc_status status, const char* what) {
    g_last_error = what;
    return status;
}

template <typename Fn>
tc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TC_OK;
    } catch (const std::invalid_argument& e) {
        return fail(TC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(TC_ERR_IO, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(TC_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(TC_ERR_INTERNAL, e.what());
    }
}

tcorr::ChannelKind to_kind(tc_channel_kind kind) {
    switch (kind) {
        case TC_CHANNEL_AMPLITUDE_DAMPING: return tcorr::ChannelKind::AmplitudeDamping;
        case TC_CHANNEL_PHASE_DAMPING: return tcorr::ChannelKind::PhaseDamping;
        case TC_CHANNEL_DEPOLARIZING: return tcorr::ChannelKind::Depolarizing;
    }
    throw std::invalid_argument("unknown channel kind");
}

tc_channel_kind from_kind(tcorr::ChannelKind kind) {
    switch (kind) {
        case tcorr::ChannelKind::AmplitudeDamping: return TC_CHANNEL_AMPLITUDE_DAMPING;
        case tcorr::ChannelKind::PhaseDamping: return TC_CHANNEL_PHASE_DAMPING;
        case tcorr::ChannelKind::Depolarizing: return TC_CHANNEL_DEPOLARIZING;
    }
    return TC_CHANNEL_AMPLITUDE_DAMPING;
}

tcorr::BsmType to_type(tc_bsm_type type) {
    switch (type) {
        case TC_BSM_TYPE_I: return tcorr::BsmType::TypeI;
        case TC_BSM_TYPE_II: return tcorr::BsmType::TypeII;
        case TC_BSM_TYPE_III: return tcorr::BsmType::TypeIII;
    }
    throw std::invalid_argument("unknown BSM type");
}

tcorr::LgiConfig make_config(const tcorr::MemoryChannel& channel, tc_bsm_type type,
                             const tc_angles& angles, double k1) {
    return tcorr::LgiConfig{
        k1,
        {tcorr::Direction(angles.theta[0], angles.phi[0]),
         tcorr::Direction(angles.theta[1], angles.phi[1]),
         tcorr::Direction(angles.theta[2], angles.phi[2]),
         tcorr::Direction(angles.theta[3], angles.phi[3])},
        to_type(type), channel};
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void copy_string(char* dst, size_t capacity, const std::string& src) {
    const size_t n = std::min(capacity - 1, src.size());
    std::memcpy(dst, src.data(), n);
    dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "1.0.0"; }

const char* tc_status_message(tc_status status) {
    switch (status) {
        case TC_OK: return "ok";
        case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case TC_ERR_IO: return "i/o error";
        case TC_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

tc_status tc_channel_create(tc_channel_kind kind, double p, double mu,
                            tc_channel** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new tc_channel{tcorr::MemoryChannel(to_kind(kind), p, mu)};
    });
}

void tc_channel_destroy(tc_channel* channel) { delete channel; }

tc_status tc_channel_completeness_residual(const tc_channel* channel, double* out) {
    return guarded([&] {
        require(channel != nullptr && out != nullptr, "null pointer");
        *out = channel->impl.completeness_residual();
    });
}

tc_status tc_k4_preset_angles(tc_channel_kind kind, tc_bsm_type type, tc_angles* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        const tcorr::AnglePreset preset = tcorr::optimal_angles(to_kind(kind), to_type(type));
        for (int i = 0; i < 4; ++i) {
            out->theta[i] = preset.theta[i];
            out->phi[i] = preset.phi[i];
        }
    });
}

tc_status tc_k4_evaluate(const tc_channel* channel, tc_bsm_type type,
                         const tc_angles* angles, double k1, double* out) {
    return guarded([&] {
        require(channel != nullptr && angles != nullptr && out != nullptr, "null pointer");
        *out = tcorr::k4(make_config(channel->impl, type, *angles, k1));
    });
}

tc_status tc_k4_reference(tc_channel_kind kind, tc_bsm_type type, double p, double mu,
                          double* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = tcorr::k4_reference(to_kind(kind), to_type(type), p, mu);
    });
}

tc_status tc_s4_evaluate(const tc_channel* channel, int basis_a, int basis_b, double k1,
                         double* out) {
    return guarded([&] {
        require(channel != nullptr && out != nullptr, "null pointer");
        *out = tcorr::s4(tcorr::TsiConfig{k1, basis_a, basis_b, channel->impl});
    });
}

tc_status tc_s4_reference(tc_channel_kind kind, double p, double mu, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = tcorr::s4_reference(to_kind(kind), p, mu);
    });
}

tc_status tc_classical_bound(int dimension, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = tcorr::classical_bound(dimension);
    });
}

tc_status tc_k4_maximize(tc_channel_kind kind, double p, double mu, tc_bsm_type type,
                         int restarts, uint64_t seed, int optimize_k1,
                         tc_opt_result* out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        const tcorr::OptResult result = tcorr::maximize_k4(
            to_kind(kind), p, mu, to_type(type), restarts, seed, optimize_k1 != 0);
        for (int i = 0; i < 4; ++i) {
            out->theta[i] = result.best_params[i];
            out->phi[i] = result.best_params[4 + i];
        }
        out->k1 = optimize_k1 ? result.best_params[8] : 1.0 / std::sqrt(2.0);
        out->best_value = result.best_value;
        out->evaluations = result.evaluations;
        out->restart_index = result.restart_index;
    });
}

tc_status tc_k4_sweep(tc_channel_kind kind, tc_bsm_type type, double p_start,
                      double p_stop, int p_count, const double* mu_list, size_t mu_count,
                      const tc_angles* angles, double k1, tc_sweep** out) {
    return guarded([&] {
        require(out != nullptr && mu_list != nullptr && mu_count > 0, "null pointer");
        std::optional<tcorr::AnglePreset> custom;
        if (angles != nullptr) {
            tcorr::AnglePreset preset;
            for (int i = 0; i < 4; ++i) {
                preset.theta[i] = angles->theta[i];
                preset.phi[i] = angles->phi[i];
            }
            custom = preset;
        }
        auto records = tcorr::k4_sweep(to_kind(kind), to_type(type),
                                       tcorr::GridSpec{p_start, p_stop, p_count},
                                       std::vector<double>(mu_list, mu_list + mu_count),
                                       custom, k1);
        *out = new tc_sweep{std::move(records)};
    });
}

tc_status tc_s4_sweep(tc_channel_kind kind, int basis_a, int basis_b, double p_start,
                      double p_stop, int p_count, const double* mu_list, size_t mu_count,
                      double k1, tc_sweep** out) {
    return guarded([&] {
        require(out != nullptr && mu_list != nullptr && mu_count > 0, "null pointer");
        auto records = tcorr::s4_sweep(to_kind(kind), basis_a, basis_b,
                                       tcorr::GridSpec{p_start, p_stop, p_count},
                                       std::vector<double>(mu_list, mu_list + mu_count),
                                       k1);
        *out = new tc_sweep{std::move(records)};
    });
}

void tc_sweep_destroy(tc_sweep* sweep) { delete sweep; }

size_t tc_sweep_size(const tc_sweep* sweep) {
    return sweep ? sweep->records.size() : 0;
}

tc_status tc_sweep_record_at(const tc_sweep* sweep, size_t index, tc_sweep_record* out) {
    return guarded([&] {
        require(sweep != nullptr && out != nullptr, "null pointer");
        require(index < sweep->records.size(), "record index out of range");
        const tcorr::SweepRecord& r = sweep->records[index];
        out->witness = (r.witness == tcorr::Witness::K4) ? TC_WITNESS_K4 : TC_WITNESS_S4;
        out->channel = from_kind(r.kind);
        copy_string(out->scheme, sizeof(out->scheme), r.scheme);
        out->p = r.p;
        out->mu = r.mu;
        out->simulated = r.simulated;
        out->reference = r.reference.value_or(0.0);
        out->has_reference = r.reference.has_value() ? 1 : 0;
        out->classical_bound = r.classical_bound;
    });
}

tc_status tc_sweep_csv(const tc_sweep* sweep, char** out) {
    return guarded([&] {
        require(sweep != nullptr && out != nullptr, "null pointer");
        const std::string text = tcorr::csv_string(sweep->records);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.data(), text.size() + 1);
        *out = buffer;
    });
}

tc_status tc_sweep_write_csv(const tc_sweep* sweep, const char* path,
                             uint64_t* rows_written) {
    return guarded([&] {
        require(sweep != nullptr && path != nullptr, "null pointer");
        const size_t rows = tcorr::write_csv(sweep->records, path);
        if (rows_written != nullptr) *rows_written = rows;
    });
}

void tc_string_free(char* text) { delete[] text; }

tc_status tc_verify_run(int grid_count, const double* mu_list, size_t mu_count,
                        int restarts, uint64_t seed, tc_verify_report** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        tcorr::VerifyOptions opts;
        opts.grid_count = grid_count;
        if (mu_list != nullptr && mu_count > 0) {
            opts.mu_list.assign(mu_list, mu_list + mu_count);
        }
        for (double mu : opts.mu_list) {
            require(mu >= 0.0 && mu <= 1.0, "mu outside [0, 1]");
        }
        opts.restarts = restarts;
        opts.seed = seed;
        *out = new tc_verify_report{tcorr::run_verification(opts)};
    });
}

void tc_verify_report_destroy(tc_verify_report* report) { delete report; }

size_t tc_verify_check_count(const tc_verify_report* report) {
    return report ? report->impl.checks.size() : 0;
}

tc_status tc_verify_check_at(const tc_verify_report* report, size_t index,
                             tc_verify_check* out) {
    return guarded([&] {
        require(report != nullptr && out != nullptr, "null pointer");
        require(index < report->impl.checks.size(), "check index out of range");
        const tcorr::VerifyCheck& check = report->impl.checks[index];
        copy_string(out->name, sizeof(out->name), check.name);
        out->criterion = check.criterion;
        out->measured = check.measured;
        out->threshold = check.threshold;
        out->higher_is_better = check.higher_is_better ? 1 : 0;
        out->passed = check.passed ? 1 : 0;
        out->flagged = check.flagged ? 1 : 0;
        copy_string(out->note, sizeof(out->note), check.note);
    });
}

int tc_verify_all_passed(const tc_verify_report* report) {
    return (report && report->impl.all_passed()) ? 1 : 0;
}

}  // extern "C"
