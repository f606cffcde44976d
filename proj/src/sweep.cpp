#include "tcorr/sweep.hpp"

#include "tcorr/lgi.hpp"
#include "tcorr/tsi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tcorr {

namespace {

const char* kCsvHeader = "witness,channel,scheme,p,mu,simulated,reference,classical_bound";

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::vector<double> sorted(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return values;
}

bool is_default_k1(double k1) {
    return std::abs(k1 - 1.0 / std::sqrt(2.0)) < 1e-12;
}

bool mixed_mub_pair(int a, int b) {
    auto is_product = [](int i) { return i == 1 || i == 3; };
    auto is_entangled = [](int i) { return i == 2 || i == 4; };
    return (is_product(a) && is_entangled(b)) || (is_product(b) && is_entangled(a));
}

}  // namespace

std::vector<double> grid_points(const GridSpec& grid) {
    if (grid.count < 2) throw std::invalid_argument("grid count must be >= 2");
    if (!(grid.start >= 0.0 && grid.stop <= 1.0 && grid.start < grid.stop)) {
        throw std::invalid_argument("grid must lie in [0, 1] with start < stop");
    }
    std::vector<double> points(grid.count);
    for (int i = 0; i < grid.count; ++i) {
        points[i] = grid.start + (grid.stop - grid.start) * i / (grid.count - 1);
    }
    return points;
}

std::vector<SweepRecord> k4_sweep(ChannelKind kind, BsmType type, const GridSpec& grid,
                                  std::vector<double> mu_list,
                                  const std::optional<AnglePreset>& custom_angles,
                                  double k1) {
    for (double mu : mu_list) {
        if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu outside [0, 1]");
    }
    const AnglePreset angles = custom_angles ? *custom_angles : optimal_angles(kind, type);
    const bool with_reference = !custom_angles && is_default_k1(k1);

    std::vector<SweepRecord> records;
    for (const double mu : sorted(std::move(mu_list))) {
        for (const double p : grid_points(grid)) {
            const MemoryChannel channel(kind, p, mu);
            const LgiConfig cfg{k1,
                                {Direction(angles.theta[0], angles.phi[0]),
                                 Direction(angles.theta[1], angles.phi[1]),
                                 Direction(angles.theta[2], angles.phi[2]),
                                 Direction(angles.theta[3], angles.phi[3])},
                                type, channel};
            SweepRecord record{Witness::K4, kind, to_string(type), p, mu, k4(cfg),
                               std::nullopt, 2.0};
            if (with_reference) record.reference = k4_reference(kind, type, p, mu);
            records.push_back(std::move(record));
        }
    }
    return records;
}

std::vector<SweepRecord> s4_sweep(ChannelKind kind, int basis_a, int basis_b,
                                  const GridSpec& grid, std::vector<double> mu_list,
                                  double k1) {
    for (double mu : mu_list) {
        if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu outside [0, 1]");
    }
    const std::string scheme = "M" + std::to_string(basis_a) + "M" + std::to_string(basis_b);
    const bool with_reference = mixed_mub_pair(basis_a, basis_b);

    std::vector<SweepRecord> records;
    for (const double mu : sorted(std::move(mu_list))) {
        for (const double p : grid_points(grid)) {
            const TsiConfig cfg{k1, basis_a, basis_b, MemoryChannel(kind, p, mu)};
            SweepRecord record{Witness::S4, kind, scheme, p, mu, s4(cfg),
                               std::nullopt, 1.5};
            if (with_reference) record.reference = s4_reference(kind, p, mu);
            records.push_back(std::move(record));
        }
    }
    return records;
}

std::string csv_string(const std::vector<SweepRecord>& records) {
    if (records.empty()) throw std::invalid_argument("no records to write");
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : records) {
        out += (r.witness == Witness::K4) ? "K4" : "S4";
        out += ',';
        out += to_string(r.kind);
        out += ',';
        out += r.scheme;
        out += ',';
        out += format_real(r.p);
        out += ',';
        out += format_real(r.mu);
        out += ',';
        out += format_real(r.simulated);
        out += ',';
        if (r.reference) out += format_real(*r.reference);
        out += ',';
        out += format_real(r.classical_bound);
        out += '\n';
    }
    return out;
}

size_t write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    const std::string content = csv_string(records);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
    if (!file) throw std::runtime_error("write failed: " + path);
    return records.size();
}

}  // namespace tcorr
