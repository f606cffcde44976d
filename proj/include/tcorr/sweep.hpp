#pragma once

#include "tcorr/reference.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tcorr {

// One (channel, scheme, p, mu) evaluation row.  `reference` is attached only
// when a catalogued closed form describes the exact configuration being
// simulated.
struct SweepRecord {
    Witness witness;
    ChannelKind kind;
    std::string scheme;  // "I"/"II"/"III" for K4, "M1M2"-style for S4
    double p;
    double mu;
    double simulated;
    std::optional<double> reference;
    double classical_bound;  // 2 for K4, 1.5 for S4
};

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    int count = 11;
};

std::vector<double> grid_points(const GridSpec& grid);

// Records ordered by (mu, p).  The reference column is filled when the
// catalogued angles and k1 = 1/sqrt(2) are in use.
std::vector<SweepRecord> k4_sweep(ChannelKind kind, BsmType type, const GridSpec& grid,
                                  std::vector<double> mu_list,
                                  const std::optional<AnglePreset>& custom_angles,
                                  double k1);

// The closed forms describe mixed pairs of one product basis (M1 or M3) with
// one entangled basis (M2 or M4); other pairs get no reference column.
std::vector<SweepRecord> s4_sweep(ChannelKind kind, int basis_a, int basis_b,
                                  const GridSpec& grid, std::vector<double> mu_list,
                                  double k1);

std::string csv_string(const std::vector<SweepRecord>& records);

// Returns the number of data rows written.
size_t write_csv(const std::vector<SweepRecord>& records, const std::string& path);

}  // namespace tcorr
