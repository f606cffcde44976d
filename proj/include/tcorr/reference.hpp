#pragma once

#include "tcorr/channels.hpp"
#include "tcorr/measurements.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tcorr {

enum class Witness { K4, S4 };

struct ReferenceKey {
    Witness witness;
    ChannelKind kind;
    std::optional<BsmType> bsm_type;  // present iff witness == K4
};

// Closed-form regression targets for the witness curves, one per
// (channel, measurement) combination.  The K4 curves carry two-decimal
// coefficients transcribed digit for digit; the S4 curves are exact
// expressions.  Do not refit.
double reference_value(const ReferenceKey& key, double p, double mu);

double k4_reference(ChannelKind kind, BsmType type, double p, double mu);
double s4_reference(ChannelKind kind, double p, double mu);

// Optimal measurement angles for each (channel, type), as catalogued to two
// decimals, plus the value K4 reaches at p=0 there.
struct AnglePreset {
    std::array<double, 4> theta;
    std::array<double, 4> phi;
};

AnglePreset optimal_angles(ChannelKind kind, BsmType type);
double k4_maximum(ChannelKind kind, BsmType type);

struct RegressionRow {
    ReferenceKey key;
    double max_abs_deviation;
};

// Per curve, max |simulated - reference| over the grid, with the catalogued
// angles and k1 = 1/sqrt(2) on the simulation side.
std::vector<RegressionRow> regression_report(const std::vector<double>& p_grid,
                                             const std::vector<double>& mu_list);

}  // namespace tcorr
