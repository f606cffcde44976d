#include "tcorr/reference.hpp"

#include "tcorr/lgi.hpp"
#include "tcorr/tsi.hpp"

#include <cmath>
#include <stdexcept>

namespace tcorr {

namespace {

void check_range(double p, double mu) {
    if (!(p >= 0.0 && p <= 1.0) || !(mu >= 0.0 && mu <= 1.0)) {
        throw std::invalid_argument("p and mu must lie in [0, 1]");
    }
}

// The nine K4 curves keep the grouping of the source expressions: a constant
// block, then one block per power of p, each with nested mu terms.

double k4_ad_type1(double p, double m) {
    const double s = std::sqrt(1.0 - p);
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
    return 2.27 + 0.91 * s
         + m * (-3.23 + 3.23 * s + m * (7.18 - 7.18 * s + (-4.84 + 4.84 * s) * m))
         + p5 * (0.07 + m * (-0.22 + (0.22 - 0.07 * m) * m))
         + p * (-5.38 - 1.02 * s
                + m * (12.41 - 6.12 * s
                       + m * (-18.04 + 14.44 * s + (10.94 - 8.52 * s) * m)))
         + p3 * (-1.64 - 0.01 * s
                 + m * (4.86 - 0.30 * s
                        + m * (-4.64 + 0.55 * s + (1.42 - 0.24 * s) * m)))
         + p4 * (0.82
                 + m * (-1.51 + 0.08 * s
                        + m * (0.54 - 0.16 * s + (0.14 + 0.08 * s) * m)))
         + p2 * (4.55 + 0.12 * s
                 + m * (-11.80 + 3.66 * s
                        + m * (14.74 - 7.62 * s + (-7.49 + 3.84 * s) * m)));
}

double k4_ad_type2(double p, double m) {
    const double s = std::sqrt(1.0 - p);
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    return 2.11 + 0.72 * s
         + m * (-4.55 + 4.55 * s + m * (7.89 - 7.89 * s + (-4.99 + 4.99 * s) * m))
         + p6 * (-1.07 + m * (3.22 + m * (-3.22 + 1.07 * m)))
         + p * (-1.67 - 0.36 * s
                + m * (10.67 - 8.25 * s
                       + m * (-19.58 + 15.63 * s + (10.98 - 8.48 * s) * m)))
         + p3 * (17.82 - 0.04 * s
                 + m * (-32.80 - 0.69 * s
                        + m * (16.70 + 1.07 * s + (-1.72 - 0.34 * s) * m)))
         + p5 * (6.22 + m * (-16.52 + m * (14.37 - 4.08 * m)))
         + p4 * (-15.24 + 0.01 * s
                 + m * (35.23 + 0.31 * s
                        + m * (-25.83 - 0.66 * s + (5.83 + 0.34 * s) * m)))
         + p2 * (-8.16 + 0.23 * s
                 + m * (5.49 + 4.55 * s
                        + m * (9.67 - 8.17 * s + (-7.08 + 3.47 * s) * m)));
}

double k4_ad_type3(double p, double m) {
    const double s = std::sqrt(1.0 - p);
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    return 1.65 + 1.17 * s
         + m * (-0.16 + 0.16 * s + m * (1.11 - 1.11 * s + (-1.50 + 1.50 * s) * m))
         + p6 * (-0.13 + m * (0.40 + (-0.40 + 0.13 * m) * m))
         + p * (-2.44 - 1.84 * s
                + m * (3.89 - 0.31 * s
                       + m * (-3.69 + 3.14 * s + (2.88 - 2.13 * s) * m)))
         + p3 * (3.10 - 0.49 * s
                 + m * (-5.30 - 1.11 * s
                        + m * (2.19 + 2.76 * s + (0.01 - 1.16 * s) * m)))
         + p5 * (1.04 + m * (-2.84 + m * (2.57 - 0.77 * m)))
         + p4 * (-2.66 - 0.02 * s
                 + m * (6.30 + 0.84 * s
                        + m * (-4.76 - 1.62 * s + (1.12 + 0.80 * s) * m)))
         + p2 * (0.31 + 1.89 * s
                 + m * (-1.56 + 0.35 * s
                        + m * (2.98 - 3.09 * s + (-1.88 + 1.00 * s) * m)));
}

double k4_pd_type1(double p, double m) {
    // Every mu group cancels at mu = 1, leaving the constant 3.
    const double p2 = p * p;
    return 3.0 + p * (-16.0 + 16.0 * m
                      + p * (32.0 + m * (-48.0 + 16.0 * m)
                             + p * (-32.0 + m * (64.0 - 32.0 * m))
                             + p2 * (16.0 + m * (-32.0 + 16.0 * m))));
}

double k4_pd_type2(double p, double m) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double om = 1.0 - m;
    return 2.83 + 17.65 * p6 * om * om * om
         + p4 * (99.63 - 252.22 * m + 205.56 * m * m - 52.96 * m * m * m)
         + p2 * (40.17 - 54.07 * m + 17.47 * m * m)
         + p * (-14.86 + 10.91 * m)
         + p3 * (-77.79 + 160.26 * m - 102.51 * m * m + 17.65 * m * m * m)
         + p5 * (-67.56 + 188.08 * m - 173.49 * m * m + 52.96 * m * m * m);
}

double k4_pd_type3(double p, double m) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double om = 1.0 - m;
    return 2.83 + 45.94 * p6 * om * om * om
         + p4 * (175.19 - 488.19 * m + 450.82 * m * m - 137.82 * m * m * m)
         + p * (-17.91 + 17.85 * m)
         + p2 * (56.50 - 93.87 * m + 37.37 * m * m)
         + p3 * (-121.96 + 288.57 * m - 212.55 * m * m + 45.94 * m * m * m)
         + p5 * (-137.82 + 413.45 * m - 413.45 * m * m + 137.82 * m * m * m);
}

double k4_depol_type1(double p, double m) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double om = 1.0 - m;
    return 3.18 + 7.27 * p6 * om * om * om
         + p * (-15.32 + 12.54 * m)
         + p2 * (37.68 - 57.20 * m + 21.14 * m * m)
         + p4 * (61.28 - 158.12 * m + 135.26 * m * m - 38.42 * m * m * m)
         + p3 * (-61.15 + 131.41 * m - 88.96 * m * m + 17.98 * m * m * m)
         + p5 * (-32.72 + 93.65 * m - 89.14 * m * m + 28.21 * m * m * m);
}

double k4_depol_type2(double p, double m) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double om = 1.0 - m;
    return 2.83 + 1.56 * p6 * om * om * om
         + p * (-8.25 + 6.41 * m)
         + p2 * (12.94 - 20.03 * m + 7.0 * m * m)
         + p4 * (13.87 - 39.02 * m + 36.30 * m * m - 11.14 * m * m * m)
         + p3 * (-15.20 + 35.99 * m - 26.39 * m * m + 5.64 * m * m * m)
         + p5 * (-7.04 + 21.37 * m - 21.61 * m * m + 7.28 * m * m * m);
}

double k4_depol_type3(double p, double m) {
    const double p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
    const double om = 1.0 - m;
    return 2.83 + 3.84 * p6 * om * om * om
         + p * (-10.80 + 9.13 * m)
         + p2 * (20.74 - 36.40 * m + 15.21 * m * m)
         + p4 * (31.92 - 94.97 * m + 93.39 * m * m - 30.34 * m * m * m)
         + p3 * (-31.0 + 80.30 * m - 64.97 * m * m + 15.88 * m * m * m)
         + p5 * (-17.27 + 53.55 * m - 55.29 * m * m + 19.01 * m * m * m);
}

}  // namespace

double k4_reference(ChannelKind kind, BsmType type, double p, double mu) {
    check_range(p, mu);
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            switch (type) {
                case BsmType::TypeI: return k4_ad_type1(p, mu);
                case BsmType::TypeII: return k4_ad_type2(p, mu);
                case BsmType::TypeIII: return k4_ad_type3(p, mu);
            }
            break;
        case ChannelKind::PhaseDamping:
            switch (type) {
                case BsmType::TypeI: return k4_pd_type1(p, mu);
                case BsmType::TypeII: return k4_pd_type2(p, mu);
                case BsmType::TypeIII: return k4_pd_type3(p, mu);
            }
            break;
        case ChannelKind::Depolarizing:
            switch (type) {
                case BsmType::TypeI: return k4_depol_type1(p, mu);
                case BsmType::TypeII: return k4_depol_type2(p, mu);
                case BsmType::TypeIII: return k4_depol_type3(p, mu);
            }
            break;
    }
    throw std::invalid_argument("unknown reference curve");
}

double s4_reference(ChannelKind kind, double p, double mu) {
    check_range(p, mu);
    const double s = std::sqrt(1.0 - p);
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            return 0.25 * (4.0 + 4.0 * s - 2.0 * p * (1.0 + s) * (1.0 - mu) +
                           (1.0 - s) * mu);
        case ChannelKind::PhaseDamping:
            return 2.0 * (1.0 - p) * (1.0 - p * (1.0 - mu));
        case ChannelKind::Depolarizing:
            return (18.0 - 15.0 * p * (2.0 - mu) + 16.0 * p * p * (1.0 - mu)) / 9.0;
    }
    throw std::invalid_argument("unknown reference curve");
}

double reference_value(const ReferenceKey& key, double p, double mu) {
    if (key.witness == Witness::K4) {
        if (!key.bsm_type) throw std::invalid_argument("K4 reference needs a BSM type");
        return k4_reference(key.kind, *key.bsm_type, p, mu);
    }
    if (key.bsm_type) throw std::invalid_argument("S4 reference takes no BSM type");
    return s4_reference(key.kind, p, mu);
}

AnglePreset optimal_angles(ChannelKind kind, BsmType type) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping:
            switch (type) {
                case BsmType::TypeI:
                    return {{1.88, 1.54, 1.21, 3.14}, {0.77, 0.57, 0.21, 1.73}};
                case BsmType::TypeII:
                    return {{1.86, 1.01, 2.38, 1.38}, {1.23, 4.06, 0.51, 3.08}};
                case BsmType::TypeIII:
                    return {{0.48, 1.44, 2.04, 2.63}, {0.34, 0.60, 0.79, 0.82}};
            }
            break;
        case ChannelKind::PhaseDamping:
            switch (type) {
                case BsmType::TypeI:
                    return {{2.36, 0.01, 0.0, 1.57}, {1.57, 1.66, 1.31, 0.0}};
                case BsmType::TypeII:
                    return {{1.27, 1.22, 2.28, 2.16}, {0.63, 3.85, 1.22, 1.84}};
                case BsmType::TypeIII:
                    return {{2.76, 0.81, 1.86, 3.14}, {1.29, 0.87, 1.78, 0.32}};
            }
            break;
        case ChannelKind::Depolarizing:
            switch (type) {
                case BsmType::TypeI:
                    return {{1.88, 1.54, 1.21, 3.14}, {0.77, 0.57, 0.21, 1.73}};
                case BsmType::TypeII:
                    return {{1.24, 0.91, 0.63, 0.03}, {1.37, 1.13, 0.73, 0.47}};
                case BsmType::TypeIII:
                    return {{2.76, 2.23, 1.53, 0.63}, {0.87, 0.96, 0.95, 1.04}};
            }
            break;
    }
    throw std::invalid_argument("unknown preset");
}

double k4_maximum(ChannelKind kind, BsmType type) {
    if (type == BsmType::TypeI) {
        return kind == ChannelKind::PhaseDamping ? 3.0 : 3.18;
    }
    return 2.8284;  // 2*sqrt(2) to the catalogued precision
}

std::vector<RegressionRow> regression_report(const std::vector<double>& p_grid,
                                             const std::vector<double>& mu_list) {
    const double k1 = 1.0 / std::sqrt(2.0);
    std::vector<RegressionRow> rows;

    const ChannelKind kinds[] = {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
                                 ChannelKind::Depolarizing};
    const BsmType types[] = {BsmType::TypeI, BsmType::TypeII, BsmType::TypeIII};

    for (const auto kind : kinds) {
        for (const auto type : types) {
            const AnglePreset angles = optimal_angles(kind, type);
            double worst = 0.0;
            for (const double mu : mu_list) {
                for (const double p : p_grid) {
                    const MemoryChannel channel(kind, p, mu);
                    const LgiConfig cfg{k1,
                                        {Direction(angles.theta[0], angles.phi[0]),
                                         Direction(angles.theta[1], angles.phi[1]),
                                         Direction(angles.theta[2], angles.phi[2]),
                                         Direction(angles.theta[3], angles.phi[3])},
                                        type, channel};
                    const double deviation =
                        std::abs(k4(cfg) - k4_reference(kind, type, p, mu));
                    worst = std::max(worst, deviation);
                }
            }
            rows.push_back({{Witness::K4, kind, type}, worst});
        }
    }

    for (const auto kind : kinds) {
        double worst = 0.0;
        for (const double mu : mu_list) {
            for (const double p : p_grid) {
                const TsiConfig cfg{k1, 1, 2, MemoryChannel(kind, p, mu)};
                worst = std::max(worst, std::abs(s4(cfg) - s4_reference(kind, p, mu)));
            }
        }
        rows.push_back({{Witness::S4, kind, std::nullopt}, worst});
    }
    return rows;
}

}  // namespace tcorr
