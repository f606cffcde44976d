#include "tcorr/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace tcorr {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
}

}  // namespace

double completeness_residual(const KrausSet& set) {
    SquareMatrix sum(4);
    for (const auto& op : set.ops) sum = sum + adjoint(op) * op;
    return max_abs_diff(sum, SquareMatrix::identity(4));
}

std::vector<SquareMatrix> single_qubit_kraus(ChannelKind kind, double p) {
    check_probability(p);
    switch (kind) {
        case ChannelKind::AmplitudeDamping: {
            // Dissipation sends |0> to |1>:
            //   E0 = diag(sqrt(1-p), 1),  E1 = sqrt(p) |1><0|.
            SquareMatrix e0(2, {std::sqrt(1.0 - p), 0.0, 0.0, 1.0});
            SquareMatrix e1(2, {0.0, 0.0, std::sqrt(p), 0.0});
            return {e0, e1};
        }
        case ChannelKind::PhaseDamping: {
            // P0 = 1-p on identity, P3 = p on sigma_z.
            return {std::sqrt(1.0 - p) * pauli(0), std::sqrt(p) * pauli(3)};
        }
        case ChannelKind::Depolarizing: {
            // P0 = 1-p, P1 = P2 = P3 = p/3.
            std::vector<SquareMatrix> ops;
            ops.push_back(std::sqrt(1.0 - p) * pauli(0));
            for (int i = 1; i <= 3; ++i) ops.push_back(std::sqrt(p / 3.0) * pauli(i));
            return ops;
        }
    }
    throw std::invalid_argument("unknown channel kind");
}

KrausSet build_uncorrelated_kraus(ChannelKind kind, double p) {
    const auto singles = single_qubit_kraus(kind, p);
    KrausSet set;
    for (const auto& a : singles)
        for (const auto& b : singles) set.ops.push_back(tensor_product(a, b));
    return set;
}

KrausSet build_correlated_kraus(ChannelKind kind, double p) {
    check_probability(p);
    switch (kind) {
        case ChannelKind::AmplitudeDamping: {
            SquareMatrix e00 = SquareMatrix::identity(4);
            e00.at(0, 0) = std::sqrt(1.0 - p);
            SquareMatrix e11(4);
            e11.at(3, 0) = std::sqrt(p);
            return KrausSet{{e00, e11}};
        }
        case ChannelKind::PhaseDamping: {
            return KrausSet{{std::sqrt(1.0 - p) * SquareMatrix::identity(4),
                             std::sqrt(p) * tensor_product(pauli(3), pauli(3))}};
        }
        case ChannelKind::Depolarizing: {
            KrausSet set;
            set.ops.push_back(std::sqrt(1.0 - p) * SquareMatrix::identity(4));
            for (int k = 1; k <= 3; ++k)
                set.ops.push_back(std::sqrt(p / 3.0) * tensor_product(pauli(k), pauli(k)));
            return set;
        }
    }
    throw std::invalid_argument("unknown channel kind");
}

MemoryChannel::MemoryChannel(ChannelKind kind, double p, double mu)
    : kind_(kind), p_(p), mu_(mu) {
    check_probability(p);
    if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must lie in [0, 1]");

    uncorrelated_ = build_uncorrelated_kraus(kind, p);
    correlated_ = build_correlated_kraus(kind, p);

    const double wu = std::sqrt(1.0 - mu);
    const double wc = std::sqrt(mu);
    for (const auto& op : uncorrelated_.ops) {
        if (wu > 0.0 && max_abs(op) > 0.0) effective_ops_.push_back(wu * op);
    }
    for (const auto& op : correlated_.ops) {
        if (wc > 0.0 && max_abs(op) > 0.0) effective_ops_.push_back(wc * op);
    }
    is_identity_ = (p == 0.0);
}

SquareMatrix MemoryChannel::apply_raw(const SquareMatrix& op) const {
    if (is_identity_) return op;
    SquareMatrix out(4);
    for (const auto& e : effective_ops_) out = out + e * op * adjoint(e);
    return out;
}

DensityMatrix MemoryChannel::apply(const DensityMatrix& rho) const {
    if (is_identity_) return rho;
    return DensityMatrix::trusted(apply_raw(rho.matrix()));
}

DensityMatrix MemoryChannel::apply_n(const DensityMatrix& rho, int n) const {
    DensityMatrix out = rho;
    for (int i = 0; i < n; ++i) out = apply(out);
    return out;
}

double MemoryChannel::completeness_residual() const {
    SquareMatrix sum(4);
    for (const auto& op : uncorrelated_.ops) sum = sum + (1.0 - mu_) * (adjoint(op) * op);
    for (const auto& op : correlated_.ops) sum = sum + mu_ * (adjoint(op) * op);
    return max_abs_diff(sum, SquareMatrix::identity(4));
}

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::AmplitudeDamping: return "ad";
        case ChannelKind::PhaseDamping: return "pd";
        case ChannelKind::Depolarizing: return "depol";
    }
    return "?";
}

}  // namespace tcorr
