#include "tcorr/measurements.hpp"

#include <stdexcept>

namespace tcorr {

namespace {
// Branches below this probability carry no post-state and contribute nothing
// downstream; avoids 0/0 in the collapse normalization.
constexpr double kBranchEps = 1e-14;
}  // namespace

BsmScheme bsm_scheme(BsmType type, const Direction& d) {
    const BellStates bells = generalized_bell_states(d);
    const SquareMatrix p_psi_plus = outer(bells.psi_plus.vec(), bells.psi_plus.vec());
    const SquareMatrix p_psi_minus = outer(bells.psi_minus.vec(), bells.psi_minus.vec());
    const SquareMatrix p_phi_plus = outer(bells.phi_plus.vec(), bells.phi_plus.vec());
    const SquareMatrix p_phi_minus = outer(bells.phi_minus.vec(), bells.phi_minus.vec());

    BsmScheme scheme{type, d, {}};
    switch (type) {
        case BsmType::TypeI:
            scheme.branches = {{p_psi_plus, +1},
                               {p_psi_minus, -1},
                               {p_phi_plus, +1},
                               {p_phi_minus, -1}};
            break;
        case BsmType::TypeII: {
            const SquareMatrix plus = p_psi_plus;
            scheme.branches = {{plus, +1}, {SquareMatrix::identity(4) - plus, -1}};
            break;
        }
        case BsmType::TypeIII: {
            const SquareMatrix plus = p_psi_plus + p_phi_plus;
            scheme.branches = {{plus, +1}, {SquareMatrix::identity(4) - plus, -1}};
            break;
        }
    }
    return scheme;
}

std::vector<MeasurementBranch> measure_branches(const DensityMatrix& rho,
                                                const BsmScheme& scheme) {
    std::vector<MeasurementBranch> out;
    out.reserve(scheme.branches.size());
    for (const auto& branch : scheme.branches) {
        SquareMatrix collapsed = branch.projector * rho.matrix() * branch.projector;
        // P rho P is Hermitian; strip the rounding noise before the 1/prob
        // normalization can amplify it on near-zero branches.
        collapsed = 0.5 * (collapsed + adjoint(collapsed));
        double prob = trace(collapsed).real();
        if (prob < 0.0) prob = 0.0;

        if (prob > kBranchEps) {
            out.push_back({branch.outcome, prob,
                           DensityMatrix::trusted((1.0 / prob) * collapsed)});
        } else {
            out.push_back({branch.outcome, prob, std::nullopt});
        }
    }
    return out;
}

MubBasis mub_basis(int index) {
    if (index < 0 || index > 4) throw std::invalid_argument("MUB index must be 0..4");

    const Complex i{0.0, 1.0};
    const double h = 0.5;

    auto ket = [](std::vector<Complex> entries) { return ComplexVector(4, std::move(entries)); };

    MubBasis basis{index, {ket({1, 0, 0, 0}), ket({0, 1, 0, 0}), ket({0, 0, 1, 0}),
                           ket({0, 0, 0, 1})}};
    switch (index) {
        case 0:
            break;
        case 1:
            basis.kets = {ket({h, h, h, h}), ket({h, h, -h, -h}), ket({h, -h, -h, h}),
                          ket({h, -h, h, -h})};
            break;
        case 2:
            basis.kets = {ket({h, -h, -h * i, -h * i}), ket({h, -h, h * i, h * i}),
                          ket({h, h, h * i, -h * i}), ket({h, h, -h * i, h * i})};
            break;
        case 3:
            basis.kets = {ket({h, -h * i, -h * i, -h}), ket({h, -h * i, h * i, h}),
                          ket({h, h * i, h * i, -h}), ket({h, h * i, -h * i, h})};
            break;
        case 4:
            basis.kets = {ket({h, -h * i, -h, -h * i}), ket({h, -h * i, h, h * i}),
                          ket({h, h * i, -h, h * i}), ket({h, h * i, h, -h * i})};
            break;
    }
    return basis;
}

const char* to_string(BsmType type) {
    switch (type) {
        case BsmType::TypeI: return "I";
        case BsmType::TypeII: return "II";
        case BsmType::TypeIII: return "III";
    }
    return "?";
}

}  // namespace tcorr
