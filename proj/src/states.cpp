#include "tcorr/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tcorr {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNormTol = 1e-12;
}  // namespace

Direction::Direction(double t, double f) : theta(t), phi(f) {
    if (!(t >= 0.0 && t <= kPi)) throw std::invalid_argument("theta outside [0, pi]");
    if (!(f >= 0.0 && f <= 2.0 * kPi)) throw std::invalid_argument("phi outside [0, 2*pi]");
}

PureState::PureState(ComplexVector vec) : vec_(std::move(vec)) {
    if (vec_.dim() != 4) throw std::invalid_argument("pure state must have dimension 4");
    if (std::abs(norm(vec_) - 1.0) > kNormTol) {
        throw std::invalid_argument("pure state is not normalized");
    }
}

DensityMatrix::DensityMatrix(SquareMatrix mat) : mat_(std::move(mat)) {
    if (mat_.dim() != 4) throw std::invalid_argument("density matrix must be 4x4");
    if (max_abs_diff(mat_, adjoint(mat_)) > 1e-12) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(trace(mat_) - Complex{1.0, 0.0}) > 1e-12) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    const auto eigs = hermitian_eigenvalues(mat_);
    if (eigs.front() < -1e-10) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

DensityMatrix::DensityMatrix(SquareMatrix mat, trusted_tag) : mat_(std::move(mat)) {
    // Evolution and collapse preserve validity exactly; a violation here means
    // an operator was transcribed wrong somewhere upstream.
    if (max_abs_diff(mat_, adjoint(mat_)) > 1e-12 ||
        std::abs(trace(mat_) - Complex{1.0, 0.0}) > 1e-12) {
        throw std::logic_error("internal consistency fault: evolved state invalid");
    }
}

DensityMatrix DensityMatrix::trusted(SquareMatrix mat) {
    return DensityMatrix(std::move(mat), trusted_tag{});
}

PureState schmidt_state(double k1) {
    if (!(k1 >= 0.0 && k1 <= 1.0)) throw std::invalid_argument("k1 must lie in [0, 1]");
    const double k2 = std::sqrt(1.0 - k1 * k1);
    ComplexVector v(4);
    v.at(0) = k1;
    v.at(3) = k2;
    return PureState(v);
}

std::pair<ComplexVector, ComplexVector> rotated_basis(const Direction& d) {
    const double c = std::cos(d.theta / 2.0);
    const double s = std::sin(d.theta / 2.0);
    const Complex phase = std::polar(1.0, d.phi);

    ComplexVector ket0(2), ket1(2);
    ket0.at(0) = c;
    ket0.at(1) = phase * s;
    ket1.at(0) = -std::conj(phase) * s;
    ket1.at(1) = c;
    return {ket0, ket1};
}

BellStates generalized_bell_states(const Direction& d) {
    const auto [ket0, ket1] = rotated_basis(d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    const ComplexVector v01 = tensor_product(ket0, ket1);
    const ComplexVector v10 = tensor_product(ket1, ket0);
    const ComplexVector v00 = tensor_product(ket0, ket0);
    const ComplexVector v11 = tensor_product(ket1, ket1);

    auto combine = [&](const ComplexVector& a, const ComplexVector& b, double sign) {
        ComplexVector out(4);
        for (int i = 0; i < 4; ++i) out.at(i) = inv_sqrt2 * (a.at(i) + sign * b.at(i));
        return PureState(out);
    };

    return BellStates{
        combine(v01, v10, +1.0),   // psi+
        combine(v01, v10, -1.0),   // psi-
        combine(v00, v11, +1.0),   // phi+
        combine(v00, v11, -1.0),   // phi-
    };
}

DensityMatrix to_density(const PureState& s) {
    return DensityMatrix::trusted(outer(s.vec(), s.vec()));
}

}  // namespace tcorr
