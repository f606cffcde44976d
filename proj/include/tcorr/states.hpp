#pragma once

#include "tcorr/linalg.hpp"

#include <utility>

namespace tcorr {

// Measurement direction on the Bloch sphere,
// n = (sin t cos f, sin t sin f, cos t).
struct Direction {
    double theta;
    double phi;

    Direction(double t, double f);
};

// Normalized two-qubit pure state.
class PureState {
  public:
    explicit PureState(ComplexVector vec);
    const ComplexVector& vec() const { return vec_; }

  private:
    ComplexVector vec_;
};

// 4x4 density operator.  The checked constructor validates Hermiticity and
// unit trace at 1e-12 and positivity at -1e-10; `trusted` skips the spectral
// check for states produced by operations that preserve validity (channel
// application, projective collapse) and only asserts the cheap invariants.
class DensityMatrix {
  public:
    explicit DensityMatrix(SquareMatrix mat);
    static DensityMatrix trusted(SquareMatrix mat);

    const SquareMatrix& matrix() const { return mat_; }

  private:
    struct trusted_tag {};
    DensityMatrix(SquareMatrix mat, trusted_tag);

    SquareMatrix mat_;
};

// k1|00> + k2|11> with k2 = sqrt(1 - k1^2).
PureState schmidt_state(double k1);

// Rotated qubit basis along the direction n:
//   |0_n> =  cos(t/2)|0> + e^{+if} sin(t/2)|1>
//   |1_n> = -e^{-if} sin(t/2)|0> + cos(t/2)|1>
std::pair<ComplexVector, ComplexVector> rotated_basis(const Direction& d);

struct BellStates {
    PureState psi_plus;
    PureState psi_minus;
    PureState phi_plus;
    PureState phi_minus;
};

// The four maximally entangled states built from the rotated basis, both
// qubits along the same direction.
BellStates generalized_bell_states(const Direction& d);

DensityMatrix to_density(const PureState& s);

}  // namespace tcorr
