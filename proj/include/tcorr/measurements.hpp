#pragma once

#include "tcorr/states.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tcorr {

// Dichotomic Bell-state measurement flavors.  All three partition the Bell
// basis into the same +1/-1 subspaces; they differ in the projector
// degeneracy, i.e. in the post-measurement state.
enum class BsmType { TypeI, TypeII, TypeIII };

struct BsmBranch {
    SquareMatrix projector;
    int outcome;  // +1 or -1
};

struct BsmScheme {
    BsmType type;
    Direction direction;
    std::vector<BsmBranch> branches;
};

// Type-I:   four rank-1 branches (psi+,+1) (psi-,-1) (phi+,+1) (phi-,-1).
// Type-II:  (P_{psi+}, +1) against its rank-3 complement.
// Type-III: (P_{psi+} + P_{phi+}, +1) against the rank-2 complement.
BsmScheme bsm_scheme(BsmType type, const Direction& d);

struct MeasurementBranch {
    int outcome;
    double probability;
    std::optional<DensityMatrix> post_state;  // absent below the 1e-14 cutoff
};

// Branch-wise projective measurement with collapse P rho P / tr(P rho P).
// Type-I collapses per rank-1 Bell projector (outcomes coarse-grained to
// +/-1 downstream); Types II/III collapse on the degenerate projector.
std::vector<MeasurementBranch> measure_branches(const DensityMatrix& rho,
                                                const BsmScheme& scheme);

// One of the five dimension-4 mutually unbiased bases, index 0 (computational)
// through 4.
struct MubBasis {
    int index;
    std::array<ComplexVector, 4> kets;
};

MubBasis mub_basis(int index);

const char* to_string(BsmType type);

}  // namespace tcorr
