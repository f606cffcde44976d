#pragma once

#include "tcorr/states.hpp"

#include <vector>

namespace tcorr {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };

// Kraus operators with all scalar weights folded in.
struct KrausSet {
    std::vector<SquareMatrix> ops;
};

// max-norm of sum E^dag E - identity.
double completeness_residual(const KrausSet& set);

// Product-form two-qubit Kraus set E_i (x) E_j built from the single-qubit
// operators of the given channel.
KrausSet build_uncorrelated_kraus(ChannelKind kind, double p);

// Kraus set for the fully correlated channel use (both qubits see the same
// branch).  For amplitude damping this is the pair
//   E00 = diag(sqrt(1-p), 1, 1, 1),  E11 = sqrt(p) |11><00|,
// which does not factor into a tensor product.
KrausSet build_correlated_kraus(ChannelKind kind, double p);

// Single-qubit Kraus operators; exposed for the factorization cross-checks.
std::vector<SquareMatrix> single_qubit_kraus(ChannelKind kind, double p);

// One two-qubit channel use with partial memory mu:
//   rho -> (1-mu) sum_ij E_ij rho E_ij^dag + mu sum_kk E_kk rho E_kk^dag.
// The memory correlates the two qubit uses inside a single step; successive
// steps are independent and reuse the same (p, mu).
class MemoryChannel {
  public:
    MemoryChannel(ChannelKind kind, double p, double mu);

    ChannelKind kind() const { return kind_; }
    double p() const { return p_; }
    double mu() const { return mu_; }

    const KrausSet& uncorrelated() const { return uncorrelated_; }
    const KrausSet& correlated() const { return correlated_; }

    DensityMatrix apply(const DensityMatrix& rho) const;
    DensityMatrix apply_n(const DensityMatrix& rho, int n) const;

    // Linear action on an arbitrary 4x4 operator, no state validation.
    SquareMatrix apply_raw(const SquareMatrix& op) const;

    // max-norm of (1-mu) sum E^dag E + mu sum F^dag F - identity.
    double completeness_residual() const;

  private:
    ChannelKind kind_;
    double p_;
    double mu_;
    KrausSet uncorrelated_;
    KrausSet correlated_;
    // mu-weighted, zero-pruned operators; apply() is a plain fold over these.
    std::vector<SquareMatrix> effective_ops_;
    bool is_identity_ = false;
};

const char* to_string(ChannelKind kind);

}  // namespace tcorr
