#pragma once

// Direct stationary-state solver through the internal truncation: with E the
// restriction of the walk unitary to the internal arcs and rho the one-step
// image of the unit inflow, the stationary amplitudes solve (1 - E) x = rho.
// When 1 - E is singular the system is still consistent and the walk limit is
// the minimum-norm solution (the one orthogonal to ker(1 - E)).
// Also: eigenvalue-1 kernel analysis, the symmetry-breaking arc scan, the
// closed-form K_N kernel dimensions, and the implementability verdict.

#include <Eigen/Dense>
#include <vector>

#include "cqwalk/blowup.hpp"
#include "cqwalk/coin.hpp"
#include "cqwalk/graph.hpp"
#include "cqwalk/walk.hpp"

namespace cqw {

enum class WalkKind { circulant, optical };

// Relative threshold under which singular values of 1 - E count as zero.
inline constexpr double kKernelRelTol = 1e-8;

struct InternalSystem {
    WalkKind kind = WalkKind::circulant;
    Eigen::MatrixXcd E;    // restriction of U to the internal arcs
    Eigen::VectorXcd rho;  // one-step image of the unit inflow
    // outflow = outflow_E * x + outflow_rho, one row per vertex
    Eigen::MatrixXcd outflow_E;
    Eigen::VectorXcd outflow_rho;
};

// Internal arcs = A0, indexed by arc id.
InternalSystem assemble_internal_circulant(const SymmetricDigraph& g, const Labeling& xi,
                                           const CoinMap& coins);
// Internal arcs = island cycle arcs followed by the retained copies of A0,
// matching the OpticalStepper state layout.
InternalSystem assemble_internal_optical(const BlowupGraph& b, const CoinMap& coins);

struct KernelBasis {
    Eigen::MatrixXcd basis;  // orthonormal columns spanning ker(1 - E)
    Eigen::VectorXd singular_values;

    int dim() const { return static_cast<int>(basis.cols()); }
};

KernelBasis kernel_basis(const InternalSystem& sys, double rel_tol = kKernelRelTol);

enum class SolveMethod { direct, pseudoinverse };

struct StationaryResult {
    Eigen::VectorXcd internal;
    Eigen::VectorXcd outflow;
    int kernel_dim = 0;
    SolveMethod method = SolveMethod::direct;
    double residual = 0.0;  // ||(1 - E) x - rho||_2
};

// Throws inconsistent_system if even the least-squares residual stays large
// (the system is always consistent for these walks, so that signals a bug).
StationaryResult solve_stationary(const InternalSystem& sys);

WalkState state_from_stationary(const StationaryResult& r);

struct SymmetryScan {
    // arcs e of A0 whose label differences around the tails are both +1 or
    // both -1 (opposite island orientations at the two endpoints)
    std::vector<int> condition1_arcs;
    // opposite-sign differences with d_{o(e)} != conj(d_{t(e)})
    std::vector<int> condition2_arcs;

    bool any_hit() const { return !condition1_arcs.empty() || !condition2_arcs.empty(); }
};

// Label arithmetic is evaluated modulo the degree of the respective vertex.
SymmetryScan check_symmetry_breaking(const SymmetricDigraph& g, const Labeling& xi,
                                     const CoinMap& coins);

// Closed-form kernel dimension of 1 - U^BU for the uniform walk on K_N with
// the standard labeling, as a function of d = H_22 and Delta = det H:
//   d real, (-Delta)^{2N} = 1, N even        -> N/2 - 1
//   d real, (-Delta)^N  = 1, N odd           -> (N-1)/2
//   d real, (-Delta)^{2N} = 1 only, N odd    -> (N-3)/2
//   otherwise                                -> 0
int kn_kernel_dim(int n, const Coin2& h);

struct ImplementabilityVerdict {
    bool guaranteed = false;     // kernel of 1 - U^BU is trivial
    bool condition_hit = false;  // the symmetry-breaking scan found an arc
    int kernel_dim = 0;
    std::vector<int> condition1_arcs;
    std::vector<int> condition2_arcs;
    // max_a |psi_inf^BU(a) - psi_inf(a)| over the retained internal arcs and
    // the outflow arcs
    double numeric_agreement = 0.0;
};

ImplementabilityVerdict check_implementation(const SymmetricDigraph& g, const Labeling& xi,
                                             const CoinMap& coins,
                                             double kernel_tol = kKernelRelTol);

}  // namespace cqw
