#pragma once

// Time iteration of the circulant walk and of the induced optical walk with
// the tail reduction: inflow arcs are clamped to 1 (the tail dynamics is free
// transmission, so the clamp is exact), outflow arcs are write-only.

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cqwalk/blowup.hpp"
#include "cqwalk/coin.hpp"
#include "cqwalk/graph.hpp"

namespace cqw {

struct WalkState {
    Eigen::VectorXcd internal;  // tracked internal-arc amplitudes
    Eigen::VectorXcd outflow;   // per-vertex amplitude on the dA- arc
    int step = 0;
};

struct SimConfig {
    int max_steps = 0;           // 0 -> max(10 * num_arcs * deg_max, 10000)
    double residual_tol = 1e-9;  // sup-norm of the internal amplitude change
    int record_every = 1;
};

struct ConvergenceReport {
    bool converged = false;
    int steps_used = 0;
    double final_residual = 0.0;
    std::vector<int> recorded_steps;
    std::vector<std::vector<double>> mu_history;  // per recorded step, per vertex
};

class Stepper {
public:
    virtual ~Stepper() = default;

    virtual int dim() const = 0;
    virtual int num_vertices() const = 0;
    virtual std::string kind() const = 0;

    WalkState initial_state() const;

    // One application of U with unit inflow. Throws dimension_mismatch.
    virtual void step(WalkState& s) const = 0;

    // Homogeneous part only (zero inflow): x -> E x on the internal arcs.
    virtual Eigen::VectorXcd apply_homogeneous(const Eigen::VectorXcd& x) const = 0;

    // mu_n(j): squared amplitudes over the arcs of the original graph with
    // terminus j, the unit inflow arc included. Throws unknown_vertex.
    virtual double relative_probability(const WalkState& s, VertexId j) const = 0;

    virtual int max_degree() const = 0;

    // 10 * tracked arcs * deg_max, floor 10^4
    int default_max_steps() const;
};

class CirculantStepper : public Stepper {
public:
    CirculantStepper(const SymmetricDigraph& g, const Labeling& xi, const CoinMap& coins);

    int dim() const override { return g_->num_internal_arcs(); }
    int num_vertices() const override { return g_->num_vertices(); }
    std::string kind() const override { return "circulant"; }
    void step(WalkState& s) const override;
    Eigen::VectorXcd apply_homogeneous(const Eigen::VectorXcd& x) const override;
    double relative_probability(const WalkState& s, VertexId j) const override;
    int max_degree() const override;

    const SymmetricDigraph& graph() const { return *g_; }

private:
    void scatter(const Eigen::VectorXcd& in, double inflow, Eigen::VectorXcd& out,
                 Eigen::VectorXcd* outflow) const;

    const SymmetricDigraph* g_;
    const Labeling* xi_;
    std::vector<Eigen::MatrixXcd> circ_;        // dense Circ(H_u) per vertex
    std::vector<std::vector<int>> arc_at_;      // per vertex, label -> arc id (-1 = tail)
    std::vector<std::vector<int>> target_at_;   // per vertex, label -> inverse arc (-1 = outflow)
};

class OpticalStepper : public Stepper {
public:
    OpticalStepper(const BlowupGraph& b, const CoinMap& coins);

    // state layout: [0, S) cycle amplitudes (arc into island vertex i),
    // [S, S + 2E) retained amplitudes indexed by original internal arc id
    int dim() const override { return cycle_count_ + retained_count_; }
    int num_vertices() const override { return b_->graph().num_vertices(); }
    std::string kind() const override { return "optical"; }
    void step(WalkState& s) const override;
    Eigen::VectorXcd apply_homogeneous(const Eigen::VectorXcd& x) const override;
    double relative_probability(const WalkState& s, VertexId j) const override;
    int max_degree() const override;

    const BlowupGraph& blowup() const { return *b_; }
    int cycle_index(int island_vertex_id) const { return island_vertex_id; }
    int retained_index(int orig_arc_id) const { return cycle_count_ + orig_arc_id; }

private:
    void scatter(const Eigen::VectorXcd& in, double inflow, Eigen::VectorXcd& out,
                 Eigen::VectorXcd* outflow) const;

    const BlowupGraph* b_;
    const CoinMap* coins_;
    int cycle_count_ = 0;
    int retained_count_ = 0;
};

// Iterates from the zero state under unit inflow until the sup-norm step
// residual drops to config.residual_tol, or max_steps is exhausted
// (soft failure: converged = false, best state returned).
std::pair<WalkState, ConvergenceReport> run_until_converged(const Stepper& stepper,
                                                            const SimConfig& config);

}  // namespace cqw
