#include "cqwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cqw {

WalkState Stepper::initial_state() const {
    WalkState s;
    s.internal = Eigen::VectorXcd::Zero(dim());
    s.outflow = Eigen::VectorXcd::Zero(num_vertices());
    s.step = 0;
    return s;
}

int Stepper::default_max_steps() const {
    long arcs = dim() + 2L * num_vertices();
    long n = 10L * arcs * max_degree();
    return static_cast<int>(std::max(n, 10000L));
}

CirculantStepper::CirculantStepper(const SymmetricDigraph& g, const Labeling& xi,
                                   const CoinMap& coins)
    : g_(&g), xi_(&xi) {
    validate_labeling(g, xi);
    circ_.reserve(static_cast<size_t>(g.num_vertices()));
    arc_at_.resize(static_cast<size_t>(g.num_vertices()));
    target_at_.resize(static_cast<size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u) {
        int deg = g.degree(u);
        circ_.push_back(circulant(coins.at(u), deg).matrix());
        auto& arcs = arc_at_[static_cast<size_t>(u)];
        auto& targets = target_at_[static_cast<size_t>(u)];
        arcs.resize(static_cast<size_t>(deg));
        targets.resize(static_cast<size_t>(deg));
        for (int l = 0; l < deg; ++l) {
            int aid = xi.arc_at(u, l);
            if (aid == g.tail_in(u)) {
                arcs[static_cast<size_t>(l)] = -1;
                targets[static_cast<size_t>(l)] = -1;
            } else {
                arcs[static_cast<size_t>(l)] = aid;
                targets[static_cast<size_t>(l)] = g.arc(aid).inverse;
            }
        }
    }
}

void CirculantStepper::scatter(const Eigen::VectorXcd& in, double inflow, Eigen::VectorXcd& out,
                               Eigen::VectorXcd* outflow) const {
    for (int u = 0; u < g_->num_vertices(); ++u) {
        const auto& arcs = arc_at_[static_cast<size_t>(u)];
        const auto& targets = target_at_[static_cast<size_t>(u)];
        int deg = static_cast<int>(arcs.size());
        Eigen::VectorXcd local(deg);
        for (int l = 0; l < deg; ++l) {
            int aid = arcs[static_cast<size_t>(l)];
            local(l) = aid < 0 ? Complex(inflow, 0.0) : in(aid);
        }
        Eigen::VectorXcd scattered = circ_[static_cast<size_t>(u)] * local;
        for (int l = 0; l < deg; ++l) {
            int t = targets[static_cast<size_t>(l)];
            if (t < 0) {
                if (outflow) (*outflow)(u) = scattered(l);
            } else {
                out(t) = scattered(l);
            }
        }
    }
}

void CirculantStepper::step(WalkState& s) const {
    if (s.internal.size() != dim())
        throw Error(errc::dimension_mismatch, "state has " + std::to_string(s.internal.size()) +
                                                  " amplitudes, expected " + std::to_string(dim()));
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim());
    if (s.outflow.size() != num_vertices()) s.outflow = Eigen::VectorXcd::Zero(num_vertices());
    scatter(s.internal, 1.0, next, &s.outflow);
    s.internal.swap(next);
    ++s.step;
}

Eigen::VectorXcd CirculantStepper::apply_homogeneous(const Eigen::VectorXcd& x) const {
    if (x.size() != dim()) throw Error(errc::dimension_mismatch, "homogeneous input size");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim());
    scatter(x, 0.0, out, nullptr);
    return out;
}

double CirculantStepper::relative_probability(const WalkState& s, VertexId j) const {
    g_->require_vertex(j);
    double mu = 1.0;  // unit inflow arc terminates at j
    for (int aid : g_->internal_in_arcs(j)) mu += std::norm(s.internal(aid));
    return mu;
}

int CirculantStepper::max_degree() const {
    int m = 1;
    for (int u = 0; u < g_->num_vertices(); ++u) m = std::max(m, g_->degree(u));
    return m;
}

OpticalStepper::OpticalStepper(const BlowupGraph& b, const CoinMap& coins)
    : b_(&b), coins_(&coins) {
    cycle_count_ = b.num_island_vertices();
    retained_count_ = b.graph().num_internal_arcs();
}

void OpticalStepper::scatter(const Eigen::VectorXcd& in, double inflow, Eigen::VectorXcd& out,
                             Eigen::VectorXcd* outflow) const {
    const SymmetricDigraph& g = b_->graph();
    const Labeling& xi = b_->labeling();
    for (int u = 0; u < g.num_vertices(); ++u) {
        const Coin2& h = coins_->at(u);
        int deg = g.degree(u);
        for (int j = 0; j < deg; ++j) {
            int iv = b_->island_vertex_id(u, j);
            int aid = xi.arc_at(u, j);
            bool tail = aid == g.tail_in(u);
            Complex cyc_in = in(iv);
            Complex ret_in = tail ? Complex(inflow, 0.0) : in(retained_index(aid));
            int next_iv = b_->island_vertex_id(u, (j + 1) % deg);
            out(cycle_index(next_iv)) = h.a * cyc_in + h.b * ret_in;
            Complex ret_out = h.c * cyc_in + h.d * ret_in;
            if (tail) {
                if (outflow) (*outflow)(u) = ret_out;
            } else {
                out(retained_index(g.arc(aid).inverse)) = ret_out;
            }
        }
    }
}

void OpticalStepper::step(WalkState& s) const {
    if (s.internal.size() != dim())
        throw Error(errc::dimension_mismatch, "state has " + std::to_string(s.internal.size()) +
                                                  " amplitudes, expected " + std::to_string(dim()));
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(dim());
    if (s.outflow.size() != num_vertices()) s.outflow = Eigen::VectorXcd::Zero(num_vertices());
    scatter(s.internal, 1.0, next, &s.outflow);
    s.internal.swap(next);
    ++s.step;
}

Eigen::VectorXcd OpticalStepper::apply_homogeneous(const Eigen::VectorXcd& x) const {
    if (x.size() != dim()) throw Error(errc::dimension_mismatch, "homogeneous input size");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim());
    scatter(x, 0.0, out, nullptr);
    return out;
}

double OpticalStepper::relative_probability(const WalkState& s, VertexId j) const {
    const SymmetricDigraph& g = b_->graph();
    g.require_vertex(j);
    // mu^BU sums over the retained copies of the original arcs only; the
    // island cycle amplitudes do not contribute.
    double mu = 1.0;
    for (int aid : g.internal_in_arcs(j)) mu += std::norm(s.internal(retained_index(aid)));
    return mu;
}

int OpticalStepper::max_degree() const {
    const SymmetricDigraph& g = b_->graph();
    int m = 1;
    for (int u = 0; u < g.num_vertices(); ++u) m = std::max(m, g.degree(u));
    return m;
}

std::pair<WalkState, ConvergenceReport> run_until_converged(const Stepper& stepper,
                                                            const SimConfig& config) {
    if (!(config.residual_tol > 0))
        throw Error(errc::parse_error, "residual_tol must be positive");
    int max_steps = config.max_steps > 0 ? config.max_steps : stepper.default_max_steps();
    int record_every = std::max(config.record_every, 1);

    WalkState s = stepper.initial_state();
    ConvergenceReport report;
    auto record = [&](int step) {
        std::vector<double> mu(static_cast<size_t>(stepper.num_vertices()));
        for (int j = 0; j < stepper.num_vertices(); ++j)
            mu[static_cast<size_t>(j)] = stepper.relative_probability(s, j);
        report.recorded_steps.push_back(step);
        report.mu_history.push_back(std::move(mu));
    };
    record(0);

    double residual = std::numeric_limits<double>::infinity();
    Eigen::VectorXcd prev;
    int n = 0;
    while (n < max_steps && !(residual <= config.residual_tol)) {
        prev = s.internal;
        stepper.step(s);
        ++n;
        residual =
            s.internal.size() > 0 ? (s.internal - prev).cwiseAbs().maxCoeff() : 0.0;
        if (n % record_every == 0) record(n);
    }
    if (report.recorded_steps.back() != n) record(n);

    report.converged = residual <= config.residual_tol;
    report.steps_used = n;
    report.final_residual = residual;
    return {std::move(s), std::move(report)};
}

}  // namespace cqw
