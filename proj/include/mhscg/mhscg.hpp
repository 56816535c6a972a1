#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mhscg/cluster.hpp"
#include "mhscg/hypergraph.hpp"
#include "mhscg/manifold.hpp"

namespace mhscg {

struct MhscgConfig {
    int k = 2;
    double lambda0 = 1.0;       ///< initial lambda, shared by all views
    int max_outer = 50;         ///< T
    double epsilon = 1e-5;      ///< consensus-residual tolerance
    double obj_tol = 1e-6;      ///< relative objective-change stop
    double lambda_floor = 1e-8;
    std::optional<TrustRegionConfig> rtr;  ///< TrustRegionConfig::defaults(n, k) when unset
    std::uint64_t seed = 0;
    int threads = 1;

    void check() const;
};

struct SolverState {
    std::vector<GrassmannPoint> f_views;  ///< F^(l)
    GrassmannPoint f_star;                ///< F*
    std::vector<double> lambdas;
    int iteration = 0;
};

struct TraceEntry {
    int iter = 0;
    double objective = 0.0;
    double val = 0.0;                   ///< consensus residual before the lambda update
    std::vector<double> lambdas;        ///< lambda vector in effect after the update
    std::vector<int> rtr_iterations;    ///< r view solves, then the consensus solve
};

struct ConvergenceTrace {
    std::vector<TraceEntry> entries;
};

struct MhscgResult {
    GrassmannPoint f_star;
    ConvergenceTrace trace;
    SolverState state;
    bool stabilized = false;  ///< objective change fell below obj_tol before T
};

/// D(F, G) = -tr(F F^T G G^T) = -||F^T G||_F^2, in [-k, 0].
double discrepancy(const GrassmannPoint& f, const GrassmannPoint& g);

/// f = sum_l tr(F^(l)T Theta^(l) F^(l)) - sum_l lambda_l D(F^(l), F*).
double objective(const std::vector<LaplacianPair>& thetas, const SolverState& s);

/// Maximizes tr(F^T (Theta^(l) + lambda_l F* F*^T) F) by RTR, warm-started at
/// the current F^(l).
GrassmannPoint update_view(const std::vector<LaplacianPair>& thetas, const SolverState& s,
                           int view, const TrustRegionConfig& rtr,
                           int* rtr_iterations = nullptr);

/// Maximizes tr(F^T (sum_l lambda_l F^(l) F^(l)T) F) by RTR, warm-started at
/// the current F*.
GrassmannPoint update_consensus(const SolverState& s, const TrustRegionConfig& rtr,
                                int* rtr_iterations = nullptr);

/// val = k - tr(F*^T Theta* F*) with Theta* = sum_l lambda_l F^(l) F^(l)T.
double consensus_residual(const SolverState& s);

/// One conditional halving per outer iteration: when |val| > epsilon, every
/// lambda_l is halved (clamped at lambda_floor) and F* reverts to its value
/// at the start of the iteration; otherwise the state is left unchanged.
void adapt_lambda(SolverState& s, const GrassmannPoint& f_star_at_iter_start,
                  double val, double epsilon, double lambda_floor);

/// The alternating loop: per outer iteration, update each view, update the
/// consensus, compute val, apply the lambda rule, and record a trace entry.
/// Stops at max_outer or when the objective change falls below obj_tol.
MhscgResult run(const std::vector<LaplacianPair>& thetas, const MhscgConfig& cfg);

/// Single-view hypergraph spectral clustering baseline: dominant subspace of
/// Theta, row-normalize, k-means with restarts.
std::vector<int> hsc_single_view(const LaplacianPair& theta, int k,
                                 const KMeansConfig& kmeans_cfg);

}  // namespace mhscg
