#pragma once

#include <cstdint>
#include <vector>

#include "mhscg/types.hpp"

namespace mhscg {

/// Row container fed to k-means; produced by row_normalize in the pipeline.
struct Embedding {
    Matrix rows;
};

struct KMeansConfig {
    int k = 2;
    int restarts = 30;
    int max_iters = 100;
    double tol = 1e-8;  ///< stop when max center movement falls below this
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Each row divided by its Euclidean norm; rows with norm below 1e-12 become
/// exact zeros.
Embedding row_normalize(const Matrix& f);

struct KMeansResult {
    std::vector<int> labels;
    double inertia = 0.0;
    Matrix centers;
    std::vector<double> inertia_history;  ///< post-assignment inertia per Lloyd iteration
};

/// k-means++ seeding followed by Lloyd iterations; empty clusters are
/// reseeded with the point farthest from its assigned center.
KMeansResult kmeans(const Embedding& e, const KMeansConfig& cfg);

/// Runs cfg.restarts seeded k-means runs (seed, seed+1, ...) and returns the
/// minimum-inertia result (ties break toward the earlier restart).
KMeansResult best_of_restarts(const Embedding& e, const KMeansConfig& cfg);

}  // namespace mhscg
