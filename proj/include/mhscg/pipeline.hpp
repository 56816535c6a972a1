#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhscg/dataset.hpp"
#include "mhscg/metrics.hpp"
#include "mhscg/mhscg.hpp"

namespace mhscg {

enum class Method { mhscg, hsc };
enum class RepeatScope { kmeans, pipeline };

struct PipelineOptions {
    Method method = Method::mhscg;
    int sigma = 10;                   ///< neighbor count, clamped to n-2
    std::vector<int> sigma_per_view;  ///< optional override, one entry per view
    bool minmax = false;              ///< per-view min-max scaling before distances
    double lambda0 = 1.0;
    int max_outer = 50;
    double epsilon = 1e-5;
    double obj_tol = 1e-6;
    int kmeans_restarts = 30;
    int repeats = 1;
    RepeatScope repeat_scope = RepeatScope::kmeans;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct PipelineResult {
    std::vector<int> labels;                ///< labels of the first repeat
    ConvergenceTrace trace;                 ///< empty for the HSC baseline
    std::optional<AggregateReport> report;  ///< present when ground truth is available
    std::vector<MetricReport> per_repeat;
    int hsc_best_view = -1;                 ///< HSC only: view selected by inertia
};

/// dataset -> per-view hypergraph Laplacians -> MHSCG (or per-view HSC with
/// inertia-based view selection) -> row-normalized embedding -> k-means with
/// restarts -> labels and, when ground truth is present, metrics over repeats.
PipelineResult run_pipeline(const MultiViewDataset& ds, const PipelineOptions& opts);

}  // namespace mhscg
