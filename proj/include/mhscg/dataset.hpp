#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mhscg/types.hpp"

namespace mhscg {

/// A multi-view dataset: r feature matrices over the same n samples,
/// optional ground-truth labels (0-based, in [0, k)), and the target
/// cluster count k. Immutable after construction by convention.
struct MultiViewDataset {
    std::vector<Matrix> views;
    std::optional<std::vector<int>> labels;
    int k = 0;
    std::string name;

    Index n_samples() const { return views.empty() ? 0 : views.front().rows(); }
    int n_views() const { return static_cast<int>(views.size()); }
};

struct DatasetManifest {
    std::string name;
    int k = 0;
    std::vector<std::filesystem::path> view_paths;
    std::optional<std::filesystem::path> labels_path;
};

/// Comma-separated numeric text, no header, one sample per row.
Matrix load_csv_matrix(const std::filesystem::path& path);
void save_csv_matrix(const Matrix& m, const std::filesystem::path& path);

/// One integer per line. The (path, k) overload re-bases 1-based contiguous
/// labels (min = 1, max = k) to 0-based with a warning on stderr.
std::vector<int> load_labels(const std::filesystem::path& path);
std::vector<int> load_labels(const std::filesystem::path& path, int k);
void save_labels(const std::vector<int>& labels, const std::filesystem::path& path);

DatasetManifest load_manifest(const std::filesystem::path& path);
MultiViewDataset load_dataset(const std::filesystem::path& manifest_path);

/// Writes manifest.json, view_<i>.csv and (if present) labels.csv into dir.
void save_dataset(const MultiViewDataset& ds, const std::filesystem::path& dir);

/// Gaussian blobs around k centers drawn uniformly on the sphere of radius 10
/// in each view's dimension. Labels are shared across views and laid out in
/// contiguous blocks of n_per_cluster. Deterministic for a fixed seed.
MultiViewDataset synth_multiview(int n_per_cluster, int k, int r,
                                 const std::vector<int>& dims, double noise_std,
                                 std::uint64_t seed);

/// Raises std::invalid_argument on any invariant violation; no-op otherwise.
void validate(const MultiViewDataset& ds);

/// Per-view, per-feature min-max scaling to [0,1]; constant columns map to 0.
void minmax_scale(MultiViewDataset& ds);

}  // namespace mhscg
