#pragma once

#include <vector>

#include "mhscg/types.hpp"

namespace mhscg {

/// Shared substrate for the clustering metrics. Labels are remapped to
/// compact ids, so arbitrary integer labelings are accepted.
struct ContingencyTable {
    Eigen::MatrixXi counts;    ///< k_pred x k_true
    Eigen::VectorXi row_sums;  ///< a_i
    Eigen::VectorXi col_sums;  ///< b_j
    int total = 0;

    static ContingencyTable from_labels(const std::vector<int>& pred,
                                        const std::vector<int>& truth);
};

/// Fraction of samples correctly labeled under the optimal bijection between
/// predicted and true clusters (Hungarian matching).
double accuracy(const std::vector<int>& pred, const std::vector<int>& truth);

/// MI(U,V) / sqrt(H(U) H(V)) with natural logs. Exactly 1 when the partitions
/// are identical up to relabeling; 0 when either entropy is 0 and they differ.
double nmi(const std::vector<int>& pred, const std::vector<int>& truth);

/// Pair-counting F-score (beta = 1) over all C(n,2) sample pairs. 0 when
/// precision + recall is undefined or zero; 1 when both partitions are
/// all-singletons.
double pairwise_fscore(const std::vector<int>& pred, const std::vector<int>& truth);

/// Adjusted Rand Index; 1 when both partitions are trivial and identical.
double adjusted_rand(const std::vector<int>& pred, const std::vector<int>& truth);

struct MetricReport {
    double acc = 0.0, nmi = 0.0, fscore = 0.0, ari = 0.0;
};

MetricReport evaluate(const std::vector<int>& pred, const std::vector<int>& truth);

struct MetricStats {
    double mean = 0.0;
    double stddev = 0.0;  ///< population standard deviation over repeats
};

struct AggregateReport {
    MetricStats acc, nmi, fscore, ari;
    int repeats = 0;

    static AggregateReport from_reports(const std::vector<MetricReport>& reports);
};

/// Per-dataset ranks (rank 1 = best) with mid-rank ties; mean_rank holds the
/// per-algorithm average rank R_j.
struct RankTable {
    Matrix scores;  ///< n_d x n_k (datasets x algorithms)
    Matrix ranks;
    Vector mean_rank;
};

RankTable mean_ranks(const Matrix& scores, bool higher_is_better);

struct FriedmanResult {
    double chi2 = 0.0;
    double ff = 0.0;
};

/// F_F = (n_d - 1) chi2 / (n_d (n_k - 1) - chi2); raises std::domain_error
/// when the denominator is not positive.
double friedman_ff(double chi2, int n_datasets, int n_algorithms);

FriedmanResult friedman_statistic(const RankTable& table);

/// CD = q_alpha sqrt(n_k (n_k + 1) / (6 n_d)).
double nemenyi_cd(int n_algorithms, int n_datasets, double q_alpha);

}  // namespace mhscg
