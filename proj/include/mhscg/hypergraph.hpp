#pragma once

#include <utility>

#include "mhscg/types.hpp"

namespace mhscg {

/// Row-stochastic sparse neighbor weights: row i carries the weights of the
/// sigma nearest neighbors of sample i, zero elsewhere (zero diagonal).
struct SimilarityMatrix {
    Matrix a;
    int sigma = 0;
};

/// Probabilistic-incidence hypergraph with one hyperedge per vertex (m = n).
/// Hyperedge e_j owns centroid v_j (entry 1) plus the neighbors of row j of
/// the similarity matrix, so every column of H sums to 2. Diagonal matrices
/// are stored as vectors.
struct Hypergraph {
    Matrix h;   ///< n x n incidence
    Vector w;   ///< hyperedge weights (all ones)
    Vector dv;  ///< vertex degrees d(v)
    Vector de;  ///< hyperedge degrees delta(e)
};

/// Theta = Dv^{-1/2} H W De^{-1} H^T Dv^{-1/2} (symmetrized), Delta = I - Theta.
struct LaplacianPair {
    Matrix theta;
    Matrix delta;
};

/// c_ij = squared Euclidean distance between rows i and j; symmetric, zero
/// diagonal, tiny negative round-off clamped to 0.
Matrix pairwise_sq_dists(const Matrix& x);

/// Closed-form solution of the row-wise sparse representation problem: per
/// row, the sigma nearest neighbors j get (c_{i,sigma+1} - c_ij) /
/// (sigma c_{i,sigma+1} - sum_{h<=sigma} c_ih); everything else 0. Ties at
/// the sigma boundary break by ascending sample index; a degenerate
/// denominator falls back to uniform 1/sigma on the sigma nearest.
SimilarityMatrix sparse_similarity(const Matrix& c, int sigma);

Hypergraph build_incidence(const SimilarityMatrix& a);

/// (dv, de) with d(v) = sum_e w(e) H(v,e) and delta(e) = sum_v H(v,e).
std::pair<Vector, Vector> degrees(const Matrix& h, const Vector& w);

LaplacianPair laplacian(const Hypergraph& g);

/// Full chain for one view: features -> squared distances -> sparse
/// similarity -> incidence -> normalized Laplacian pair.
LaplacianPair view_laplacian(const Matrix& x, int sigma);

}  // namespace mhscg
