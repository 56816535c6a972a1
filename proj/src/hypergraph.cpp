#include "mhscg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mhscg {

Matrix pairwise_sq_dists(const Matrix& x) {
    if (!x.allFinite()) throw std::invalid_argument("pairwise_sq_dists: non-finite input");
    const Index n = x.rows();
    const Vector sq = x.rowwise().squaredNorm();
    Matrix c = sq.replicate(1, n) + sq.transpose().replicate(n, 1) - 2.0 * (x * x.transpose());
    c = c.cwiseMax(0.0);
    c.diagonal().setZero();
    c = ((c + c.transpose()) * 0.5).eval();
    return c;
}

SimilarityMatrix sparse_similarity(const Matrix& c, int sigma) {
    const Index n = c.rows();
    if (c.cols() != n) throw std::invalid_argument("sparse_similarity: non-square distances");
    if (!c.allFinite()) throw std::invalid_argument("sparse_similarity: NaN distance");
    if (sigma < 1 || static_cast<Index>(sigma) > n - 2)
        throw std::invalid_argument("sparse_similarity: sigma must be in [1, n-2]");

    Matrix a = Matrix::Zero(n, n);
    std::vector<Index> order(n - 1);
    for (Index i = 0; i < n; ++i) {
        Index pos = 0;
        for (Index j = 0; j < n; ++j)
            if (j != i) order[pos++] = j;
        // ascending distance; ties at the sigma boundary break by sample index
        std::stable_sort(order.begin(), order.end(),
                         [&](Index p, Index q) { return c(i, p) < c(i, q); });

        const double c_next = c(i, order[sigma]);  // c_{i, sigma+1}
        double sum_near = 0.0;
        for (int h = 0; h < sigma; ++h) sum_near += c(i, order[h]);
        const double denom = sigma * c_next - sum_near;

        if (denom <= 1e-300) {
            // first sigma+1 distances coincide: the perturbation limit is uniform
            for (int h = 0; h < sigma; ++h) a(i, order[h]) = 1.0 / sigma;
        } else {
            for (int h = 0; h < sigma; ++h) a(i, order[h]) = (c_next - c(i, order[h])) / denom;
        }
    }
    return SimilarityMatrix{std::move(a), sigma};
}

Hypergraph build_incidence(const SimilarityMatrix& a) {
    const Index n = a.a.rows();
    Hypergraph g;
    // hyperedge e_j = centroid v_j plus the neighbors of row j of A
    g.h = a.a.transpose();
    g.h.diagonal().array() += 1.0;
    g.w = Vector::Ones(n);
    std::tie(g.dv, g.de) = degrees(g.h, g.w);
    return g;
}

std::pair<Vector, Vector> degrees(const Matrix& h, const Vector& w) {
    const Index n = h.rows(), m = h.cols();
    if (w.size() != m) throw std::invalid_argument("degrees: weight size mismatch");
    if ((h.array() < -1e-12).any() || (h.array() > 1.0 + 1e-12).any())
        throw std::invalid_argument("degrees: incidence entries outside [0, 1]");
    if ((w.array() <= 0.0).any()) throw std::invalid_argument("degrees: non-positive weight");

    Vector de = h.colwise().sum();
    Vector dv = h * w;
    for (Index i = 0; i < n; ++i)
        if (dv[i] <= 0.0)
            throw std::invalid_argument("degrees: vertex " + std::to_string(i) +
                                        " has zero degree");
    return {std::move(dv), std::move(de)};
}

LaplacianPair laplacian(const Hypergraph& g) {
    const Index n = g.h.rows();
    if ((g.dv.array() <= 0.0).any() || (g.de.array() <= 0.0).any())
        throw std::invalid_argument("laplacian: singular degree matrix");

    const Vector dv_isqrt = g.dv.array().rsqrt();
    Matrix b = dv_isqrt.asDiagonal() * g.h * g.w.cwiseQuotient(g.de).asDiagonal();
    Matrix theta = b * (dv_isqrt.asDiagonal() * g.h).transpose();
    theta = ((theta + theta.transpose()) * 0.5).eval();

    LaplacianPair lp;
    lp.delta = Matrix::Identity(n, n) - theta;
    lp.theta = std::move(theta);
    return lp;
}

LaplacianPair view_laplacian(const Matrix& x, int sigma) {
    return laplacian(build_incidence(sparse_similarity(pairwise_sq_dists(x), sigma)));
}

}  // namespace mhscg
