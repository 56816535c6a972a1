#pragma once

#include "mhscg/types.hpp"

namespace mhscg {

/// A representative of a k-dimensional subspace of R^n: an n x k matrix with
/// orthonormal columns. All representatives of the same subspace differ by a
/// right orthogonal factor.
struct GrassmannPoint {
    Matrix x;

    Index n() const { return x.rows(); }
    Index k() const { return x.cols(); }

    /// Validates X^T X = I within 1e-10.
    static GrassmannPoint from_orthonormal(Matrix x);

    /// Thin QR with positive diagonal sign fix; raises on rank-deficient input.
    static GrassmannPoint orthonormalize(const Matrix& raw);
};

/// f(X) = tr(X^T M X) with M symmetric. Symmetrized on construction;
/// asymmetry beyond 1e-10 is rejected.
struct QuadraticTraceObjective {
    Matrix m;

    explicit QuadraticTraceObjective(Matrix mat);

    double value(const Matrix& x) const { return (x.transpose() * m * x).trace(); }
};

struct TrustRegionConfig {
    double delta_bar = 1.0;   ///< max radius
    double delta0 = 0.125;    ///< initial radius
    double rho_prime = 0.1;   ///< acceptance threshold, in (0, 0.25)
    int max_outer = 200;
    double grad_tol = 1e-7;
    int max_inner = 100;
    double kappa = 0.1;       ///< tCG linear-rate stop
    double theta = 1.0;       ///< tCG superlinear-rate stop

    /// Standard RTR/tCG settings scaled to the manifold dimension:
    /// delta_bar = sqrt(k), delta0 = delta_bar/8, max_inner = k(n-k).
    static TrustRegionConfig defaults(Index n, Index k);

    void check() const;
};

/// P_X(Z) = (I - X X^T) Z. Idempotent; X^T P_X(Z) = 0.
Matrix project_tangent(const GrassmannPoint& x, const Matrix& z);

/// Thin-QR retraction of X + xi; retract(X, 0) returns X unchanged.
GrassmannPoint retract(const GrassmannPoint& x, const Matrix& xi);

/// grad f = 2 (I - X X^T) M X.
Matrix riemannian_grad(const GrassmannPoint& x, const QuadraticTraceObjective& obj);

/// Hess f[xi] = 2 P_X(M xi - xi (X^T M X)) for tangent xi.
Matrix riemannian_hess_apply(const GrassmannPoint& x, const Matrix& xi,
                             const QuadraticTraceObjective& obj);

enum class TcgStop { negative_curvature, boundary, tolerance, max_inner };

struct TcgResult {
    Matrix step;
    TcgStop reason = TcgStop::tolerance;
    int iterations = 0;
};

/// Steihaug-Toint truncated CG for the trust-region model of the *minimized*
/// objective -tr(X^T M X): given grad_min = -riemannian_grad(x, obj), finds an
/// approximate minimizer of <grad_min, s> + 0.5 <s, Hess_min[s]> over
/// ||s||_F <= radius. The step is tangent at x and achieves at least the
/// Cauchy-point model decrease.
TcgResult truncated_cg(const GrassmannPoint& x, const Matrix& grad_min,
                       const QuadraticTraceObjective& obj, double radius,
                       const TrustRegionConfig& cfg);

struct RtrResult {
    GrassmannPoint point;
    bool converged = false;     ///< gradient tolerance reached
    int iterations = 0;         ///< outer iterations taken
    double objective = 0.0;     ///< tr(X^T M X) at the returned point
    double grad_norm = 0.0;
};

/// Riemannian trust-region maximization of tr(X^T M X) on the Grassmannian,
/// implemented as minimization of the negated objective. Accepted steps never
/// decrease the objective; non-convergence is reported via the status flag.
RtrResult rtr_maximize(const QuadraticTraceObjective& obj, const GrassmannPoint& x0,
                       const TrustRegionConfig& cfg);

/// Orthonormal eigenvectors of the k largest eigenvalues of symmetric M,
/// sorted by descending eigenvalue.
GrassmannPoint dominant_subspace(const Matrix& m, Index k);

/// Principal angles between span(X) and span(Y), ascending, in [0, pi/2].
Vector principal_angles(const GrassmannPoint& x, const GrassmannPoint& y);

}  // namespace mhscg
