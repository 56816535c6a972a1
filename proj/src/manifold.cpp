#include "mhscg/manifold.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace mhscg {

namespace {

double fdot(const Matrix& a, const Matrix& b) { return a.cwiseProduct(b).sum(); }

/// Positive root of ||s + tau d||^2 = radius^2 given the cached inner products.
double boundary_tau(double ss, double sd, double dd, double radius) {
    const double disc = sd * sd + dd * (radius * radius - ss);
    return (-sd + std::sqrt(std::max(disc, 0.0))) / dd;
}

std::pair<Matrix, Vector> thin_qr_positive(const Matrix& a) {
    const Index n = a.rows(), k = a.cols();
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ() * Matrix::Identity(n, k);
    Vector rdiag(k);
    for (Index j = 0; j < k; ++j) {
        rdiag[j] = qr.matrixQR()(j, j);
        if (rdiag[j] < 0) {
            q.col(j) = -q.col(j);
            rdiag[j] = -rdiag[j];
        }
    }
    return {std::move(q), std::move(rdiag)};
}

void check_same_shape(const GrassmannPoint& x, const Matrix& z, const char* who) {
    if (z.rows() != x.n() || z.cols() != x.k())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

}  // namespace

GrassmannPoint GrassmannPoint::from_orthonormal(Matrix x) {
    if (x.cols() < 1 || x.rows() < x.cols())
        throw std::invalid_argument("GrassmannPoint: need n >= k >= 1");
    const Matrix gram = x.transpose() * x;
    const double err =
        (gram - Matrix::Identity(x.cols(), x.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-10)
        throw std::invalid_argument("GrassmannPoint: columns not orthonormal");
    return GrassmannPoint{std::move(x)};
}

GrassmannPoint GrassmannPoint::orthonormalize(const Matrix& raw) {
    if (raw.cols() < 1 || raw.rows() < raw.cols())
        throw std::invalid_argument("orthonormalize: need n >= k >= 1");
    auto [q, rdiag] = thin_qr_positive(raw);
    const double scale = std::max(1.0, raw.norm());
    for (Index j = 0; j < rdiag.size(); ++j)
        if (rdiag[j] <= 1e-13 * scale)
            throw std::runtime_error("orthonormalize: rank-deficient input");
    return GrassmannPoint{std::move(q)};
}

QuadraticTraceObjective::QuadraticTraceObjective(Matrix mat) {
    if (mat.rows() != mat.cols())
        throw std::invalid_argument("QuadraticTraceObjective: non-square matrix");
    const double asym = (mat - mat.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10)
        throw std::invalid_argument("QuadraticTraceObjective: matrix not symmetric");
    m = ((mat + mat.transpose()) * 0.5).eval();
}

TrustRegionConfig TrustRegionConfig::defaults(Index n, Index k) {
    TrustRegionConfig cfg;
    cfg.delta_bar = std::sqrt(static_cast<double>(k));
    cfg.delta0 = cfg.delta_bar / 8.0;
    cfg.max_inner = static_cast<int>(std::max<Index>(1, k * (n - k)));
    return cfg;
}

void TrustRegionConfig::check() const {
    if (!(delta0 > 0) || !(delta0 <= delta_bar))
        throw std::invalid_argument("TrustRegionConfig: need 0 < delta0 <= delta_bar");
    if (!(rho_prime > 0) || !(rho_prime < 0.25))
        throw std::invalid_argument("TrustRegionConfig: need 0 < rho_prime < 0.25");
    if (max_outer < 1 || max_inner < 1)
        throw std::invalid_argument("TrustRegionConfig: iteration caps must be positive");
    if (!(grad_tol > 0) || !(kappa > 0) || !(theta > 0))
        throw std::invalid_argument("TrustRegionConfig: tolerances must be positive");
}

Matrix project_tangent(const GrassmannPoint& x, const Matrix& z) {
    check_same_shape(x, z, "project_tangent");
    return z - x.x * (x.x.transpose() * z);
}

GrassmannPoint retract(const GrassmannPoint& x, const Matrix& xi) {
    check_same_shape(x, xi, "retract");
    if ((xi.array() == 0.0).all()) return x;
    return GrassmannPoint::orthonormalize(x.x + xi);
}

Matrix riemannian_grad(const GrassmannPoint& x, const QuadraticTraceObjective& obj) {
    if (obj.m.rows() != x.n()) throw std::invalid_argument("riemannian_grad: size mismatch");
    return 2.0 * project_tangent(x, obj.m * x.x);
}

Matrix riemannian_hess_apply(const GrassmannPoint& x, const Matrix& xi,
                             const QuadraticTraceObjective& obj) {
    check_same_shape(x, xi, "riemannian_hess_apply");
    return 2.0 * project_tangent(x, obj.m * xi - xi * (x.x.transpose() * obj.m * x.x));
}

TcgResult truncated_cg(const GrassmannPoint& x, const Matrix& grad_min,
                       const QuadraticTraceObjective& obj, double radius,
                       const TrustRegionConfig& cfg) {
    check_same_shape(x, grad_min, "truncated_cg");
    if (!(radius > 0)) throw std::invalid_argument("truncated_cg: radius must be positive");

    Matrix s = Matrix::Zero(grad_min.rows(), grad_min.cols());
    Matrix r = grad_min;
    const double r0 = r.norm();
    if (!(r0 > 0)) return {std::move(s), TcgStop::tolerance, 0};
    const double stop_tol = r0 * std::min(cfg.kappa, std::pow(r0, cfg.theta));

    Matrix d = -r;
    double rr = r0 * r0;
    for (int j = 0; j < cfg.max_inner; ++j) {
        const Matrix hd = -riemannian_hess_apply(x, d, obj);  // Hessian of -tr(X^T M X)
        const double dhd = fdot(d, hd);
        const double ss = fdot(s, s), sd = fdot(s, d), dd = fdot(d, d);
        if (dhd <= 0) {
            const double tau = boundary_tau(ss, sd, dd, radius);
            return {s + tau * d, TcgStop::negative_curvature, j + 1};
        }
        const double alpha = rr / dhd;
        const double s_next_sq = ss + 2.0 * alpha * sd + alpha * alpha * dd;
        if (s_next_sq >= radius * radius) {
            const double tau = boundary_tau(ss, sd, dd, radius);
            return {s + tau * d, TcgStop::boundary, j + 1};
        }
        s.noalias() += alpha * d;
        r.noalias() += alpha * hd;
        const double rr_next = fdot(r, r);
        if (std::sqrt(rr_next) <= stop_tol) return {std::move(s), TcgStop::tolerance, j + 1};
        d = -r + (rr_next / rr) * d;
        rr = rr_next;
    }
    return {std::move(s), TcgStop::max_inner, cfg.max_inner};
}

RtrResult rtr_maximize(const QuadraticTraceObjective& obj, const GrassmannPoint& x0,
                       const TrustRegionConfig& cfg) {
    cfg.check();
    if (obj.m.rows() != x0.n()) throw std::invalid_argument("rtr_maximize: size mismatch");

    GrassmannPoint x = x0;
    double phi = -obj.value(x.x);  // minimized objective
    double delta = cfg.delta0;
    bool converged = false;
    int outer = 0;
    double gnorm = 0.0;

    while (outer < cfg.max_outer) {
        const Matrix grad_max = riemannian_grad(x, obj);
        gnorm = grad_max.norm();
        if (gnorm <= cfg.grad_tol) {
            converged = true;
            break;
        }
        const Matrix grad_min = -grad_max;
        const TcgResult tcg = truncated_cg(x, grad_min, obj, delta, cfg);
        ++outer;

        const Matrix& s = tcg.step;
        const Matrix hs = -riemannian_hess_apply(x, s, obj);
        const double model_decrease = -(fdot(grad_min, s) + 0.5 * fdot(s, hs));

        const GrassmannPoint x_trial = retract(x, s);
        const double phi_trial = -obj.value(x_trial.x);
        const double actual_decrease = phi - phi_trial;

        double rho;
        if (model_decrease < 1e-13 * std::abs(phi))
            rho = (actual_decrease >= 0) ? 1.0 : -1.0;  // 0/0 guard near convergence
        else
            rho = actual_decrease / model_decrease;

        if (rho < 0.25)
            delta *= 0.25;
        else if (rho > 0.75 &&
                 (tcg.reason == TcgStop::boundary ||
                  tcg.reason == TcgStop::negative_curvature))
            delta = std::min(2.0 * delta, cfg.delta_bar);

        if (rho > cfg.rho_prime) {
            x = x_trial;
            phi = phi_trial;
        }
    }
    if (!converged) gnorm = riemannian_grad(x, obj).norm();
    return {std::move(x), converged, outer, -phi, gnorm};
}

GrassmannPoint dominant_subspace(const Matrix& m, Index k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dominant_subspace: non-square matrix");
    const Index n = m.rows();
    if (k < 1 || k > n) throw std::invalid_argument("dominant_subspace: k out of range");

    Eigen::SelfAdjointEigenSolver<Matrix> es(((m + m.transpose()) * 0.5).eval());
    if (es.info() != Eigen::Success)
        throw std::runtime_error("dominant_subspace: eigensolver failed");

    Matrix v(n, k);
    for (Index j = 0; j < k; ++j) v.col(j) = es.eigenvectors().col(n - 1 - j);
    return GrassmannPoint{std::move(v)};
}

Vector principal_angles(const GrassmannPoint& x, const GrassmannPoint& y) {
    if (x.n() != y.n() || x.k() != y.k())
        throw std::invalid_argument("principal_angles: shape mismatch");
    Eigen::JacobiSVD<Matrix> svd(x.x.transpose() * y.x);
    const Vector& sv = svd.singularValues();
    Vector angles(sv.size());
    for (Index i = 0; i < sv.size(); ++i)
        angles[i] = std::acos(std::clamp(sv[i], -1.0, 1.0));
    return angles;
}

}  // namespace mhscg
