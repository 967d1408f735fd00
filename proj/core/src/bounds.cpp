#include "blindspikes/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blindspikes {

SpectralBounds spectral_bounds(const OperatorFamily& family, const std::vector<Vec>& probes,
                               double rank_tol) {
    if (probes.empty()) throw std::invalid_argument("spectral_bounds: need at least one probe");
    SpectralBounds out;
    out.sigma_minus = std::numeric_limits<double>::infinity();
    out.sigma_plus = 0.0;

    std::vector<Projector> projs;
    projs.reserve(probes.size());
    for (const Vec& x : probes) {
        Mat E = assemble_response(family, x);
        Eigen::SelfAdjointEigenSolver<Mat> es(E.transpose() * E);
        out.sigma_minus = std::min(out.sigma_minus, es.eigenvalues().minCoeff());
        out.sigma_plus = std::max(out.sigma_plus, es.eigenvalues().maxCoeff());
        projs.push_back(family_range_basis(family, x, rank_tol));
    }

    if (out.sigma_minus < 1e-12 * out.sigma_plus) {
        out.sigma_minus = 0.0;
        out.kappa = std::numeric_limits<double>::infinity();
    } else {
        out.kappa = out.sigma_plus / out.sigma_minus;
    }

    for (size_t i = 0; i + 1 < projs.size(); ++i) {
        double dist = (probes[i + 1] - probes[i]).norm();
        if (dist <= 0) continue;
        double diff = projector_distance(projs[i], projs[i + 1]);
        out.lipschitz = std::max(out.lipschitz, diff / dist);
        out.probe_step = std::max(out.probe_step, dist);
    }
    return out;
}

double projector_distance(const Projector& P, const Projector& Q) {
    if (P.U.rows() != Q.U.rows())
        throw std::invalid_argument("projector_distance: projectors over different spaces");
    const int r1 = P.rank, r2 = Q.rank;
    if (r1 == 0 && r2 == 0) return 0.0;
    // Work inside span(U) + span(V): with Q an orthonormal basis of the joint
    // span and A = Q^T U, B = Q^T V, the difference equals Q (AA^T - BB^T) Q^T.
    Mat W(P.U.rows(), r1 + r2);
    if (r1) W.leftCols(r1) = P.U;
    if (r2) W.rightCols(r2) = Q.U;
    Eigen::HouseholderQR<Mat> qr(W);
    Mat Qb = qr.householderQ() * Mat::Identity(W.rows(), std::min<Eigen::Index>(W.rows(), r1 + r2));
    Mat A = Qb.transpose() * P.U;
    Mat B = Qb.transpose() * Q.U;
    Mat D = A * A.transpose() - B * B.transpose();
    Eigen::SelfAdjointEigenSolver<Mat> es(D);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

LocationBound location_error_bound(double theta, const PhiProfile& profile) {
    if (theta < 0) throw std::invalid_argument("location_error_bound: theta must be nonnegative");
    LocationBound lb;
    lb.argument = 2.0 * theta * theta + 4.0 * theta;
    const double theta_max = std::sqrt(6.0) / 2.0 - 1.0;
    if (theta >= theta_max) {
        lb.status = BoundStatus::NoGuarantee;
        return lb;
    }
    auto q = quantile_inverse(profile, lb.argument);
    if (!q) {
        lb.status = BoundStatus::Unreachable;
        return lb;
    }
    lb.status = BoundStatus::Bounded;
    lb.value = *q;
    return lb;
}

IsolationRadius isolation_radius(const PhiModel& model, double c, int N, double tau) {
    if (tau < 5.0) throw std::invalid_argument("isolation_radius: requires tau >= 5");
    if (N < 2) throw std::invalid_argument("isolation_radius: requires N >= 2");
    if (!(c > 0)) throw std::invalid_argument("isolation_radius: requires c > 0");
    const double a = model.a, b = model.b;
    const double Z = tau * (N - 1) * c;
    IsolationRadius r;
    r.delta_min = 2.0 * a * std::pow(Z, 1.0 / b);
    r.r_bound = 18.4 * a * std::pow(2.0, 1.0 / b) / tau;
    // Rational form behind the 18.4 envelope, with z = (N-1) c:
    //   r <= a 2^{1/b} [ z (z + 2 + 2 tau z) / (1 + (2tau-4) z + (tau^2-4tau-2) z^2) ]^{1/b}
    const double z = (N - 1) * c;
    double num = z * (z + 2.0 + 2.0 * tau * z);
    double den = 1.0 + (2.0 * tau - 4.0) * z + (tau * tau - 4.0 * tau - 2.0) * z * z;
    r.r_sharp = a * std::pow(2.0, 1.0 / b) * std::pow(num / den, 1.0 / b);
    return r;
}

} // namespace blindspikes
