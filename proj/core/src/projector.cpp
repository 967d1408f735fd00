#include "blindspikes/projector.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace blindspikes {

namespace {

Projector basis_from_svd(const Mat& E, double rank_tol) {
    Projector p;
    p.tol = rank_tol;
    if (E.size() == 0 || E.norm() == 0.0) {
        p.U = Mat::Zero(E.rows(), 0);
        p.rank = 0;
        return p;
    }
    if (E.cols() == 1) {
        double n = E.norm();
        p.U = E / n;
        p.rank = 1;
        return p;
    }
    Eigen::BDCSVD<Mat> svd(E, Eigen::ComputeThinU);
    const Vec& sv = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > rank_tol * sv[0]) ++r;
    p.U = svd.matrixU().leftCols(r);
    p.rank = r;
    return p;
}

} // namespace

Projector range_basis(const Mat& E, double rank_tol) {
    if (!E.allFinite()) throw std::invalid_argument("range_basis: E must be finite");
    return basis_from_svd(E, rank_tol);
}

Projector family_range_basis(const OperatorFamily& family, const Vec& x, double rank_tol) {
    Projector p;
    if (family.kind() == OperatorFamily::Kind::ProductConvolution) {
        Vec f = modulator_values(family, x);
        if (f.cwiseAbs().maxCoeff() == 0.0) {
            p.U = Mat::Zero(family.M(), 0);
            p.rank = 0;
            p.x = x;
            p.tol = rank_tol;
            return p;
        }
        p = basis_from_svd(assemble_convolution_block(family, x), rank_tol);
    } else {
        p = basis_from_svd(assemble_response(family, x), rank_tol);
    }
    p.x = x;
    p.tol = rank_tol;
    return p;
}

double principal_angle_norm(const Projector& P, const Projector& Q) {
    if (P.U.rows() != Q.U.rows())
        throw std::invalid_argument("principal_angle_norm: projectors over different spaces");
    if (P.rank == 0 || Q.rank == 0) return 0.0;
    Mat W = P.U.transpose() * Q.U;
    double s;
    if (W.rows() == 1 || W.cols() == 1) {
        s = W.norm();
    } else {
        Eigen::JacobiSVD<Mat> svd(W);
        s = svd.singularValues()[0];
    }
    return std::min(1.0, std::max(0.0, s));
}

} // namespace blindspikes
