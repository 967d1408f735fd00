#pragma once

#include "blindspikes/family.hpp"

namespace blindspikes {

/// Orthonormal basis U of the measurement range R(x) = Ran(E(x)).
/// The orthogonal projector onto the range is U U^T.
struct Projector {
    Mat U;              // M x r, orthonormal columns
    int rank = 0;
    Vec x;              // source location (may be empty for raw matrices)
    double tol = 1e-10; // relative rank tolerance used

    Vec project(const Vec& y) const { return U * (U.transpose() * y); }
    Vec coords(const Vec& y) const { return U.transpose() * y; }
};

/// Left singular subspace of E above rank_tol times the largest singular
/// value. E = 0 yields a legal rank-0 projector.
Projector range_basis(const Mat& E, double rank_tol = 1e-10);

/// Range basis of E(x) for a family. For product-convolution families the
/// range equals the span of the convolution block scaled by the modulator
/// values at x, so only an M x J decomposition is needed.
Projector family_range_basis(const OperatorFamily& family, const Vec& x,
                             double rank_tol = 1e-10);

/// ||Pi_P Pi_Q||_{2->2} = largest singular value of U_P^T U_Q, clamped to
/// [0,1]. Equals the cosine of the first principal angle between the ranges.
double principal_angle_norm(const Projector& P, const Projector& Q);

} // namespace blindspikes
