#pragma once

#include "blindspikes/projector.hpp"

#include <optional>

namespace blindspikes {

/// Sampled identifiability profile phi(k * dx), k = 0..K. `raw` keeps the
/// direct samples phi0(k) = 1 - ||Pi_ref Pi_{ref + k dx}||; `phi` is the
/// nondecreasing majorant used by the stability bounds.
struct PhiProfile {
    double dx = 0.0;
    Vec phi; // nondecreasing, phi[0] = 0
    Vec raw; // raw samples phi0

    int samples() const { return static_cast<int>(phi.size()); }
    double max_phi() const { return phi.size() ? phi[phi.size() - 1] : 0.0; }
};

/// Parametric profile phi(t) = (t/a)^b / (1 + (t/a)^b), plus an optional
/// power-law decay pair ||Pi Pi'|| <= (beta d)^-alpha.
struct PhiModel {
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;
    std::optional<double> alpha;
    std::optional<double> beta;

    double eval(double t) const {
        if (t <= 0) return 0.0;
        double r = std::pow(t / a, b);
        return r / (1.0 + r);
    }
};

/// Raw profile phi0(k) = 1 - ||Pi_{R(ref)} Pi_{R(ref + k dx u)}|| sampled for
/// k = 0..max_offsets along each signed axis direction u that stays inside
/// the domain; for D > 1 the minimum over directions is taken. The reference
/// defaults to the domain center.
Vec sample_phi_profile(const OperatorFamily& family, const Box& domain, double dx,
                       double rank_tol = 1e-10, const Vec* reference = nullptr,
                       int max_offsets = -1);

/// Closest nondecreasing function above the raw samples: the running maximum
/// after anchoring the first sample to 0. This is the exact minimizer of
/// ||phi - phi0||^2 under phi nondecreasing and phi >= phi0.
PhiProfile monotone_majorant(const Vec& phi0, double dx);

/// Largest nondecreasing function below the raw samples (reverse running
/// minimum), exposed for diagnostics.
PhiProfile monotone_minorant(const Vec& phi0, double dx);

/// Quantile function phi_+^{-1}(t) = inf { s : phi(s) >= t }, linearly
/// interpolated between samples. Returns nullopt when t exceeds max phi.
std::optional<double> quantile_inverse(const PhiProfile& profile, double t);

/// Least-squares fit of log(phi/(1-phi)) = b log t - b log a over samples
/// with phi in [0.05, 0.95]. With fit_decay, also fits the power-law pair on
/// log(1 - phi0). Throws when fewer than 3 usable samples exist.
PhiModel fit_phi_model(const PhiProfile& profile, bool fit_decay = false);

} // namespace blindspikes
