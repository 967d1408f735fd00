#pragma once

#include "blindspikes/phi.hpp"

namespace blindspikes {

/// Frame bounds of E^*(x) E(x) over a probe set, plus a finite-difference
/// Lipschitz estimate of x -> Pi_{R(x)}.
struct SpectralBounds {
    double sigma_minus = 0.0;
    double sigma_plus = 0.0;
    double kappa = 1.0; // sigma_plus / sigma_minus, inf when singular
    double lipschitz = 0.0;
    double probe_step = 0.0; // largest distance between adjacent probes used
};

/// sigma_- / sigma_+ are the extreme eigenvalues of E^*E over the probes;
/// the Lipschitz constant is estimated from consecutive probe pairs as
/// ||Pi - Pi'|| / ||x - x'||. sigma_- below 1e-12 * sigma_+ is reported as 0
/// with kappa = inf.
SpectralBounds spectral_bounds(const OperatorFamily& family,
                               const std::vector<Vec>& probes, double rank_tol = 1e-10);

/// Spectral norm ||Pi_P - Pi_Q||, computed inside the joint span so it stays
/// cheap for large measurement counts.
double projector_distance(const Projector& P, const Projector& Q);

enum class BoundStatus { Bounded, Unreachable, NoGuarantee };

struct LocationBound {
    BoundStatus status = BoundStatus::NoGuarantee;
    double value = 0.0;    // valid when status == Bounded
    double argument = 0.0; // 2 theta^2 + 4 theta
};

/// Localization error bound phi_+^{-1}(2 theta^2 + 4 theta) for relative
/// noise level theta. NoGuarantee when theta >= sqrt(6)/2 - 1; Unreachable
/// when the argument exceeds the sampled profile.
LocationBound location_error_bound(double theta, const PhiProfile& profile);

struct IsolationRadius {
    double delta_min = 0.0; // minimal separation 2a (tau (N-1) c)^{1/b}
    double r_bound = 0.0;   // 18.4 * a * 2^{1/b} / tau
    double r_sharp = 0.0;   // rational-form bound, tighter for moderate N, c
};

/// Separation / accuracy tradeoff for a source of relative amplitude ratio c
/// among N sources, given the fitted profile model. Requires tau >= 5, N >= 2
/// and c > 0.
IsolationRadius isolation_radius(const PhiModel& model, double c, int N, double tau);

} // namespace blindspikes
