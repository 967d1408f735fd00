#pragma once

#include "blindspikes/correlation.hpp"

namespace blindspikes {

enum class SpikeStatus { Isolated, Clustered, Weak };

struct SpikeEstimate {
    Vec x;
    Vec alpha_range;   // coordinates of the projected data in the range basis
    Vec alpha_ambient; // minimum-norm coefficient vector, E(x)^+ y
    double objective = 0.0;
    SpikeStatus status = SpikeStatus::Isolated;
};

struct LocalizeOptions {
    double rank_tol = 1e-10;
    const ProjectorCache* cache = nullptr; // reused coarse projectors
};

/// Single-source localization: coarse grid argmax of the correlation
/// objective followed by derivative-free refinement (golden section plus a
/// two-stage parabolic polish per axis in 1D, Nelder-Mead plus per-axis
/// polish for D >= 2) until the position change drops below refine_tol.
SpikeEstimate localize_single(const OperatorFamily& family, const Vec& y, const Box& domain,
                              double coarse_step, double refine_tol,
                              const LocalizeOptions& opts = {});

/// Greedy multi-source detection: repeatedly refine the coarse global
/// maximum, suppress an exclusion ball around it, and stop once the refined
/// objective falls below weak_threshold * ||y||^2 / 2. Estimates whose
/// refined objective drops below the cutoff are flagged Weak; surviving pairs
/// closer than 2 * exclusion_radius are flagged Clustered.
std::vector<SpikeEstimate> detect_peaks(const OperatorFamily& family, const Vec& y,
                                        const Box& domain, double coarse_step,
                                        double weak_threshold, double exclusion_radius,
                                        const LocalizeOptions& opts = {});

struct AlphaEstimate {
    Vec alpha;       // minimum-norm least-squares solution
    double residual; // ||E(x) alpha - y||
};

/// alpha = E(x)^+ y (minimum l2-norm least squares).
AlphaEstimate estimate_alpha(const OperatorFamily& family, const Vec& x, const Vec& y,
                             double rank_tol = 1e-10);

} // namespace blindspikes
