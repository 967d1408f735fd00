#pragma once

#include "blindspikes/phi.hpp"

#include <cstdint>
#include <optional>

namespace blindspikes {

/// Monte-Carlo amplitudes of the two noise processes entering the stochastic
/// localization bound: per trial and location x,
///   D1(x) = <Pi_{R(x)} y0, Pi_{R(x)} b>,  D2(x) = ||Pi_{R(x)} b||^2 / 2,
/// with amplitudes Z = sup_x - inf_x over the evaluation grid.
struct AmplitudeStats {
    Vec z1, z2;          // per-trial amplitudes
    double z1_mean = 0, z2_mean = 0;
    double z1_std = 0, z2_std = 0;
    double sigma = 0;
    int trials = 0;
    double eval_step = 0;
    double y0_norm = 0;
    // phi_+^{-1}(2 (Z1 + Z2 + margin) / ||y0||^2), margin = 2 (std1 + std2),
    // when a profile was supplied and the argument is reachable
    std::optional<double> bound;
    double bound_argument = 0;
};

AmplitudeStats mc_amplitude(const OperatorFamily& family, const Vec& x_bar, const Vec& gamma,
                            double sigma, int trials, const SamplingGrid& eval_grid,
                            std::uint64_t seed, const PhiProfile* profile = nullptr,
                            double rank_tol = 1e-10);

} // namespace blindspikes
