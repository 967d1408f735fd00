#include "blindspikes/amplitude.hpp"

#include "blindspikes/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blindspikes {

AmplitudeStats mc_amplitude(const OperatorFamily& family, const Vec& x_bar, const Vec& gamma,
                            double sigma, int trials, const SamplingGrid& eval_grid,
                            std::uint64_t seed, const PhiProfile* profile, double rank_tol) {
    if (trials < 1) throw std::invalid_argument("mc_amplitude: trials must be >= 1");
    if (sigma < 0) throw std::invalid_argument("mc_amplitude: sigma must be nonnegative");

    Vec y0 = assemble_response(family, x_bar) * gamma;
    const Eigen::Index M = y0.size();

    // projector bases over the evaluation grid, computed once
    const Eigen::Index G = eval_grid.size();
    std::vector<Mat> bases(G);
    std::vector<Vec> uy0(G);
    for (Eigen::Index g = 0; g < G; ++g) {
        Projector p = family_range_basis(family, eval_grid.point(g), rank_tol);
        bases[g] = std::move(p.U);
        uy0[g] = bases[g].transpose() * y0;
    }

    AmplitudeStats st;
    st.z1.resize(trials);
    st.z2.resize(trials);
    st.sigma = sigma;
    st.trials = trials;
    st.eval_step = eval_grid.is_regular() ? eval_grid.min_step() : 0.0;
    st.y0_norm = y0.norm();

    Vec b(M);
    for (int t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        for (Eigen::Index m = 0; m < M; ++m) b[m] = sigma * rng.normal();
        double d1_min = std::numeric_limits<double>::infinity(), d1_max = -d1_min;
        double d2_min = d1_min, d2_max = -d1_min;
        for (Eigen::Index g = 0; g < G; ++g) {
            Vec ub = bases[g].transpose() * b;
            double d1 = uy0[g].dot(ub);
            double d2 = 0.5 * ub.squaredNorm();
            d1_min = std::min(d1_min, d1);
            d1_max = std::max(d1_max, d1);
            d2_min = std::min(d2_min, d2);
            d2_max = std::max(d2_max, d2);
        }
        st.z1[t] = d1_max - d1_min;
        st.z2[t] = d2_max - d2_min;
    }

    st.z1_mean = st.z1.mean();
    st.z2_mean = st.z2.mean();
    auto sample_std = [&](const Vec& z, double mean) {
        if (trials < 2) return 0.0;
        return std::sqrt((z.array() - mean).square().sum() / (trials - 1));
    };
    st.z1_std = sample_std(st.z1, st.z1_mean);
    st.z2_std = sample_std(st.z2, st.z2_mean);

    if (profile && st.y0_norm > 0) {
        double margin = 2.0 * (st.z1_std + st.z2_std);
        st.bound_argument =
            2.0 * (st.z1_mean + st.z2_mean + margin) / (st.y0_norm * st.y0_norm);
        auto q = quantile_inverse(*profile, st.bound_argument);
        if (q) st.bound = *q;
    }
    return st;
}

} // namespace blindspikes
