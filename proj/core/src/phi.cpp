#include "blindspikes/phi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace blindspikes {

Vec sample_phi_profile(const OperatorFamily& family, const Box& domain, double dx,
                       double rank_tol, const Vec* reference, int max_offsets) {
    if (!(dx > 0)) throw std::invalid_argument("sample_phi_profile: dx must be positive");
    const int D = family.dim();
    Vec ref = reference ? *reference : domain.center();
    if (!domain.contains(ref))
        throw std::invalid_argument("sample_phi_profile: reference outside the domain");

    // longest admissible ray from the reference along any signed axis
    double longest = 0.0;
    for (int d = 0; d < D; ++d) {
        longest = std::max(longest, domain.hi[d] - ref[d]);
        longest = std::max(longest, ref[d] - domain.lo[d]);
    }
    int K = static_cast<int>(std::floor(longest / dx + 1e-12));
    if (max_offsets >= 0) K = std::min(K, max_offsets);

    Projector P0 = family_range_basis(family, ref, rank_tol);
    Vec phi0(K + 1);
    phi0[0] = 0.0;
    for (int k = 1; k <= K; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (int d = 0; d < D; ++d) {
            for (int sign = -1; sign <= 1; sign += 2) {
                Vec x = ref;
                x[d] += sign * k * dx;
                if (!domain.contains(x, 1e-12)) continue;
                Projector Pk = family_range_basis(family, x, rank_tol);
                best = std::min(best, 1.0 - principal_angle_norm(P0, Pk));
            }
        }
        phi0[k] = std::isfinite(best) ? best : phi0[k - 1];
    }
    return phi0;
}

PhiProfile monotone_majorant(const Vec& phi0, double dx) {
    if (!(dx > 0)) throw std::invalid_argument("monotone_majorant: dx must be positive");
    if (!phi0.allFinite()) throw std::invalid_argument("monotone_majorant: samples must be finite");
    PhiProfile p;
    p.dx = dx;
    p.raw = phi0;
    p.phi = phi0;
    p.phi[0] = 0.0; // anchor
    for (Eigen::Index k = 1; k < p.phi.size(); ++k)
        p.phi[k] = std::max(p.phi[k], p.phi[k - 1]);
    return p;
}

PhiProfile monotone_minorant(const Vec& phi0, double dx) {
    if (!(dx > 0)) throw std::invalid_argument("monotone_minorant: dx must be positive");
    PhiProfile p;
    p.dx = dx;
    p.raw = phi0;
    p.phi = phi0;
    for (Eigen::Index k = p.phi.size() - 2; k >= 0; --k)
        p.phi[k] = std::min(p.phi[k], p.phi[k + 1]);
    if (p.phi.size()) p.phi[0] = std::min(p.phi[0], 0.0);
    return p;
}

std::optional<double> quantile_inverse(const PhiProfile& profile, double t) {
    if (t < 0) throw std::invalid_argument("quantile_inverse: t must be nonnegative");
    const Vec& phi = profile.phi;
    if (phi.size() == 0) return std::nullopt;
    if (t <= phi[0]) return 0.0;
    for (Eigen::Index k = 1; k < phi.size(); ++k) {
        if (phi[k] >= t) {
            double lo = phi[k - 1];
            double frac = (t - lo) / (phi[k] - lo); // phi[k] > lo since lo < t <= phi[k]
            return profile.dx * (static_cast<double>(k - 1) + frac);
        }
    }
    return std::nullopt;
}

namespace {

// simple least squares y ~ s * x + c
void line_fit(const std::vector<double>& xs, const std::vector<double>& ys, double& s,
              double& c, double& rms) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double det = n * sxx - sx * sx;
    s = (n * sxy - sx * sy) / det;
    c = (sy - s * sx) / n;
    double r2 = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (s * xs[i] + c);
        r2 += e * e;
    }
    rms = std::sqrt(r2 / n);
}

} // namespace

PhiModel fit_phi_model(const PhiProfile& profile, bool fit_decay) {
    std::vector<double> xs, ys;
    for (int k = 1; k < profile.samples(); ++k) {
        double t = k * profile.dx;
        double v = profile.phi[k];
        if (v < 0.05 || v > 0.95) continue;
        xs.push_back(std::log(t));
        ys.push_back(std::log(v / (1.0 - v)));
    }
    if (xs.size() < 3)
        throw std::invalid_argument("fit_phi_model: fewer than 3 usable samples in (0.05, 0.95)");

    PhiModel m;
    double slope, intercept, rms;
    line_fit(xs, ys, slope, intercept, rms);
    m.b = slope;
    m.a = std::exp(-intercept / slope);
    m.residual = rms;
    if (!(m.a > 0) || !(m.b > 0))
        throw std::runtime_error("fit_phi_model: fit produced nonpositive parameters");

    if (fit_decay) {
        std::vector<double> dx_log, dy_log;
        for (int k = 1; k < profile.samples(); ++k) {
            double corr = 1.0 - profile.raw[k]; // ||Pi Pi'|| at offset k dx
            if (corr <= 1e-12 || corr >= 0.95) continue;
            dx_log.push_back(std::log(k * profile.dx));
            dy_log.push_back(std::log(corr));
        }
        if (dx_log.size() >= 3) {
            double s, c, r;
            line_fit(dx_log, dy_log, s, c, r);
            // log corr = -alpha log d - alpha log beta
            double alpha = -s;
            if (alpha > 0) {
                m.alpha = alpha;
                m.beta = std::exp(c / s);
            }
        }
    }
    return m;
}

} // namespace blindspikes
