#include "blindspikes/family.hpp"

#include "blindspikes/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace blindspikes {

void SpikeTrain::validate(const Box* domain) const {
    for (const Spike& s : spikes) {
        if (s.w == 0.0) throw std::invalid_argument("SpikeTrain: weights must be nonzero");
        if (!s.x.allFinite()) throw std::invalid_argument("SpikeTrain: positions must be finite");
        if (domain && !domain->contains(s.x))
            throw std::invalid_argument("SpikeTrain: position outside the domain");
    }
}

NoiseSpec NoiseSpec::white_gaussian(double sigma, std::uint64_t seed) {
    if (sigma < 0) throw std::invalid_argument("NoiseSpec: sigma must be nonnegative");
    NoiseSpec n;
    n.model = Model::WhiteGaussian;
    n.sigma = sigma;
    n.seed = seed;
    return n;
}

NoiseSpec NoiseSpec::bounded_relative(double theta, std::uint64_t seed) {
    if (theta < 0) throw std::invalid_argument("NoiseSpec: theta must be nonnegative");
    NoiseSpec n;
    n.model = Model::BoundedRelative;
    n.theta = theta;
    n.seed = seed;
    return n;
}

namespace {

std::vector<Filter> orthonormalize_for_grid(std::vector<Filter> filters,
                                            const SamplingGrid& grid, double fine_factor) {
    SamplingGrid fine = make_filter_table_grid(filters, grid.dim(), grid.min_step(), fine_factor);
    std::vector<Filter> ortho = orthogonalize_filters(filters, fine);
    // Scale so that grid-sampled columns of the response matrix have unit
    // norm at the Nyquist rate: <u,v>_grid = sum_m u(z_m) v(z_m)
    //                                      ~ <u,v>_L2 / cell_volume.
    const double c = std::sqrt(grid.cell_volume());
    for (Filter& f : ortho) f.scale_values(c);
    return ortho;
}

} // namespace

OperatorFamily OperatorFamily::convolution(std::vector<Filter> filters, SamplingGrid grid,
                                           bool orthonormalize, double fine_factor) {
    if (filters.empty()) throw std::invalid_argument("OperatorFamily: need at least one filter");
    for (const Filter& f : filters)
        if (f.dim() != grid.dim() && !(f.dim() == 1 && grid.dim() == 1))
            throw std::invalid_argument("OperatorFamily: filter dimension mismatch");
    OperatorFamily fam;
    fam.kind_ = Kind::Convolution;
    fam.grid_ = std::move(grid);
    if (orthonormalize) {
        fam.filters_ = orthonormalize_for_grid(std::move(filters), fam.grid_, fine_factor);
        fam.orthonormalized_ = true;
    } else {
        fam.filters_ = std::move(filters);
    }
    fam.modulators_ = {Modulator::constant(1.0)};
    return fam;
}

OperatorFamily OperatorFamily::product_convolution(std::vector<Filter> filters,
                                                   std::vector<Modulator> modulators,
                                                   SamplingGrid grid, bool orthonormalize,
                                                   double fine_factor) {
    if (modulators.empty())
        throw std::invalid_argument("OperatorFamily: product-convolution needs modulators");
    OperatorFamily fam =
        convolution(std::move(filters), std::move(grid), orthonormalize, fine_factor);
    fam.kind_ = Kind::ProductConvolution;
    fam.modulators_ = std::move(modulators);
    return fam;
}

OperatorFamily OperatorFamily::with_grid(SamplingGrid grid) const {
    if (grid.dim() != grid_.dim())
        throw std::invalid_argument("OperatorFamily::with_grid: dimension mismatch");
    OperatorFamily fam = *this;
    fam.grid_ = std::move(grid);
    return fam;
}

Mat OperatorFamily::filter_gram() const {
    // Inner product matching the response-matrix columns at the Nyquist rate:
    // for tabulated filters, cell_volume(table) / cell_volume(grid) * sum.
    const Filter& f0 = filters_.front();
    const int J = this->J();
    Mat G(J, J);
    if (f0.table_grid()) {
        const SamplingGrid& tg = *f0.table_grid();
        const double w = tg.cell_volume() / grid_.cell_volume();
        for (int a = 0; a < J; ++a)
            for (int b = a; b < J; ++b) {
                double dot = filters_[a].table_values()->dot(*filters_[b].table_values());
                G(a, b) = G(b, a) = w * dot;
            }
        return G;
    }
    // analytic filters: sample on the measurement grid offsets around center
    Vec c = grid_.bounding_box().center();
    Mat E = assemble_convolution_block(*this, c);
    return E.transpose() * E;
}

Mat assemble_convolution_block(const OperatorFamily& family, const Vec& x) {
    if (!x.allFinite()) throw std::invalid_argument("assemble_response: position must be finite");
    const Eigen::Index M = family.M();
    const int J = family.J();
    Mat E(M, J);
    const Mat& Z = family.grid().points();
    Vec t(family.dim());
    for (Eigen::Index m = 0; m < M; ++m) {
        t = Z.row(m).transpose() - x;
        for (int j = 0; j < J; ++j) E(m, j) = family.filters()[j](t);
    }
    return E;
}

Vec modulator_values(const OperatorFamily& family, const Vec& x) {
    const int K = family.K();
    Vec f(K);
    for (int k = 0; k < K; ++k) f[k] = family.modulators()[k](x);
    return f;
}

Mat assemble_response(const OperatorFamily& family, const Vec& x) {
    Mat Ec = assemble_convolution_block(family, x);
    if (family.kind() == OperatorFamily::Kind::Convolution) return Ec;
    const int J = family.J(), K = family.K();
    Vec f = modulator_values(family, x);
    Mat E(family.M(), J * K);
    for (int k = 0; k < K; ++k) E.middleCols(k * J, J) = f[k] * Ec;
    return E;
}

Vec draw_noise(const NoiseSpec& noise, const Vec& y0) {
    const Eigen::Index M = y0.size();
    switch (noise.model) {
        case NoiseSpec::Model::None:
            return Vec::Zero(M);
        case NoiseSpec::Model::WhiteGaussian: {
            Rng rng(noise.seed);
            Vec b(M);
            for (Eigen::Index m = 0; m < M; ++m) b[m] = noise.sigma * rng.normal();
            return b;
        }
        case NoiseSpec::Model::BoundedRelative: {
            double n0 = y0.norm();
            if (n0 == 0.0)
                throw std::invalid_argument("draw_noise: bounded_relative needs y0 != 0");
            Rng rng(noise.seed);
            Vec g(M);
            for (Eigen::Index m = 0; m < M; ++m) g[m] = rng.normal();
            double gn = g.norm();
            if (gn == 0.0) return Vec::Zero(M);
            return g * (noise.theta * n0 / gn);
        }
    }
    return Vec::Zero(M);
}

Measurement synthesize_measurement(const OperatorFamily& family, const Vec& gamma,
                                   const SpikeTrain& spikes, const NoiseSpec& noise) {
    if (gamma.size() != family.I())
        throw std::invalid_argument("synthesize_measurement: gamma size must equal I");
    if (!gamma.allFinite())
        throw std::invalid_argument("synthesize_measurement: gamma must be finite");
    spikes.validate();
    Vec y0 = Vec::Zero(family.M());
    for (const Spike& s : spikes.spikes) y0 += s.w * (assemble_response(family, s.x) * gamma);
    Measurement meas;
    meas.y0 = y0;
    meas.y = y0 + draw_noise(noise, y0);
    return meas;
}

Vec apply_operator(const OperatorFamily& family, const Vec& gamma, const SpikeTrain& spikes) {
    return synthesize_measurement(family, gamma, spikes, NoiseSpec::none()).y0;
}

} // namespace blindspikes
