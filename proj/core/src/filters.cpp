#include "blindspikes/filters.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blindspikes {

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        double px = M_PI * x;
        return 1.0 - px * px / 6.0;
    }
    return std::sin(M_PI * x) / (M_PI * x);
}

} // namespace

Filter Filter::gaussian(double std_dev) {
    if (!(std_dev > 0)) throw std::invalid_argument("Filter::gaussian: std must be positive");
    Filter f;
    f.kind_ = Kind::Gaussian;
    f.dim_ = 1;
    f.param_ = std_dev;
    f.scale_ = std_dev;
    return f;
}

Filter Filter::anisotropic_gaussian(Mat covariance) {
    const int D = static_cast<int>(covariance.rows());
    if (covariance.cols() != D) throw std::invalid_argument("Filter: covariance must be square");
    if (!covariance.isApprox(covariance.transpose(), 1e-12))
        throw std::invalid_argument("Filter: covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> es(covariance);
    if (es.eigenvalues().minCoeff() <= 0)
        throw std::invalid_argument("Filter: covariance must be positive definite");
    Filter f;
    f.kind_ = Kind::AnisotropicGaussian;
    f.dim_ = D;
    f.cov_ = covariance;
    f.cov_inv_ = covariance.inverse();
    f.scale_ = std::sqrt(es.eigenvalues().minCoeff());
    return f;
}

Filter Filter::hat(double scale) {
    if (!(scale > 0)) throw std::invalid_argument("Filter::hat: scale must be positive");
    Filter f;
    f.kind_ = Kind::Hat;
    f.dim_ = 1;
    f.param_ = scale;
    f.scale_ = scale;
    return f;
}

Filter Filter::sinc(double scale) {
    if (!(scale > 0)) throw std::invalid_argument("Filter::sinc: scale must be positive");
    Filter f;
    f.kind_ = Kind::Sinc;
    f.dim_ = 1;
    f.param_ = scale;
    f.scale_ = scale;
    return f;
}

Filter Filter::tabulated(SamplingGrid table_grid, Vec values) {
    if (!table_grid.is_regular())
        throw std::invalid_argument("Filter::tabulated: table grid must be regular");
    if (values.size() != table_grid.size())
        throw std::invalid_argument("Filter::tabulated: value count does not match grid");
    Filter f;
    f.kind_ = Kind::Tabulated;
    f.dim_ = table_grid.dim();
    f.scale_ = table_grid.min_step();
    auto tab = std::make_shared<Table>();
    tab->grid = std::move(table_grid);
    tab->values = std::move(values);
    f.table_ = std::move(tab);
    return f;
}

double Filter::operator()(double t) const {
    Vec v(1);
    v[0] = t;
    return (*this)(v);
}

double Filter::operator()(const Vec& t) const {
    switch (kind_) {
        case Kind::Gaussian: {
            double r2 = t.squaredNorm();
            return amplitude_ * std::exp(-r2 / (2.0 * param_ * param_));
        }
        case Kind::AnisotropicGaussian:
            return amplitude_ * std::exp(-0.5 * t.dot(cov_inv_ * t));
        case Kind::Hat: {
            double r = std::abs(t[0]) / param_;
            return r >= 1.0 ? 0.0 : amplitude_ * (1.0 - r);
        }
        case Kind::Sinc:
            return amplitude_ / std::sqrt(param_) * sinc(t[0] / param_);
        case Kind::Tabulated: {
            const SamplingGrid& g = table_->grid;
            const int D = dim_;
            // cell index and fractional offset per axis
            int idx[4];
            double frac[4];
            for (int d = 0; d < D; ++d) {
                double u = (t[d] - g.origin()[d]) / g.step()[d];
                if (u < 0.0 || u > g.counts()[d] - 1) return 0.0;
                int i = static_cast<int>(u);
                if (i >= g.counts()[d] - 1) i = g.counts()[d] - 2;
                if (i < 0) i = 0;
                idx[d] = i;
                frac[d] = u - i;
            }
            // multilinear interpolation over the 2^D cell corners
            double acc = 0.0;
            const int corners = 1 << D;
            for (int c = 0; c < corners; ++c) {
                double w = 1.0;
                Eigen::Index lin = 0, stride = 1;
                for (int d = 0; d < D; ++d) {
                    int bit = (c >> d) & 1;
                    w *= bit ? frac[d] : 1.0 - frac[d];
                    lin += (idx[d] + bit) * stride;
                    stride *= g.counts()[d];
                }
                acc += w * table_->values[lin];
            }
            return acc;
        }
    }
    return 0.0;
}

void Filter::scale_values(double c) {
    if (kind_ == Kind::Tabulated) {
        auto tab = std::make_shared<Table>(*table_);
        tab->values *= c;
        table_ = std::move(tab);
    } else {
        amplitude_ *= c;
    }
}

std::string Filter::kind_name() const {
    switch (kind_) {
        case Kind::Gaussian: return "gaussian";
        case Kind::AnisotropicGaussian: return "anisotropic_gaussian";
        case Kind::Hat: return "hat";
        case Kind::Sinc: return "sinc";
        case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

SamplingGrid make_filter_table_grid(const std::vector<Filter>& filters, int dim,
                                    double base_step, double fine_factor,
                                    double window_scales) {
    if (filters.empty()) throw std::invalid_argument("make_filter_table_grid: no filters");
    double narrowest = filters.front().resolution_scale();
    double widest = narrowest;
    for (const Filter& f : filters) {
        narrowest = std::min(narrowest, f.resolution_scale());
        widest = std::max(widest, f.resolution_scale());
    }
    double step = std::min(base_step / fine_factor, narrowest / 20.0);
    double half = window_scales * widest;
    Eigen::Index n = static_cast<Eigen::Index>(std::ceil(2.0 * half / step)) + 1;
    Vec origin = Vec::Constant(dim, -half);
    Vec steps = Vec::Constant(dim, step);
    IVec counts = IVec::Constant(dim, static_cast<int>(n));
    return SamplingGrid::regular(origin, steps, counts);
}

std::vector<Filter> orthogonalize_filters(const std::vector<Filter>& filters,
                                          const SamplingGrid& fine_grid,
                                          double rank_tol) {
    if (filters.empty()) throw std::invalid_argument("orthogonalize_filters: no filters");
    if (!fine_grid.is_regular())
        throw std::invalid_argument("orthogonalize_filters: fine grid must be regular");
    const double h = fine_grid.min_step();
    for (const Filter& f : filters) {
        if (f.kind() == Filter::Kind::Tabulated) continue; // resolution fixed by its table
        if (f.resolution_scale() < 20.0 * h - 1e-12 * f.resolution_scale()) {
            std::ostringstream msg;
            msg << "orthogonalize_filters: fine grid step " << h
                << " gives fewer than 20 samples per filter scale " << f.resolution_scale();
            throw std::invalid_argument(msg.str());
        }
    }

    const Eigen::Index n = fine_grid.size();
    const int J = static_cast<int>(filters.size());
    const double vol = fine_grid.cell_volume();
    Mat B(n, J);
    const double sqv = std::sqrt(vol);
    for (int j = 0; j < J; ++j)
        for (Eigen::Index t = 0; t < n; ++t)
            B(t, j) = sqv * filters[j](fine_grid.point(t));

    Eigen::BDCSVD<Mat> svd(B, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vec& sv = svd.singularValues();
    int rank = 0;
    for (int j = 0; j < J; ++j)
        if (sv[j] > rank_tol * sv[0]) ++rank;
    if (rank < J) {
        std::ostringstream msg;
        msg << "orthogonalize_filters: family is rank deficient (effective rank " << rank
            << " of " << J << ")";
        throw std::runtime_error(msg.str());
    }

    // Polar factor U V^T: the closest orthonormal family in the span.
    Mat O = svd.matrixU() * svd.matrixV().transpose() / sqv;
    std::vector<Filter> out;
    out.reserve(J);
    for (int j = 0; j < J; ++j) out.push_back(Filter::tabulated(fine_grid, O.col(j)));
    return out;
}

} // namespace blindspikes
