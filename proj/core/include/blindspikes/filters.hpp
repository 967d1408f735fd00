#pragma once

#include "blindspikes/grid.hpp"

#include <memory>
#include <string>
#include <vector>

namespace blindspikes {

/// Convolution filter. Analytic kinds are evaluated in closed form; tabulated
/// filters are sampled on a regular grid and evaluated by multilinear
/// interpolation, with zero extension outside the table window.
class Filter {
  public:
    enum class Kind { Gaussian, AnisotropicGaussian, Hat, Sinc, Tabulated };

    static Filter gaussian(double std_dev);
    static Filter anisotropic_gaussian(Mat covariance);
    static Filter hat(double scale);
    static Filter sinc(double scale);
    static Filter tabulated(SamplingGrid table_grid, Vec values);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    /// Characteristic length (std for Gaussians, the scale for hat/sinc,
    /// sqrt of the smallest covariance eigenvalue for anisotropic Gaussians,
    /// the table step for tabulated filters). Used for resolution checks.
    double resolution_scale() const { return scale_; }

    double operator()(const Vec& t) const;
    double operator()(double t) const; // 1D convenience

    /// Multiplies the tabulated values (or the analytic amplitude) by c.
    void scale_values(double c);

    const SamplingGrid* table_grid() const { return table_ ? &table_->grid : nullptr; }
    const Vec* table_values() const { return table_ ? &table_->values : nullptr; }

    std::string kind_name() const;

    // parameter accessors for serialization
    double param_scale() const { return param_; }
    const Mat& covariance() const { return cov_; }

  private:
    struct Table {
        SamplingGrid grid;
        Vec values;
    };

    Kind kind_ = Kind::Gaussian;
    int dim_ = 1;
    double param_ = 0.0;    // std or scale
    double amplitude_ = 1.0;
    double scale_ = 0.0;
    Mat cov_, cov_inv_;
    std::shared_ptr<const Table> table_;
};

/// Builds a regular grid fine enough to tabulate every filter: the step is
/// min(base_step / fine_factor, narrowest scale / 20) per axis and the window
/// spans +-window_scales times the widest filter scale around the origin.
SamplingGrid make_filter_table_grid(const std::vector<Filter>& filters, int dim,
                                    double base_step, double fine_factor = 10.0,
                                    double window_scales = 10.0);

/// Replaces a filter family by an orthonormal one spanning the same space.
/// Filters are sampled on `fine_grid` and the polar factor of the sample
/// matrix is returned, so an already orthonormal family comes back unchanged.
/// Orthonormality is with respect to the L2 inner product approximated on the
/// fine grid, <u,v> = cell_volume * sum_t u(t) v(t); the returned filters are
/// tabulated on `fine_grid`.
///
/// Throws std::invalid_argument when the fine grid undersamples the narrowest
/// filter (fewer than 20 samples per scale) and std::runtime_error when the
/// family is rank deficient (message reports the effective rank).
std::vector<Filter> orthogonalize_filters(const std::vector<Filter>& filters,
                                          const SamplingGrid& fine_grid,
                                          double rank_tol = 1e-10);

} // namespace blindspikes
