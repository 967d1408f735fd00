#pragma once

#include "blindspikes/filters.hpp"
#include "blindspikes/grid.hpp"
#include "blindspikes/modulator.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace blindspikes {

/// Discrete measure: a list of weighted point sources.
struct Spike {
    Vec x;
    double w = 1.0;
};

struct SpikeTrain {
    std::vector<Spike> spikes;

    int count() const { return static_cast<int>(spikes.size()); }
    /// Weights must be nonzero; positions must lie in `domain` when given.
    void validate(const Box* domain = nullptr) const;
};

/// Additive noise on the measurement vector.
struct NoiseSpec {
    enum class Model { None, WhiteGaussian, BoundedRelative };
    Model model = Model::None;
    double sigma = 0.0; // white Gaussian std
    double theta = 0.0; // ||b|| = theta * ||y0|| exactly
    std::uint64_t seed = 0;

    static NoiseSpec none() { return {}; }
    static NoiseSpec white_gaussian(double sigma, std::uint64_t seed);
    static NoiseSpec bounded_relative(double theta, std::uint64_t seed);
};

/// Known subspace of operators: convolution filters e_j, optional spatial
/// modulators f_k and the sampling grid. The subspace dimension is I = J*K
/// and basis index i = k*J + j (modulator index outer).
///
/// Orthonormalized families carry filters that are orthonormal for the
/// grid-sampled inner product sum_m u(z_m) v(z_m); this is the L2
/// orthonormalization scaled by sqrt of the measurement cell volume, and it
/// makes the response matrix of a band-limited family at Nyquist rate have
/// orthonormal columns.
class OperatorFamily {
  public:
    enum class Kind { Convolution, ProductConvolution };

    /// Builds a convolution family. When `orthonormalize` is set the filters
    /// are tabulated on a fine grid (fine_factor times the measurement
    /// density, at least 20 samples per filter scale) and replaced by the
    /// orthonormal polar factor, scaled as described above.
    static OperatorFamily convolution(std::vector<Filter> filters, SamplingGrid grid,
                                      bool orthonormalize = true, double fine_factor = 10.0);

    static OperatorFamily product_convolution(std::vector<Filter> filters,
                                              std::vector<Modulator> modulators,
                                              SamplingGrid grid, bool orthonormalize = true,
                                              double fine_factor = 10.0);

    Kind kind() const { return kind_; }
    int J() const { return static_cast<int>(filters_.size()); }
    int K() const { return static_cast<int>(modulators_.size()); }
    int I() const { return J() * K(); }
    Eigen::Index M() const { return grid_.size(); }
    int dim() const { return grid_.dim(); }
    bool orthonormalized() const { return orthonormalized_; }

    const SamplingGrid& grid() const { return grid_; }
    const std::vector<Filter>& filters() const { return filters_; }
    const std::vector<Modulator>& modulators() const { return modulators_; }

    /// Same family observed through a different set of sampling locations
    /// (used for masked / per-source measurement extraction).
    OperatorFamily with_grid(SamplingGrid grid) const;

    /// Gram matrix of the filters under the grid-sampled inner product; close
    /// to identity for orthonormalized families.
    Mat filter_gram() const;

  private:
    Kind kind_ = Kind::Convolution;
    std::vector<Filter> filters_;
    std::vector<Modulator> modulators_;
    SamplingGrid grid_;
    bool orthonormalized_ = false;
};

/// Response matrix E(x), M x I: sampled impulse responses of the basis
/// operators for a source at x. Convolution: column j holds e_j(z_m - x).
/// Product-convolution: column (j,k) holds f_k(x) * e_j(z_m - x), so E(x) has
/// rank at most J and is rank deficient whenever K >= 2.
Mat assemble_response(const OperatorFamily& family, const Vec& x);

/// Convolution block only (M x J), enough to span the measurement range.
Mat assemble_convolution_block(const OperatorFamily& family, const Vec& x);

/// Modulator values at the source location (K-vector; constant 1 for
/// convolution families).
Vec modulator_values(const OperatorFamily& family, const Vec& x);

struct Measurement {
    Vec y;  // noisy
    Vec y0; // noiseless
};

/// y = sum_n w_n E(x_n) gamma + b with the requested noise realization.
Measurement synthesize_measurement(const OperatorFamily& family, const Vec& gamma,
                                   const SpikeTrain& spikes, const NoiseSpec& noise);

/// Noiseless image of the operator applied to the spike train.
Vec apply_operator(const OperatorFamily& family, const Vec& gamma, const SpikeTrain& spikes);

/// Draws the noise vector for a given noiseless measurement.
Vec draw_noise(const NoiseSpec& noise, const Vec& y0);

} // namespace blindspikes
