#pragma once

#include "blindspikes/grid.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blindspikes {

/// Spatial modulator f_k of a product-convolution family. Evaluated at the
/// source location when assembling impulse responses.
class Modulator {
  public:
    static Modulator constant(double value = 1.0);
    /// Monomial x_0^{p_0} * ... * x_{D-1}^{p_{D-1}}.
    static Modulator monomial(IVec powers);
    /// Values sampled on a regular grid, multilinear interpolation in between
    /// and constant extension outside (modulators describe smooth fields).
    static Modulator sampled(SamplingGrid grid, Vec values);

    /// Smooth random field: white noise on `grid` convolved with a Gaussian
    /// kernel of standard deviation corr_len_steps grid steps, normalized to
    /// unit RMS over the grid.
    static Modulator smooth_random(const SamplingGrid& grid, double corr_len_steps,
                                   std::uint64_t seed);

    /// All monomials of total degree <= max_degree in D variables, ordered by
    /// degree then lexicographically (1, x_0, x_1, ..., x_0^2, x_0 x_1, ...).
    static std::vector<Modulator> monomials_up_to(int dim, int max_degree);

    double operator()(const Vec& x) const;
    std::string describe() const;

  private:
    enum class Kind { Constant, Monomial, Sampled };
    Kind kind_ = Kind::Constant;
    double value_ = 1.0;
    IVec powers_;
    struct Table {
        SamplingGrid grid;
        Vec values;
    };
    std::shared_ptr<const Table> table_;
};

} // namespace blindspikes
