#pragma once

#include "blindspikes/projector.hpp"

namespace blindspikes {

/// H(x) = ||Pi_{R(x)} y||^2 / 2. Equals ||y||^2/2 minus the optimal residual
/// of min_alpha ||E(x) alpha - y||^2 / 2.
double correlation_objective(const OperatorFamily& family, const Vec& y, const Vec& x,
                             double rank_tol = 1e-10);

/// Range bases precomputed on a coarse grid. Building the bases dominates the
/// cost of repeated localizations, so a cache is shared across trials for a
/// fixed family / grid pair.
class ProjectorCache {
  public:
    ProjectorCache() = default;
    ProjectorCache(const OperatorFamily& family, SamplingGrid coarse, double rank_tol = 1e-10);

    const SamplingGrid& grid() const { return grid_; }
    const Projector& at(Eigen::Index g) const { return projectors_[g]; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(projectors_.size()); }
    bool rank_varies() const { return rank_varies_; }

  private:
    SamplingGrid grid_;
    std::vector<Projector> projectors_;
    bool rank_varies_ = false;
};

/// Correlation objective sampled on a coarse grid.
struct CorrelationField {
    SamplingGrid grid;
    Vec values;
    double y_norm2 = 0.0; // ||y||^2

    Eigen::Index argmax() const;
};

CorrelationField build_correlation_field(const ProjectorCache& cache, const Vec& y);

} // namespace blindspikes
