#include "blindspikes/correlation.hpp"

#include <stdexcept>

namespace blindspikes {

double correlation_objective(const OperatorFamily& family, const Vec& y, const Vec& x,
                             double rank_tol) {
    if (y.size() != family.M())
        throw std::invalid_argument("correlation_objective: measurement length mismatch");
    Projector p = family_range_basis(family, x, rank_tol);
    return 0.5 * (p.U.transpose() * y).squaredNorm();
}

ProjectorCache::ProjectorCache(const OperatorFamily& family, SamplingGrid coarse,
                               double rank_tol)
    : grid_(std::move(coarse)) {
    const Eigen::Index G = grid_.size();
    projectors_.reserve(G);
    int first_rank = -1;
    for (Eigen::Index g = 0; g < G; ++g) {
        projectors_.push_back(family_range_basis(family, grid_.point(g), rank_tol));
        if (first_rank < 0) first_rank = projectors_.back().rank;
        if (projectors_.back().rank != first_rank) rank_varies_ = true;
    }
}

Eigen::Index CorrelationField::argmax() const {
    Eigen::Index best = 0;
    values.maxCoeff(&best);
    return best;
}

CorrelationField build_correlation_field(const ProjectorCache& cache, const Vec& y) {
    CorrelationField field;
    field.grid = cache.grid();
    field.y_norm2 = y.squaredNorm();
    field.values.resize(cache.size());
    for (Eigen::Index g = 0; g < cache.size(); ++g)
        field.values[g] = 0.5 * (cache.at(g).U.transpose() * y).squaredNorm();
    return field;
}

} // namespace blindspikes
