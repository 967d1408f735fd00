#include "blindspikes/grid.hpp"

#include <stdexcept>

namespace blindspikes {

SamplingGrid SamplingGrid::regular(Vec origin, Vec step, IVec counts) {
    const int D = static_cast<int>(origin.size());
    if (step.size() != D || counts.size() != D)
        throw std::invalid_argument("SamplingGrid::regular: inconsistent dimensions");
    if ((counts.array() < 1).any())
        throw std::invalid_argument("SamplingGrid::regular: counts must be >= 1");
    if ((step.array() <= 0).any())
        throw std::invalid_argument("SamplingGrid::regular: steps must be positive");

    SamplingGrid g;
    g.dim_ = D;
    g.regular_ = true;
    g.origin_ = std::move(origin);
    g.step_ = std::move(step);
    g.counts_ = std::move(counts);

    Eigen::Index M = 1;
    for (int d = 0; d < D; ++d) M *= g.counts_[d];
    g.points_.resize(M, D);
    IVec idx = IVec::Zero(D);
    for (Eigen::Index m = 0; m < M; ++m) {
        for (int d = 0; d < D; ++d) g.points_(m, d) = g.origin_[d] + idx[d] * g.step_[d];
        for (int d = 0; d < D; ++d) { // axis 0 fastest
            if (++idx[d] < g.counts_[d]) break;
            idx[d] = 0;
        }
    }
    return g;
}

SamplingGrid SamplingGrid::from_points(Mat points) {
    if (points.rows() < 1) throw std::invalid_argument("SamplingGrid: need at least one point");
    if (!points.allFinite()) throw std::invalid_argument("SamplingGrid: points must be finite");
    SamplingGrid g;
    g.dim_ = static_cast<int>(points.cols());
    g.regular_ = false;
    g.points_ = std::move(points);
    return g;
}

const Vec& SamplingGrid::origin() const {
    if (!regular_) throw std::logic_error("SamplingGrid: not a regular grid");
    return origin_;
}

const Vec& SamplingGrid::step() const {
    if (!regular_) throw std::logic_error("SamplingGrid: not a regular grid");
    return step_;
}

const IVec& SamplingGrid::counts() const {
    if (!regular_) throw std::logic_error("SamplingGrid: not a regular grid");
    return counts_;
}

double SamplingGrid::cell_volume() const {
    if (!regular_) throw std::logic_error("SamplingGrid: cell_volume needs a regular grid");
    return step_.prod();
}

double SamplingGrid::min_step() const {
    if (!regular_) throw std::logic_error("SamplingGrid: min_step needs a regular grid");
    return step_.minCoeff();
}

Box SamplingGrid::bounding_box() const {
    Box b;
    b.lo = points_.colwise().minCoeff().transpose();
    b.hi = points_.colwise().maxCoeff().transpose();
    return b;
}

} // namespace blindspikes
