#pragma once

#include <Eigen/Dense>
#include <vector>

namespace blindspikes {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using IVec = Eigen::VectorXi;

/// Axis-aligned box domain in R^D.
struct Box {
    Vec lo;
    Vec hi;

    int dim() const { return static_cast<int>(lo.size()); }
    double extent() const { return (hi - lo).maxCoeff(); }
    Vec center() const { return 0.5 * (lo + hi); }
    bool contains(const Vec& x, double slack = 0.0) const {
        for (int d = 0; d < dim(); ++d)
            if (x[d] < lo[d] - slack || x[d] > hi[d] + slack) return false;
        return true;
    }
    Vec clamp(Vec x) const {
        for (int d = 0; d < dim(); ++d) x[d] = std::min(std::max(x[d], lo[d]), hi[d]);
        return x;
    }
};

/// Set of sampling locations z_1..z_M, either a regular Cartesian grid or an
/// explicit point list. Regular grids enumerate points with axis 0 fastest.
class SamplingGrid {
  public:
    static SamplingGrid regular(Vec origin, Vec step, IVec counts);
    static SamplingGrid from_points(Mat points); // M x D

    int dim() const { return dim_; }
    Eigen::Index size() const { return points_.rows(); }
    bool is_regular() const { return regular_; }

    const Mat& points() const { return points_; }
    Vec point(Eigen::Index m) const { return points_.row(m).transpose(); }

    // Regular-layout accessors (throw if not regular).
    const Vec& origin() const;
    const Vec& step() const;
    const IVec& counts() const;

    /// Product of the per-axis steps, i.e. the cell hyper-volume.
    double cell_volume() const;
    double min_step() const;

    Box bounding_box() const;

  private:
    int dim_ = 0;
    bool regular_ = false;
    Vec origin_, step_;
    IVec counts_;
    Mat points_;
};

} // namespace blindspikes
