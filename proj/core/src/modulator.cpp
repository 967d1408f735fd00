#include "blindspikes/modulator.hpp"

#include "blindspikes/rng.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace blindspikes {

Modulator Modulator::constant(double value) {
    Modulator m;
    m.kind_ = Kind::Constant;
    m.value_ = value;
    return m;
}

Modulator Modulator::monomial(IVec powers) {
    if ((powers.array() < 0).any())
        throw std::invalid_argument("Modulator::monomial: powers must be nonnegative");
    Modulator m;
    m.kind_ = Kind::Monomial;
    m.powers_ = std::move(powers);
    return m;
}

Modulator Modulator::sampled(SamplingGrid grid, Vec values) {
    if (!grid.is_regular())
        throw std::invalid_argument("Modulator::sampled: grid must be regular");
    if (values.size() != grid.size())
        throw std::invalid_argument("Modulator::sampled: value count does not match grid");
    Modulator m;
    m.kind_ = Kind::Sampled;
    auto tab = std::make_shared<Table>();
    tab->grid = std::move(grid);
    tab->values = std::move(values);
    m.table_ = std::move(tab);
    return m;
}

Modulator Modulator::smooth_random(const SamplingGrid& grid, double corr_len_steps,
                                   std::uint64_t seed) {
    if (grid.dim() != 1)
        throw std::invalid_argument("Modulator::smooth_random: only 1D grids supported");
    if (!(corr_len_steps > 0))
        throw std::invalid_argument("Modulator::smooth_random: correlation length must be positive");
    const Eigen::Index M = grid.size();
    Rng rng(seed);
    Vec white(M);
    for (Eigen::Index i = 0; i < M; ++i) white[i] = rng.normal();

    const int half = static_cast<int>(std::ceil(4.0 * corr_len_steps));
    Vec kernel(2 * half + 1);
    for (int k = -half; k <= half; ++k)
        kernel[k + half] = std::exp(-0.5 * k * k / (corr_len_steps * corr_len_steps));

    Vec smooth = Vec::Zero(M);
    for (Eigen::Index i = 0; i < M; ++i) {
        double acc = 0.0;
        for (int k = -half; k <= half; ++k) {
            Eigen::Index j = i + k;
            if (j < 0 || j >= M) continue;
            acc += kernel[k + half] * white[j];
        }
        smooth[i] = acc;
    }
    double rms = std::sqrt(smooth.squaredNorm() / static_cast<double>(M));
    if (rms > 0) smooth /= rms;
    return sampled(grid, smooth);
}

std::vector<Modulator> Modulator::monomials_up_to(int dim, int max_degree) {
    std::vector<Modulator> out;
    std::vector<IVec> current{IVec::Zero(dim)};
    out.push_back(monomial(IVec::Zero(dim)));
    for (int deg = 1; deg <= max_degree; ++deg) {
        std::vector<IVec> next;
        for (const IVec& p : current) {
            // raise the last nonzero axis or any later one to avoid duplicates
            int start = 0;
            for (int d = dim - 1; d >= 0; --d)
                if (p[d] > 0) { start = d; break; }
            for (int d = start; d < dim; ++d) {
                IVec q = p;
                q[d] += 1;
                next.push_back(q);
            }
        }
        // deduplicate (the construction above can still repeat)
        std::vector<IVec> uniq;
        for (const IVec& q : next) {
            bool seen = false;
            for (const IVec& u : uniq)
                if ((u.array() == q.array()).all()) { seen = true; break; }
            if (!seen) uniq.push_back(q);
        }
        for (const IVec& q : uniq) out.push_back(monomial(q));
        current = std::move(uniq);
    }
    return out;
}

double Modulator::operator()(const Vec& x) const {
    switch (kind_) {
        case Kind::Constant:
            return value_;
        case Kind::Monomial: {
            double v = 1.0;
            for (int d = 0; d < powers_.size(); ++d)
                for (int p = 0; p < powers_[d]; ++p) v *= x[d];
            return v;
        }
        case Kind::Sampled: {
            const SamplingGrid& g = table_->grid;
            const int D = g.dim();
            int idx[4];
            double frac[4];
            for (int d = 0; d < D; ++d) {
                double u = (x[d] - g.origin()[d]) / g.step()[d];
                // constant extension at the boundary
                u = std::min(std::max(u, 0.0), static_cast<double>(g.counts()[d] - 1));
                int i = static_cast<int>(u);
                if (i >= g.counts()[d] - 1) i = std::max(0, g.counts()[d] - 2);
                idx[d] = i;
                frac[d] = u - i;
            }
            double acc = 0.0;
            const int corners = 1 << D;
            for (int c = 0; c < corners; ++c) {
                double w = 1.0;
                Eigen::Index lin = 0, stride = 1;
                for (int d = 0; d < D; ++d) {
                    int bit = (c >> d) & 1;
                    w *= bit ? frac[d] : 1.0 - frac[d];
                    lin += std::min<Eigen::Index>(idx[d] + bit, g.counts()[d] - 1) * stride;
                    stride *= g.counts()[d];
                }
                acc += w * table_->values[lin];
            }
            return acc;
        }
    }
    return 0.0;
}

std::string Modulator::describe() const {
    switch (kind_) {
        case Kind::Constant: {
            std::ostringstream s;
            s << "constant(" << value_ << ")";
            return s.str();
        }
        case Kind::Monomial: {
            std::ostringstream s;
            s << "monomial(";
            for (int d = 0; d < powers_.size(); ++d) s << (d ? "," : "") << powers_[d];
            s << ")";
            return s.str();
        }
        case Kind::Sampled:
            return "sampled";
    }
    return "?";
}

} // namespace blindspikes
