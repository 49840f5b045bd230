#include "sinr/metric.hpp"

#include <cmath>

#include "sinr/errors.hpp"

namespace sinr {

namespace {

void checkNodeId(NodeId v, std::size_t n) {
    if (v >= n) throw InputError("invalid node id " + std::to_string(v));
}

} // namespace

MetricSpace MetricSpace::euclidean(std::vector<std::vector<double>> points) {
    MetricSpace m;
    m.euclidean_ = true;
    if (!points.empty()) {
        const std::size_t dim = points.front().size();
        if (dim == 0) throw InputError("euclidean points must have at least one coordinate");
        for (const auto& p : points) {
            if (p.size() != dim) throw InputError("euclidean points must share one dimension");
            for (double c : p)
                if (!std::isfinite(c)) throw InputError("euclidean coordinates must be finite");
        }
    }
    m.points_ = std::move(points);
    // d(u,v) > 0 for u != v: duplicate points are not a metric over ids.
    for (std::size_t u = 0; u < m.points_.size(); ++u)
        for (std::size_t v = u + 1; v < m.points_.size(); ++v)
            if (m.distance(u, v) == 0.0)
                throw InputError("duplicate euclidean points at ids " + std::to_string(u) +
                                 " and " + std::to_string(v));
    return m;
}

MetricSpace MetricSpace::fromMatrix(std::vector<std::vector<double>> distances) {
    const std::size_t n = distances.size();
    for (const auto& row : distances)
        if (row.size() != n) throw InputError("distance matrix must be square");
    for (std::size_t i = 0; i < n; ++i) {
        if (distances[i][i] != 0.0)
            throw InputError("distance matrix diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = distances[i][j];
            if (!std::isfinite(d) || d <= 0.0)
                throw InputError("off-diagonal distances must be positive and finite");
            if (d != distances[j][i])
                throw InputError("distance matrix must be symmetric");
        }
    }
    // Triangle inequality; tiny relative slack so that legitimately tight
    // user matrices are not rejected for rounding.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (distances[i][j] > (distances[i][k] + distances[k][j]) * (1.0 + 1e-12))
                    throw InputError("triangle inequality violated at nodes " +
                                     std::to_string(i) + "," + std::to_string(k) + "," +
                                     std::to_string(j));
    MetricSpace m;
    m.euclidean_ = false;
    m.matrix_ = std::move(distances);
    return m;
}

double MetricSpace::distance(NodeId u, NodeId v) const {
    checkNodeId(u, size());
    checkNodeId(v, size());
    if (euclidean_) {
        const auto& a = points_[u];
        const auto& b = points_[v];
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    return matrix_[u][v];
}

const std::vector<std::vector<double>>& MetricSpace::points() const {
    if (!euclidean_) throw InputError("metric is not euclidean");
    return points_;
}

const std::vector<std::vector<double>>& MetricSpace::distanceMatrix() const {
    if (euclidean_) throw InputError("metric has no explicit distance matrix");
    return matrix_;
}

} // namespace sinr
