#pragma once

#include <cstddef>
#include <vector>

namespace sinr {

using NodeId = std::size_t;

// Finite metric over node ids 0..size()-1. Either embedded points of
// arbitrary dimension (L2 distance) or an explicit distance matrix, which
// is validated for symmetry, positivity and the triangle inequality on
// construction.
class MetricSpace {
public:
    static MetricSpace euclidean(std::vector<std::vector<double>> points);
    static MetricSpace fromMatrix(std::vector<std::vector<double>> distances);

    double distance(NodeId u, NodeId v) const;
    std::size_t size() const noexcept { return euclidean_ ? points_.size() : matrix_.size(); }
    bool isEuclidean() const noexcept { return euclidean_; }

    const std::vector<std::vector<double>>& points() const;
    const std::vector<std::vector<double>>& distanceMatrix() const;

private:
    MetricSpace() = default;

    bool euclidean_ = true;
    std::vector<std::vector<double>> points_;
    std::vector<std::vector<double>> matrix_;
};

} // namespace sinr
