#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sinr/metric.hpp"

namespace sinr {

// Physical-model parameters: path-loss exponent alpha, SINR threshold beta,
// ambient noise.
struct InstanceParams {
    double alpha = 3.0;
    double beta = 1.0;
    double noise = 0.0;

    void validate() const;
};

// Directed sender->receiver request with its metric length cached.
struct Link {
    NodeId sender = 0;
    NodeId receiver = 0;
    double length = 0.0;
};

// A problem instance: metric, physical parameters, and the request set.
// Immutable by convention after construction; request indices are stable
// and used for tie-breaking throughout.
struct Instance {
    MetricSpace metric;
    InstanceParams params;
    std::vector<Link> requests;

    Link makeLink(NodeId sender, NodeId receiver) const;
    void addLink(NodeId sender, NodeId receiver) { requests.push_back(makeLink(sender, receiver)); }
    std::size_t size() const noexcept { return requests.size(); }
    const Link& link(std::size_t index) const;

    // All request indices 0..size()-1, the set R.
    std::vector<std::size_t> allLinks() const;
};

// Strictly positive transmit powers keyed by request index.
class PowerAssignment {
public:
    void set(std::size_t link, double power);
    double at(std::size_t link) const;
    bool contains(std::size_t link) const { return powers_.contains(link); }
    std::size_t size() const noexcept { return powers_.size(); }
    bool empty() const noexcept { return powers_.empty(); }
    void scale(double factor);
    const std::map<std::size_t, double>& items() const noexcept { return powers_; }

private:
    std::map<std::size_t, double> powers_;
};

} // namespace sinr
