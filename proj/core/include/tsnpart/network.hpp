#pragma once

#include "tsnpart/types.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tsnpart {

/// Undirected network of bridges and end devices. Immutable after
/// construction; the constructor canonicalizes the link list (u < v, sorted)
/// and enforces the model invariants: connected, no self-loops or duplicate
/// links, and every end device attached to exactly one bridge.
class Network {
public:
    Network(std::string name, std::vector<NodeKind> nodes,
            std::vector<std::pair<NodeId, NodeId>> links);

    const std::string& name() const { return name_; }
    std::size_t node_count() const { return kinds_.size(); }
    std::size_t bridge_count() const { return bridge_count_; }

    NodeKind kind(NodeId id) const { return kinds_.at(id); }
    bool is_bridge(NodeId id) const { return kind(id) == NodeKind::Bridge; }
    bool is_end_device(NodeId id) const { return kind(id) == NodeKind::EndDevice; }

    const std::vector<NodeKind>& node_kinds() const { return kinds_; }
    const std::vector<NodeId>& end_devices() const { return end_devices_; }

    /// Neighbors sorted ascending.
    const std::vector<NodeId>& neighbors(NodeId id) const { return adjacency_.at(id); }

    /// Canonical link list: u < v, sorted lexicographically.
    const std::vector<std::pair<NodeId, NodeId>>& links() const { return links_; }

    bool has_link(NodeId u, NodeId v) const;

    /// Directed links are indexed densely: one id per (node, neighbor) pair,
    /// grouped by tail node. Used as occupancy keys.
    std::size_t directed_link_count() const { return 2 * links_.size(); }
    std::size_t directed_link_index(DirectedLink link) const;
    DirectedLink directed_link_at(std::size_t index) const { return dlinks_.at(index); }

private:
    std::string name_;
    std::vector<NodeKind> kinds_;
    std::vector<std::pair<NodeId, NodeId>> links_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::size_t> dlink_offset_;
    std::vector<DirectedLink> dlinks_;
    std::size_t bridge_count_ = 0;
};

/// Hop distances between all node pairs of one network.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(std::size_t n, std::vector<std::int32_t> dist);

    std::int32_t at(NodeId u, NodeId v) const { return dist_[std::size_t(u) * n_ + v]; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::int32_t> dist_;
};

/// All-pairs hop distances by per-source breadth-first search.
DistanceMatrix apsp(const Network& net);

std::int32_t diameter(const Network& net, const DistanceMatrix& d);

} // namespace tsnpart
