#pragma once

#include "tsnpart/network.hpp"
#include "tsnpart/types.hpp"

#include <map>
#include <vector>

namespace tsnpart {

/// Source-rooted tree over network nodes covering a destination set. Frames
/// travel root-outward and duplicate only at branch points.
class MulticastTree {
public:
    MulticastTree() = default;
    MulticastTree(NodeId root, std::map<NodeId, NodeId> parent, std::vector<NodeId> destinations);

    NodeId root() const { return root_; }
    const std::map<NodeId, NodeId>& parent_map() const { return parent_; }
    const std::vector<NodeId>& destinations() const { return destinations_; }

    std::size_t edge_count() const { return parent_.size(); }
    bool contains(NodeId node) const { return node == root_ || parent_.count(node) != 0; }

    /// Directed edges parent->child in breadth-first order from the root,
    /// children visited in ascending id order. The fixed order makes every
    /// expansion of this tree deterministic.
    const std::vector<DirectedLink>& edges_bfs() const { return edges_bfs_; }

    /// Checks tree shape against a concrete network: every edge is a link,
    /// every node reaches the root, every leaf is a destination.
    void validate(const Network& net) const;

    friend bool operator==(const MulticastTree& a, const MulticastTree& b) {
        return a.root_ == b.root_ && a.parent_ == b.parent_ && a.destinations_ == b.destinations_;
    }

private:
    NodeId root_{};
    std::map<NodeId, NodeId> parent_;
    std::vector<NodeId> destinations_; // sorted
    std::vector<DirectedLink> edges_bfs_;
};

/// Intermediate-node-distance construction: insert the shortest path to the
/// destination farthest from the source, then attach the remaining
/// destinations in decreasing source-distance order, each via a shortest path
/// to the nearest tree node. Attachment ties prefer the node closer to the
/// root, then the smaller node id; path steps take the smallest feasible
/// next hop.
MulticastTree build_tree(const Network& net, const DistanceMatrix& d, NodeId source,
                         const std::vector<NodeId>& dests);

} // namespace tsnpart
