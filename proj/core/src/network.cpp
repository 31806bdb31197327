#include "tsnpart/network.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace tsnpart {

Network::Network(std::string name, std::vector<NodeKind> nodes,
                 std::vector<std::pair<NodeId, NodeId>> links)
    : name_(std::move(name)), kinds_(std::move(nodes)) {
    const std::size_t n = kinds_.size();
    if (n == 0) {
        throw std::invalid_argument("Network: empty node set");
    }

    links_.reserve(links.size());
    for (auto [u, v] : links) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("Network: link endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("Network: self-loop");
        }
        links_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(links_.begin(), links_.end());
    if (std::adjacent_find(links_.begin(), links_.end()) != links_.end()) {
        throw std::invalid_argument("Network: duplicate link");
    }

    adjacency_.assign(n, {});
    for (auto [u, v] : links_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }

    for (NodeId id = 0; id < n; ++id) {
        if (kinds_[id] == NodeKind::Bridge) {
            ++bridge_count_;
            continue;
        }
        end_devices_.push_back(id);
        if (adjacency_[id].size() != 1) {
            throw std::invalid_argument("Network: end device must have degree 1");
        }
        if (kinds_[adjacency_[id][0]] != NodeKind::Bridge) {
            throw std::invalid_argument("Network: end device must attach to a bridge");
        }
    }

    // Connectivity.
    std::vector<bool> seen(n, false);
    std::deque<NodeId> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : adjacency_[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    if (reached != n) {
        throw std::invalid_argument("Network: graph is not connected");
    }

    dlink_offset_.assign(n + 1, 0);
    for (NodeId id = 0; id < n; ++id) {
        dlink_offset_[id + 1] = dlink_offset_[id] + adjacency_[id].size();
    }
    dlinks_.reserve(directed_link_count());
    for (NodeId id = 0; id < n; ++id) {
        for (NodeId v : adjacency_[id]) {
            dlinks_.push_back(DirectedLink{id, v});
        }
    }
}

bool Network::has_link(NodeId u, NodeId v) const {
    if (u >= node_count() || v >= node_count()) {
        return false;
    }
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Network::directed_link_index(DirectedLink link) const {
    if (link.from >= node_count()) {
        throw std::invalid_argument("directed_link_index: node out of range");
    }
    const auto& nbrs = adjacency_[link.from];
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), link.to);
    if (it == nbrs.end() || *it != link.to) {
        throw std::invalid_argument("directed_link_index: not a network link");
    }
    return dlink_offset_[link.from] + std::size_t(it - nbrs.begin());
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<std::int32_t> dist)
    : n_(n), dist_(std::move(dist)) {
    if (dist_.size() != n_ * n_) {
        throw std::invalid_argument("DistanceMatrix: size mismatch");
    }
}

DistanceMatrix apsp(const Network& net) {
    const std::size_t n = net.node_count();
    std::vector<std::int32_t> dist(n * n, -1);
    std::vector<NodeId> frontier;
    frontier.reserve(n);
    for (NodeId src = 0; src < n; ++src) {
        auto* row = dist.data() + std::size_t(src) * n;
        row[src] = 0;
        frontier.assign(1, src);
        std::int32_t depth = 0;
        std::vector<NodeId> next;
        while (!frontier.empty()) {
            ++depth;
            next.clear();
            for (NodeId u : frontier) {
                for (NodeId v : net.neighbors(u)) {
                    if (row[v] < 0) {
                        row[v] = depth;
                        next.push_back(v);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    // The Network constructor guarantees connectivity, so all entries are set.
    return DistanceMatrix(n, std::move(dist));
}

std::int32_t diameter(const Network& net, const DistanceMatrix& d) {
    if (d.size() != net.node_count()) {
        throw std::invalid_argument("diameter: matrix does not match network");
    }
    std::int32_t best = 0;
    for (NodeId u = 0; u < net.node_count(); ++u) {
        for (NodeId v = u + 1; v < net.node_count(); ++v) {
            best = std::max(best, d.at(u, v));
        }
    }
    return best;
}

} // namespace tsnpart
