#include "tsnpart/topology.hpp"

#include "tsnpart/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

namespace tsnpart {

namespace {

using LinkList = std::vector<std::pair<NodeId, NodeId>>;

bool bridges_connected(unsigned n, const LinkList& links) {
    if (n == 0) {
        return false;
    }
    std::vector<std::vector<NodeId>> adj(n);
    for (auto [u, v] : links) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n, false);
    std::deque<NodeId> queue{0};
    seen[0] = true;
    unsigned reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

LinkList gen_grid(unsigned n) {
    // Most-square factorization: rows = largest divisor <= sqrt(n).
    unsigned rows = 1;
    for (unsigned r = unsigned(std::sqrt(double(n))); r >= 1; --r) {
        if (n % r == 0) {
            rows = r;
            break;
        }
    }
    const unsigned cols = n / rows;
    LinkList links;
    for (unsigned r = 0; r < rows; ++r) {
        for (unsigned c = 0; c < cols; ++c) {
            const NodeId id = r * cols + c;
            if (c + 1 < cols) {
                links.emplace_back(id, id + 1);
            }
            if (r + 1 < rows) {
                links.emplace_back(id, id + cols);
            }
        }
    }
    return links;
}

LinkList gen_erdos_renyi(unsigned n, double p, std::mt19937_64& eng) {
    LinkList links;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng::unit(eng) < p) {
                links.emplace_back(u, v);
            }
        }
    }
    return links;
}

LinkList gen_waxman(unsigned n, double alpha, double beta, std::mt19937_64& eng) {
    std::vector<std::pair<double, double>> pos(n);
    for (auto& [x, y] : pos) {
        x = rng::unit(eng);
        y = rng::unit(eng);
    }
    const double scale = alpha * std::sqrt(2.0); // max distance on the unit square
    LinkList links;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const double dx = pos[u].first - pos[v].first;
            const double dy = pos[u].second - pos[v].second;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (rng::unit(eng) < beta * std::exp(-d / scale)) {
                links.emplace_back(u, v);
            }
        }
    }
    return links;
}

LinkList gen_barabasi_albert(unsigned n, unsigned m, std::mt19937_64& eng) {
    m = std::max(1u, std::min(m, n - 1));
    const unsigned seed_size = std::min(m + 1, n);
    LinkList links;
    std::vector<NodeId> endpoints; // degree-weighted sampling pool
    for (NodeId u = 0; u < seed_size; ++u) {
        for (NodeId v = u + 1; v < seed_size; ++v) {
            links.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    for (NodeId node = seed_size; node < n; ++node) {
        std::set<NodeId> targets;
        while (targets.size() < m) {
            const NodeId t = endpoints[rng::below(eng, endpoints.size())];
            targets.insert(t);
        }
        for (NodeId t : targets) {
            links.emplace_back(t, node);
            endpoints.push_back(t);
            endpoints.push_back(node);
        }
    }
    return links;
}

LinkList gen_small_world(unsigned n, unsigned k, double p, std::mt19937_64& eng) {
    if (n <= k) {
        throw std::invalid_argument("gen_topology: small world needs more bridges than ring degree");
    }
    // Watts-Strogatz: ring with k/2 neighbors per side, then rewire each
    // clockwise edge with probability p.
    std::set<std::pair<NodeId, NodeId>> edges;
    auto canon = [](NodeId a, NodeId b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    const unsigned half = std::max(1u, k / 2);
    for (unsigned j = 1; j <= half; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            edges.insert(canon(u, (u + j) % n));
        }
    }
    for (unsigned j = 1; j <= half; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            const auto old_edge = canon(u, (u + j) % n);
            if (rng::unit(eng) >= p || edges.count(old_edge) == 0) {
                continue;
            }
            // Try a few replacement targets; keep the old edge if the node is
            // effectively saturated.
            for (int attempt = 0; attempt < 32; ++attempt) {
                const NodeId w = NodeId(rng::below(eng, n));
                if (w == u || edges.count(canon(u, w)) != 0) {
                    continue;
                }
                edges.erase(old_edge);
                edges.insert(canon(u, w));
                break;
            }
        }
    }
    return LinkList(edges.begin(), edges.end());
}

} // namespace

std::string to_string(TopologyKind kind) {
    switch (kind) {
    case TopologyKind::Grid: return "grid";
    case TopologyKind::ErdosRenyi: return "erdos_renyi";
    case TopologyKind::Waxman: return "waxman";
    case TopologyKind::BarabasiAlbert: return "barabasi_albert";
    case TopologyKind::SmallWorld: return "small_world";
    }
    throw std::invalid_argument("to_string: unknown topology kind");
}

TopologyKind topology_kind_from_string(const std::string& text) {
    if (text == "grid") return TopologyKind::Grid;
    if (text == "erdos_renyi" || text == "erdos-renyi" || text == "random") return TopologyKind::ErdosRenyi;
    if (text == "waxman") return TopologyKind::Waxman;
    if (text == "barabasi_albert" || text == "barabasi-albert") return TopologyKind::BarabasiAlbert;
    if (text == "small_world" || text == "small-world") return TopologyKind::SmallWorld;
    throw std::invalid_argument("unknown topology kind: " + text);
}

Network gen_topology(TopologyKind kind, unsigned n_bridges, const GeneratorParams& params,
                     std::uint64_t seed) {
    if (n_bridges < 2) {
        throw std::invalid_argument("gen_topology: need at least 2 bridges");
    }

    LinkList bridge_links;
    for (unsigned attempt = 0;; ++attempt) {
        if (attempt >= params.max_attempts) {
            throw std::runtime_error("gen_topology: no connected graph within attempt budget");
        }
        auto eng = rng::make_engine(seed, attempt);
        switch (kind) {
        case TopologyKind::Grid: bridge_links = gen_grid(n_bridges); break;
        case TopologyKind::ErdosRenyi:
            bridge_links = gen_erdos_renyi(n_bridges, params.er_edge_prob, eng);
            break;
        case TopologyKind::Waxman:
            bridge_links = gen_waxman(n_bridges, params.waxman_alpha, params.waxman_beta, eng);
            break;
        case TopologyKind::BarabasiAlbert:
            bridge_links = gen_barabasi_albert(n_bridges, params.ba_attach, eng);
            break;
        case TopologyKind::SmallWorld:
            bridge_links = gen_small_world(n_bridges, params.sw_ring_degree, params.sw_rewire_prob, eng);
            break;
        }
        if (bridges_connected(n_bridges, bridge_links)) {
            break;
        }
    }

    std::vector<NodeKind> kinds(n_bridges, NodeKind::Bridge);
    kinds.resize(2 * std::size_t(n_bridges), NodeKind::EndDevice);
    LinkList links = std::move(bridge_links);
    for (NodeId b = 0; b < n_bridges; ++b) {
        links.emplace_back(b, n_bridges + b);
    }
    const std::string name =
        to_string(kind) + "_" + std::to_string(n_bridges) + "_s" + std::to_string(seed);
    return Network(name, std::move(kinds), std::move(links));
}

} // namespace tsnpart
